#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semkg/captioner/model.hpp"
#include "semkg/diagnostics.hpp"
#include "semkg/kg/graph.hpp"
#include "semkg/ontology/store.hpp"
#include "semkg/parser/ere_parser.hpp"

namespace semkg::pipeline {

struct PipelineConfig {
  std::string model_path;
  std::string vocab_path;
  std::string lexicon_path;
  std::string ontology_path;
  int window = 30;  // W, frames per clip
  int stride = 15;  // S, frames between clip starts
  std::string output_dir;
  uint64_t seed = 0;
};

// Sliding windows [0,W), [S,S+W), ...; a final partial window is dropped.
// Clip ids get the window start index as a suffix.
std::vector<captioner::FeatureSequence> segment(
    const captioner::FeatureSequence& stream, int window, int stride);

struct ClipResult {
  std::string clip_id;
  std::string caption;
  std::vector<kg::EreTuple> tuples;
  std::vector<Diagnostic> diagnostics;
  kg::KnowledgeGraph graph;
};

// Clip -> caption sentence. The production captioner wraps greedy decoding
// of a trained model; tests may substitute any function.
using CaptionFn = std::function<std::string(const captioner::FeatureSequence&)>;

// Observer invoked once per ontology query, for query-count probes.
using QueryProbe = std::function<void(const std::string& entity)>;

// Greedy-decode captioner over a model/vocabulary pair. Captures both by
// reference; the caller keeps them alive.
CaptionFn model_captioner(const captioner::CaptionModel& model,
                          const captioner::Vocabulary& vocab);

// One clip through the whole chain: caption, parse to E-R-E tuples, merge
// the skeleton, then query the ontology once per distinct entity (first-
// appearance order) and merge the returned E-A-V tuples.
ClipResult complete_graph(const captioner::FeatureSequence& clip,
                          const CaptionFn& captioner,
                          const parser::Lexicon& lexicon,
                          const ontology::OntologyStore& onto,
                          const QueryProbe& probe = {});

struct RunOutput {
  std::vector<ClipResult> clips;
  std::vector<std::string> files_written;  // relative to output_dir
};

// Loads every resource up front, segments the stream, completes each clip
// and writes <clip_id>.json, <clip_id>.dot and manifest.json into
// output_dir. Deterministic: identical inputs and seed give byte-identical
// files.
RunOutput run(const PipelineConfig& config, const std::string& stream_path);

}  // namespace semkg::pipeline
