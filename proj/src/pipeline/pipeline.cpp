#include "semkg/pipeline/pipeline.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "semkg/captioner/checkpoint.hpp"
#include "semkg/captioner/io.hpp"
#include "semkg/error.hpp"
#include "semkg/kg/serialize.hpp"
#include "semkg/parser/lexicon.hpp"

namespace semkg::pipeline {

std::vector<captioner::FeatureSequence> segment(
    const captioner::FeatureSequence& stream, int window, int stride) {
  if (window < 1 || stride < 1) {
    raise(ErrorCode::InvalidInput, "window and stride must be at least 1");
  }
  const int n = stream.frame_count();
  if (window > n) {
    raise(ErrorCode::InvalidInput,
          "window " + std::to_string(window) + " exceeds stream length " +
              std::to_string(n));
  }
  std::vector<captioner::FeatureSequence> clips;
  for (int start = 0; start + window <= n; start += stride) {
    captioner::FeatureSequence clip;
    clip.clip_id = stream.clip_id + "_" + std::to_string(start);
    clip.frames.assign(stream.frames.begin() + start,
                       stream.frames.begin() + start + window);
    clips.push_back(std::move(clip));
  }
  return clips;
}

CaptionFn model_captioner(const captioner::CaptionModel& model,
                          const captioner::Vocabulary& vocab) {
  return [&model, &vocab](const captioner::FeatureSequence& clip) {
    const captioner::EncodingVector v = captioner::encode(model, clip);
    const captioner::TokenSequence tokens = captioner::decode_greedy(model, v);
    return vocab.sentence_from_ids(tokens.ids);
  };
}

ClipResult complete_graph(const captioner::FeatureSequence& clip,
                          const CaptionFn& captioner,
                          const parser::Lexicon& lexicon,
                          const ontology::OntologyStore& onto,
                          const QueryProbe& probe) {
  ClipResult result;
  result.clip_id = clip.clip_id;
  result.graph.clip_id = clip.clip_id;

  result.caption = captioner(clip);
  parser::EreParseResult parsed =
      parser::parse_ere(parser::tag(parser::tokenize(result.caption), lexicon));
  result.tuples = std::move(parsed.tuples);
  result.diagnostics = std::move(parsed.diagnostics);

  kg::merge_ere(result.graph, result.tuples);

  // each distinct entity is queried once, in first-appearance order
  std::vector<std::string> entities;
  const auto remember = [&entities](const std::string& entity) {
    for (const auto& seen : entities) {
      if (seen == entity) return;
    }
    entities.push_back(entity);
  };
  for (const auto& tuple : result.tuples) {
    remember(tuple.subject);
    remember(tuple.object);
  }

  for (const auto& entity : entities) {
    if (probe) probe(entity);
    ontology::QueryResult answer = ontology::query(onto, entity);
    for (auto& diagnostic : answer.diagnostics) {
      result.diagnostics.push_back(std::move(diagnostic));
    }
    if (answer.resolved_class) {
      kg::set_node_class(result.graph, entity, *answer.resolved_class);
    }
    kg::merge_eav(result.graph, answer.tuples);
  }
  return result;
}

namespace {

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) raise(ErrorCode::Io, "write failure on '" + path.string() + "'");
}

}  // namespace

RunOutput run(const PipelineConfig& config, const std::string& stream_path) {
  if (config.output_dir.empty()) {
    raise(ErrorCode::InvalidInput, "output directory not set");
  }

  // Resources load before any clip work so startup errors surface first.
  const captioner::CaptionModel model =
      captioner::load_checkpoint(config.model_path);
  const captioner::Vocabulary vocab =
      captioner::load_vocabulary(config.vocab_path);
  if (vocab.size() != model.dims.vocab_size) {
    raise(ErrorCode::InvalidInput,
          "vocabulary size " + std::to_string(vocab.size()) +
              " does not match checkpoint vocab_size " +
              std::to_string(model.dims.vocab_size));
  }
  const parser::Lexicon lexicon = parser::load_lexicon(config.lexicon_path);
  const ontology::OntologyStore onto =
      ontology::load_ontology_file(config.ontology_path);
  const captioner::FeatureSequence stream =
      captioner::read_feature_file(stream_path);

  std::filesystem::create_directories(config.output_dir);
  const std::filesystem::path out_dir(config.output_dir);

  RunOutput output;
  const CaptionFn captioner_fn = model_captioner(model, vocab);
  nlohmann::json manifest_clips = nlohmann::json::array();

  for (const auto& clip : segment(stream, config.window, config.stride)) {
    ClipResult result = complete_graph(clip, captioner_fn, lexicon, onto);

    const std::string json_name = result.clip_id + ".json";
    const std::string dot_name = result.clip_id + ".dot";
    write_text_file(out_dir / json_name, kg::to_json(result.graph));
    write_text_file(out_dir / dot_name, kg::to_dot(result.graph));
    output.files_written.push_back(json_name);
    output.files_written.push_back(dot_name);

    nlohmann::json diagnostics = nlohmann::json::array();
    for (const auto& diagnostic : result.diagnostics) {
      diagnostics.push_back({{"code", diagnostic_code_name(diagnostic.code)},
                             {"detail", diagnostic.detail}});
    }
    manifest_clips.push_back({{"clip_id", result.clip_id},
                              {"caption", result.caption},
                              {"diagnostics", std::move(diagnostics)},
                              {"files", {{"json", json_name}, {"dot", dot_name}}}});
    output.clips.push_back(std::move(result));
  }

  nlohmann::json manifest{
      {"clip_count", output.clips.size()},
      {"clips", std::move(manifest_clips)},
      {"config",
       {{"seed", config.seed}, {"stride", config.stride}, {"window", config.window}}},
      {"source_frames", stream.frame_count()}};
  write_text_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
  output.files_written.push_back("manifest.json");
  return output;
}

}  // namespace semkg::pipeline
