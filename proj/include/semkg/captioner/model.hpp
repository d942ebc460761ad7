#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semkg/captioner/lstm.hpp"
#include "semkg/captioner/types.hpp"

namespace semkg::captioner {

struct ModelDims {
  int vocab_size = 0;        // V
  int embed_size = 0;        // E
  int feature_size = 0;      // D
  int hidden_size = 0;       // H
  int max_caption_len = 15;  // K

  bool operator==(const ModelDims&) const = default;
};

// All learnable parameters of the encoder-decoder captioner.
struct CaptionModel {
  ModelDims dims;
  uint64_t init_seed = 0;

  Eigen::MatrixXd embedding;      // V x E, one row per token
  LstmParameters encoder;         // feature_size -> hidden_size
  LstmParameters decoder;         // embed_size -> hidden_size
  Eigen::MatrixXd output_weight;  // V x H
  Eigen::VectorXd output_bias;    // V
};

// Uniform init in [-0.08, 0.08] from the given seed.
CaptionModel init_caption_model(const ModelDims& dims, uint64_t seed);

// Final encoder state after consuming the whole clip; the decoder is
// conditioned on this.
struct EncodingVector {
  Eigen::VectorXd h;
  Eigen::VectorXd c;
};

// Named flat view over one parameter tensor. The declared order of
// tensor_views() is the canonical parameter order shared by the
// checkpoint format, the optimizer and the gradient check. data points at
// Eigen's column-major storage; rows/cols give the logical shape (cols = 1
// for vectors).
struct TensorView {
  std::string name;
  double* data;
  Eigen::Index size;
  Eigen::Index rows;
  Eigen::Index cols;
};

std::vector<TensorView> tensor_views(CaptionModel& model);

// Folds lstm_step over the frames from a zero initial state.
EncodingVector encode(const CaptionModel& model, const FeatureSequence& seq);

struct DecodeStep {
  Eigen::VectorXd probabilities;  // length V, sums to 1
  LstmState state;
};

// Embeds prev_token, advances the decoder cell, projects to vocabulary
// logits and applies softmax.
DecodeStep decode_step(const CaptionModel& model, int prev_token,
                       const LstmState& state);

// Greedy argmax decoding from `<sos>`, lowest id on ties; stops on `eoc`
// or after max_caption_len tokens.
TokenSequence decode_greedy(const CaptionModel& model, const EncodingVector& v);

// Sum over positions of log p(s_k | v, s_1..s_{k-1}) with teacher-forced
// inputs. Always <= 0.
double sentence_log_prob(const CaptionModel& model, const EncodingVector& v,
                         const TokenSequence& target);

}  // namespace semkg::captioner
