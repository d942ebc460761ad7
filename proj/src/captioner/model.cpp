#include "semkg/captioner/model.hpp"

#include <cmath>

#include "semkg/captioner/training.hpp"
#include "semkg/error.hpp"
#include "semkg/rng.hpp"

namespace semkg::captioner {

namespace {

constexpr double kInitRange = 0.08;

void check_dims(const ModelDims& dims) {
  if (dims.vocab_size < 4 || dims.embed_size < 1 || dims.feature_size < 1 ||
      dims.hidden_size < 1 || dims.max_caption_len < 1) {
    raise(ErrorCode::InvalidInput, "caption model dimensions must be positive "
                                   "(vocab_size at least 4)");
  }
}

void fill_uniform(SeededRng& rng, double* data, Eigen::Index size) {
  for (Eigen::Index i = 0; i < size; ++i) {
    data[i] = rng.uniform(-kInitRange, kInitRange);
  }
}

TensorView matrix_view(const std::string& name, Eigen::MatrixXd& m) {
  return {name, m.data(), m.size(), m.rows(), m.cols()};
}

TensorView vector_view(const std::string& name, Eigen::VectorXd& v) {
  return {name, v.data(), v.size(), v.size(), 1};
}

void append_lstm_views(std::vector<TensorView>& views, const std::string& prefix,
                       LstmParameters& p) {
  views.push_back(matrix_view(prefix + ".w_ii", p.w_ii));
  views.push_back(matrix_view(prefix + ".w_if", p.w_if));
  views.push_back(matrix_view(prefix + ".w_ig", p.w_ig));
  views.push_back(matrix_view(prefix + ".w_io", p.w_io));
  views.push_back(matrix_view(prefix + ".w_hi", p.w_hi));
  views.push_back(matrix_view(prefix + ".w_hf", p.w_hf));
  views.push_back(matrix_view(prefix + ".w_hg", p.w_hg));
  views.push_back(matrix_view(prefix + ".w_ho", p.w_ho));
  views.push_back(vector_view(prefix + ".b_ii", p.b_ii));
  views.push_back(vector_view(prefix + ".b_if", p.b_if));
  views.push_back(vector_view(prefix + ".b_ig", p.b_ig));
  views.push_back(vector_view(prefix + ".b_io", p.b_io));
  views.push_back(vector_view(prefix + ".b_hi", p.b_hi));
  views.push_back(vector_view(prefix + ".b_hf", p.b_hf));
  views.push_back(vector_view(prefix + ".b_hg", p.b_hg));
  views.push_back(vector_view(prefix + ".b_ho", p.b_ho));
}

// CaptionModel and ModelGradients share member names, so one builder
// defines the canonical tensor order for both.
template <class Tensors>
std::vector<TensorView> build_views(Tensors& t) {
  std::vector<TensorView> views;
  views.push_back(matrix_view("embedding", t.embedding));
  append_lstm_views(views, "encoder", t.encoder);
  append_lstm_views(views, "decoder", t.decoder);
  views.push_back(matrix_view("output_weight", t.output_weight));
  views.push_back(vector_view("output_bias", t.output_bias));
  return views;
}

Eigen::VectorXd softmax(const Eigen::VectorXd& logits) {
  const double peak = logits.maxCoeff();
  Eigen::VectorXd exps = (logits.array() - peak).exp().matrix();
  return exps / exps.sum();
}

double log_softmax_at(const Eigen::VectorXd& logits, int index) {
  const double peak = logits.maxCoeff();
  const double log_sum = std::log((logits.array() - peak).exp().sum());
  return logits[index] - peak - log_sum;
}

}  // namespace

CaptionModel init_caption_model(const ModelDims& dims, uint64_t seed) {
  check_dims(dims);
  CaptionModel model;
  model.dims = dims;
  model.init_seed = seed;
  model.embedding.resize(dims.vocab_size, dims.embed_size);
  model.encoder = LstmParameters::zeros(dims.hidden_size, dims.feature_size);
  model.decoder = LstmParameters::zeros(dims.hidden_size, dims.embed_size);
  model.output_weight.resize(dims.vocab_size, dims.hidden_size);
  model.output_bias.resize(dims.vocab_size);

  SeededRng rng(seed);
  for (const auto& view : tensor_views(model)) {
    fill_uniform(rng, view.data, view.size);
  }
  return model;
}

std::vector<TensorView> tensor_views(CaptionModel& model) {
  return build_views(model);
}

std::vector<TensorView> tensor_views(ModelGradients& gradients) {
  return build_views(gradients);
}

EncodingVector encode(const CaptionModel& model, const FeatureSequence& seq) {
  if (seq.frames.empty()) {
    raise(ErrorCode::InvalidInput,
          "cannot encode empty feature sequence '" + seq.clip_id + "'");
  }
  LstmState state = LstmState::zeros(model.dims.hidden_size);
  for (const auto& frame : seq.frames) {
    state = lstm_step(model.encoder, frame, state).state;
  }
  return EncodingVector{state.h, state.c};
}

DecodeStep decode_step(const CaptionModel& model, int prev_token,
                       const LstmState& state) {
  if (prev_token < 0 || prev_token >= model.dims.vocab_size) {
    raise(ErrorCode::InvalidInput,
          "token id " + std::to_string(prev_token) +
              " outside vocabulary of size " +
              std::to_string(model.dims.vocab_size));
  }
  const Eigen::VectorXd input = model.embedding.row(prev_token).transpose();
  LstmStepResult step = lstm_step(model.decoder, input, state);
  const Eigen::VectorXd logits =
      model.output_weight * step.state.h + model.output_bias;
  return DecodeStep{softmax(logits), std::move(step.state)};
}

TokenSequence decode_greedy(const CaptionModel& model, const EncodingVector& v) {
  TokenSequence sequence;
  LstmState state{v.h, v.c};
  int prev = Vocabulary::kSos;
  for (int k = 0; k < model.dims.max_caption_len; ++k) {
    DecodeStep step = decode_step(model, prev, state);
    // argmax with lowest-id tie break
    int best = 0;
    for (int id = 1; id < model.dims.vocab_size; ++id) {
      if (step.probabilities[id] > step.probabilities[best]) best = id;
    }
    sequence.ids.push_back(best);
    if (best == Vocabulary::kEoc) {
      sequence.terminated = true;
      break;
    }
    state = std::move(step.state);
    prev = best;
  }
  return sequence;
}

double sentence_log_prob(const CaptionModel& model, const EncodingVector& v,
                         const TokenSequence& target) {
  if (target.ids.empty()) {
    raise(ErrorCode::InvalidInput, "sentence_log_prob needs a non-empty target");
  }
  double total = 0.0;
  LstmState state{v.h, v.c};
  int prev = Vocabulary::kSos;
  for (int token : target.ids) {
    if (token < 0 || token >= model.dims.vocab_size) {
      raise(ErrorCode::InvalidInput,
            "target token id " + std::to_string(token) +
                " outside vocabulary of size " +
                std::to_string(model.dims.vocab_size));
    }
    const Eigen::VectorXd input = model.embedding.row(prev).transpose();
    LstmStepResult step = lstm_step(model.decoder, input, state);
    const Eigen::VectorXd logits =
        model.output_weight * step.state.h + model.output_bias;
    total += log_softmax_at(logits, token);
    state = std::move(step.state);
    prev = token;
  }
  return total;
}

}  // namespace semkg::captioner
