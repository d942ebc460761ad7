#include "semkg/captioner/training.hpp"

#include <cmath>
#include <numeric>

#include "semkg/error.hpp"
#include "semkg/rng.hpp"

namespace semkg::captioner {

namespace {

Eigen::VectorXd stable_softmax(const Eigen::VectorXd& logits) {
  const double peak = logits.maxCoeff();
  Eigen::VectorXd exps = (logits.array() - peak).exp().matrix();
  return exps / exps.sum();
}

// Everything the backward pass needs from one clip's forward unroll.
struct ClipTape {
  // encoder: states[t] is the state before consuming frame t
  std::vector<LstmState> enc_states;
  std::vector<GateActivations> enc_gates;
  // decoder: states[k] is the state before emitting position k
  std::vector<LstmState> dec_states;
  std::vector<GateActivations> dec_gates;
  std::vector<int> input_ids;               // <sos>, s_1, ..., s_{K-1}
  std::vector<Eigen::VectorXd> probs;       // softmax output per position
  double nll = 0.0;
};

ClipTape forward_clip(const CaptionModel& model, const TrainingExample& example) {
  if (example.features.frames.empty()) {
    raise(ErrorCode::InvalidInput,
          "clip '" + example.features.clip_id + "' has no frames");
  }
  if (example.target.ids.empty()) {
    raise(ErrorCode::InvalidInput,
          "clip '" + example.features.clip_id + "' has an empty target");
  }

  ClipTape tape;
  tape.enc_states.push_back(LstmState::zeros(model.dims.hidden_size));
  for (const auto& frame : example.features.frames) {
    LstmStepResult step = lstm_step(model.encoder, frame, tape.enc_states.back());
    tape.enc_states.push_back(std::move(step.state));
    tape.enc_gates.push_back(std::move(step.gates));
  }

  tape.dec_states.push_back(tape.enc_states.back());
  int prev = Vocabulary::kSos;
  for (int token : example.target.ids) {
    if (token < 0 || token >= model.dims.vocab_size) {
      raise(ErrorCode::InvalidInput,
            "target token id " + std::to_string(token) +
                " outside vocabulary of size " +
                std::to_string(model.dims.vocab_size));
    }
    tape.input_ids.push_back(prev);
    const Eigen::VectorXd input = model.embedding.row(prev).transpose();
    LstmStepResult step = lstm_step(model.decoder, input, tape.dec_states.back());
    const Eigen::VectorXd logits =
        model.output_weight * step.state.h + model.output_bias;
    Eigen::VectorXd probs = stable_softmax(logits);
    tape.nll -= std::log(probs[token]);
    tape.probs.push_back(std::move(probs));
    tape.dec_states.push_back(std::move(step.state));
    tape.dec_gates.push_back(std::move(step.gates));
    prev = token;
  }
  return tape;
}

// Backward through one cell step. Accumulates parameter gradients and
// returns the gradients w.r.t. the step input and the previous state.
void lstm_backward_step(const LstmParameters& params, const Eigen::VectorXd& x,
                        const LstmState& prev, const LstmState& cur,
                        const GateActivations& gates, const Eigen::VectorXd& dh,
                        const Eigen::VectorXd& dc_in, LstmParameters& grads,
                        Eigen::VectorXd* dx, Eigen::VectorXd* dh_prev,
                        Eigen::VectorXd* dc_prev) {
  const Eigen::ArrayXd tanh_c = cur.c.array().tanh();
  const Eigen::ArrayXd d_o = dh.array() * tanh_c;
  const Eigen::ArrayXd dc =
      dc_in.array() + dh.array() * gates.o.array() * (1.0 - tanh_c.square());
  const Eigen::ArrayXd d_i = dc * gates.g.array();
  const Eigen::ArrayXd d_g = dc * gates.i.array();
  const Eigen::ArrayXd d_f = dc * prev.c.array();
  *dc_prev = (dc * gates.f.array()).matrix();

  // pre-activation gradients through sigmoid / tanh
  const Eigen::VectorXd da_i =
      (d_i * gates.i.array() * (1.0 - gates.i.array())).matrix();
  const Eigen::VectorXd da_f =
      (d_f * gates.f.array() * (1.0 - gates.f.array())).matrix();
  const Eigen::VectorXd da_o =
      (d_o * gates.o.array() * (1.0 - gates.o.array())).matrix();
  const Eigen::VectorXd da_g =
      (d_g * (1.0 - gates.g.array().square())).matrix();

  grads.w_ii.noalias() += da_i * x.transpose();
  grads.w_if.noalias() += da_f * x.transpose();
  grads.w_ig.noalias() += da_g * x.transpose();
  grads.w_io.noalias() += da_o * x.transpose();
  grads.w_hi.noalias() += da_i * prev.h.transpose();
  grads.w_hf.noalias() += da_f * prev.h.transpose();
  grads.w_hg.noalias() += da_g * prev.h.transpose();
  grads.w_ho.noalias() += da_o * prev.h.transpose();
  grads.b_ii += da_i;
  grads.b_if += da_f;
  grads.b_ig += da_g;
  grads.b_io += da_o;
  grads.b_hi += da_i;
  grads.b_hf += da_f;
  grads.b_hg += da_g;
  grads.b_ho += da_o;

  *dx = params.w_ii.transpose() * da_i + params.w_if.transpose() * da_f +
        params.w_ig.transpose() * da_g + params.w_io.transpose() * da_o;
  *dh_prev = params.w_hi.transpose() * da_i + params.w_hf.transpose() * da_f +
             params.w_hg.transpose() * da_g + params.w_ho.transpose() * da_o;
}

void backward_clip(const CaptionModel& model, const TrainingExample& example,
                   const ClipTape& tape, double scale, ModelGradients& grads) {
  const int steps = static_cast<int>(tape.probs.size());
  Eigen::VectorXd dh_next = Eigen::VectorXd::Zero(model.dims.hidden_size);
  Eigen::VectorXd dc_next = Eigen::VectorXd::Zero(model.dims.hidden_size);
  Eigen::VectorXd dx, dh_prev, dc_prev;

  for (int k = steps - 1; k >= 0; --k) {
    Eigen::VectorXd dlogits = tape.probs[k];
    dlogits[example.target.ids[k]] -= 1.0;
    dlogits *= scale;

    grads.output_weight.noalias() += dlogits * tape.dec_states[k + 1].h.transpose();
    grads.output_bias += dlogits;

    const Eigen::VectorXd dh =
        model.output_weight.transpose() * dlogits + dh_next;
    const Eigen::VectorXd input =
        model.embedding.row(tape.input_ids[k]).transpose();
    lstm_backward_step(model.decoder, input, tape.dec_states[k],
                       tape.dec_states[k + 1], tape.dec_gates[k], dh, dc_next,
                       grads.decoder, &dx, &dh_prev, &dc_prev);
    grads.embedding.row(tape.input_ids[k]) += dx.transpose();
    dh_next = std::move(dh_prev);
    dc_next = std::move(dc_prev);
  }

  // The decoder's initial state is the encoding vector; its gradient seeds
  // the encoder unroll.
  const int frames = static_cast<int>(tape.enc_gates.size());
  for (int t = frames - 1; t >= 0; --t) {
    lstm_backward_step(model.encoder, example.features.frames[t],
                       tape.enc_states[t], tape.enc_states[t + 1],
                       tape.enc_gates[t], dh_next, dc_next, grads.encoder, &dx,
                       &dh_prev, &dc_prev);
    dh_next = std::move(dh_prev);
    dc_next = std::move(dc_prev);
  }
}

}  // namespace

ModelGradients zero_gradients(const ModelDims& dims) {
  ModelGradients g;
  g.embedding = Eigen::MatrixXd::Zero(dims.vocab_size, dims.embed_size);
  g.encoder = LstmParameters::zeros(dims.hidden_size, dims.feature_size);
  g.decoder = LstmParameters::zeros(dims.hidden_size, dims.embed_size);
  g.output_weight = Eigen::MatrixXd::Zero(dims.vocab_size, dims.hidden_size);
  g.output_bias = Eigen::VectorXd::Zero(dims.vocab_size);
  return g;
}

LossAndGradients loss_and_gradients(const CaptionModel& model,
                                    const std::vector<TrainingExample>& batch) {
  if (batch.empty()) {
    raise(ErrorCode::InvalidInput, "loss_and_gradients needs a non-empty batch");
  }
  LossAndGradients result;
  result.gradients = zero_gradients(model.dims);
  const double scale = 1.0 / static_cast<double>(batch.size());
  for (const auto& example : batch) {  // fixed order keeps accumulation deterministic
    ClipTape tape = forward_clip(model, example);
    result.loss += scale * tape.nll;
    backward_clip(model, example, tape, scale, result.gradients);
  }
  return result;
}

double batch_loss(const CaptionModel& model,
                  const std::vector<TrainingExample>& batch) {
  if (batch.empty()) {
    raise(ErrorCode::InvalidInput, "batch_loss needs a non-empty batch");
  }
  double total = 0.0;
  for (const auto& example : batch) {
    const EncodingVector v = encode(model, example.features);
    total -= sentence_log_prob(model, v, example.target);
  }
  return total / static_cast<double>(batch.size());
}

CaptionModel train(const CaptionModel& model,
                   const std::vector<CorpusClip>& corpus,
                   const Vocabulary& vocab, const TrainConfig& config,
                   std::vector<double>* epoch_losses) {
  if (corpus.empty()) {
    raise(ErrorCode::InvalidInput, "training corpus is empty");
  }
  if (config.epochs < 0 || config.batch_size < 1 ||
      !(config.learning_rate > 0.0)) {
    raise(ErrorCode::InvalidInput, "invalid training configuration");
  }
  if (vocab.size() != model.dims.vocab_size) {
    raise(ErrorCode::InvalidInput,
          "vocabulary size " + std::to_string(vocab.size()) +
              " does not match model vocab_size " +
              std::to_string(model.dims.vocab_size));
  }

  // Teacher forcing: the target is the ground-truth token stream with a
  // terminal eoc; decoder inputs are the same stream shifted right.
  std::vector<TrainingExample> examples;
  examples.reserve(corpus.size());
  for (const auto& clip : corpus) {
    TrainingExample example;
    example.features = clip.features;
    example.target.ids = vocab.encode_sentence(clip.sentence);
    example.target.ids.push_back(Vocabulary::kEoc);
    example.target.terminated = true;
    if (static_cast<int>(example.target.ids.size()) > model.dims.max_caption_len) {
      raise(ErrorCode::InvalidInput,
            "sentence of clip '" + clip.features.clip_id +
                "' exceeds max caption length " +
                std::to_string(model.dims.max_caption_len));
    }
    examples.push_back(std::move(example));
  }

  CaptionModel trained = model;
  std::vector<TensorView> params = tensor_views(trained);

  std::vector<Eigen::VectorXd> moment1, moment2;
  for (const auto& view : params) {
    moment1.push_back(Eigen::VectorXd::Zero(view.size));
    moment2.push_back(Eigen::VectorXd::Zero(view.size));
  }
  long step_count = 0;

  SeededRng rng(config.seed);
  std::vector<size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    double epoch_nll = 0.0;

    for (size_t begin = 0; begin < order.size();
         begin += static_cast<size_t>(config.batch_size)) {
      const size_t end =
          std::min(order.size(), begin + static_cast<size_t>(config.batch_size));
      std::vector<TrainingExample> batch;
      batch.reserve(end - begin);
      for (size_t i = begin; i < end; ++i) batch.push_back(examples[order[i]]);

      LossAndGradients step = loss_and_gradients(trained, batch);
      epoch_nll += step.loss * static_cast<double>(batch.size());

      ++step_count;
      const double bias1 = 1.0 - std::pow(config.beta1, step_count);
      const double bias2 = 1.0 - std::pow(config.beta2, step_count);
      std::vector<TensorView> grads = tensor_views(step.gradients);
      for (size_t i = 0; i < params.size(); ++i) {
        Eigen::Map<Eigen::VectorXd> theta(params[i].data, params[i].size);
        Eigen::Map<const Eigen::VectorXd> g(grads[i].data, grads[i].size);
        moment1[i] = config.beta1 * moment1[i] + (1.0 - config.beta1) * g;
        moment2[i] = config.beta2 * moment2[i] +
                     (1.0 - config.beta2) * g.array().square().matrix();
        theta.array() -= config.learning_rate * (moment1[i].array() / bias1) /
                         ((moment2[i].array() / bias2).sqrt() + config.epsilon);
      }
    }

    if (epoch_losses) {
      epoch_losses->push_back(epoch_nll / static_cast<double>(examples.size()));
    }
  }
  return trained;
}

}  // namespace semkg::captioner
