#pragma once

#include <cstdint>
#include <vector>

#include "semkg/captioner/model.hpp"

namespace semkg::captioner {

// Gradient accumulator shaped exactly like the model parameters.
struct ModelGradients {
  Eigen::MatrixXd embedding;
  LstmParameters encoder;
  LstmParameters decoder;
  Eigen::MatrixXd output_weight;
  Eigen::VectorXd output_bias;
};

ModelGradients zero_gradients(const ModelDims& dims);

// Same declared order as tensor_views(CaptionModel&).
std::vector<TensorView> tensor_views(ModelGradients& gradients);

struct TrainingExample {
  FeatureSequence features;
  TokenSequence target;
};

struct LossAndGradients {
  double loss = 0.0;
  ModelGradients gradients;
};

// Mean negative log-likelihood over the batch and its gradients,
// backpropagated through the output layer, the decoder unroll, the
// encoding vector and the encoder unroll, including the embedding rows.
LossAndGradients loss_and_gradients(const CaptionModel& model,
                                    const std::vector<TrainingExample>& batch);

// Forward-only batch loss through encode + sentence_log_prob; used by the
// finite-difference gradient check and epoch diagnostics.
double batch_loss(const CaptionModel& model,
                  const std::vector<TrainingExample>& batch);

struct CorpusClip {
  FeatureSequence features;
  std::string sentence;
};

struct TrainConfig {
  int epochs = 0;
  double learning_rate = 1e-4;
  uint64_t seed = 0;
  int batch_size = 1;
  // Adam moment constants, standard defaults.
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Teacher-forced Adam training over shuffled epochs. Deterministic given
// the seed; the input model is not modified. Sentences are tokenized under
// `vocab` with a terminal `eoc` appended. If epoch_losses is non-null it
// receives the mean batch loss of every epoch.
CaptionModel train(const CaptionModel& model,
                   const std::vector<CorpusClip>& corpus,
                   const Vocabulary& vocab, const TrainConfig& config,
                   std::vector<double>* epoch_losses = nullptr);

}  // namespace semkg::captioner
