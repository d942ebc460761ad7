#pragma once

#include <Eigen/Core>

namespace semkg::captioner {

// Four-gate recurrent cell weights. Input and recurrent halves each keep
// their own bias vector, matching the update
//   i = sigma(W_ii x + b_ii + W_hi h + b_hi)
//   f = sigma(W_if x + b_if + W_hf h + b_hf)
//   g = tanh (W_ig x + b_ig + W_hg h + b_hg)
//   o = sigma(W_io x + b_io + W_ho h + b_ho)
//   c' = f * c + i * g
//   h' = o * tanh(c')
struct LstmParameters {
  Eigen::MatrixXd w_ii, w_if, w_ig, w_io;  // hidden x input
  Eigen::MatrixXd w_hi, w_hf, w_hg, w_ho;  // hidden x hidden
  Eigen::VectorXd b_ii, b_if, b_ig, b_io;
  Eigen::VectorXd b_hi, b_hf, b_hg, b_ho;

  int input_size() const { return static_cast<int>(w_ii.cols()); }
  int hidden_size() const { return static_cast<int>(w_ii.rows()); }

  static LstmParameters zeros(int hidden, int input);
};

struct LstmState {
  Eigen::VectorXd h;  // hidden state, components in [-1, 1]
  Eigen::VectorXd c;  // memory cell state

  static LstmState zeros(int hidden);
};

// Gate values retained per step so the backward pass can reuse them.
struct GateActivations {
  Eigen::VectorXd i, f, g, o;
};

struct LstmStepResult {
  LstmState state;
  GateActivations gates;
};

// One time step of the update above. Raises ShapeMismatch naming the
// offending operand.
LstmStepResult lstm_step(const LstmParameters& params, const Eigen::VectorXd& x,
                         const LstmState& prev);

}  // namespace semkg::captioner
