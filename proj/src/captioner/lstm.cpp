#include "semkg/captioner/lstm.hpp"

#include <string>

#include "semkg/error.hpp"

namespace semkg::captioner {

LstmParameters LstmParameters::zeros(int hidden, int input) {
  LstmParameters p;
  for (auto* w : {&p.w_ii, &p.w_if, &p.w_ig, &p.w_io}) {
    *w = Eigen::MatrixXd::Zero(hidden, input);
  }
  for (auto* w : {&p.w_hi, &p.w_hf, &p.w_hg, &p.w_ho}) {
    *w = Eigen::MatrixXd::Zero(hidden, hidden);
  }
  for (auto* b : {&p.b_ii, &p.b_if, &p.b_ig, &p.b_io, &p.b_hi, &p.b_hf,
                  &p.b_hg, &p.b_ho}) {
    *b = Eigen::VectorXd::Zero(hidden);
  }
  return p;
}

LstmState LstmState::zeros(int hidden) {
  return LstmState{Eigen::VectorXd::Zero(hidden), Eigen::VectorXd::Zero(hidden)};
}

namespace {

Eigen::VectorXd sigmoid(const Eigen::VectorXd& a) {
  return (1.0 / (1.0 + (-a.array()).exp())).matrix();
}

void check_shapes(const LstmParameters& params, const Eigen::VectorXd& x,
                  const LstmState& prev) {
  const auto fail = [](const std::string& operand, Eigen::Index got,
                       int expected) {
    raise(ErrorCode::ShapeMismatch,
          "lstm_step: " + operand + " has size " + std::to_string(got) +
              ", expected " + std::to_string(expected));
  };
  if (x.size() != params.input_size()) fail("input x", x.size(), params.input_size());
  if (prev.h.size() != params.hidden_size()) fail("prev.h", prev.h.size(), params.hidden_size());
  if (prev.c.size() != params.hidden_size()) fail("prev.c", prev.c.size(), params.hidden_size());
}

}  // namespace

LstmStepResult lstm_step(const LstmParameters& params, const Eigen::VectorXd& x,
                         const LstmState& prev) {
  check_shapes(params, x, prev);

  LstmStepResult r;
  r.gates.i = sigmoid(params.w_ii * x + params.b_ii + params.w_hi * prev.h + params.b_hi);
  r.gates.f = sigmoid(params.w_if * x + params.b_if + params.w_hf * prev.h + params.b_hf);
  r.gates.g = (params.w_ig * x + params.b_ig + params.w_hg * prev.h + params.b_hg)
                  .array().tanh().matrix();
  r.gates.o = sigmoid(params.w_io * x + params.b_io + params.w_ho * prev.h + params.b_ho);
  r.state.c = r.gates.f.cwiseProduct(prev.c) + r.gates.i.cwiseProduct(r.gates.g);
  r.state.h = r.gates.o.cwiseProduct(r.state.c.array().tanh().matrix());
  return r;
}

}  // namespace semkg::captioner
