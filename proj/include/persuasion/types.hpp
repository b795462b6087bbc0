#pragma once

#include <Eigen/Dense>
#include <string>

#include "persuasion/errors.hpp"

namespace persuasion {

// Probability mass must sum to 1 within this tolerance.
inline constexpr double kProbTol = 1e-12;
// Values below this (in absolute terms) count as zero in probability tests.
inline constexpr double kZeroTol = 1e-15;
// Feasibility tolerance shared by the polytope and decomposition routines.
inline constexpr double kFeasTol = 1e-9;

// A probability vector over a finite index set. Entries in [-1e-15, ...) are
// clamped to 0 on construction; anything more negative is rejected.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(Eigen::VectorXd weights, const std::string& what = "distribution");

  const Eigen::VectorXd& weights() const { return weights_; }
  double operator()(Eigen::Index i) const { return weights_[i]; }
  Eigen::Index size() const { return weights_.size(); }

  static Distribution uniform(Eigen::Index n);
  static Distribution point_mass(Eigen::Index n, Eigen::Index at);

 private:
  Eigen::VectorXd weights_;
};

// Validates a row-stochastic matrix in place (clamping tiny negatives) and
// throws ValidationError describing the offending row otherwise.
void validate_row_stochastic(Eigen::MatrixXd& matrix, const std::string& what);

// State-conditional distribution over signals: entry (c, g) = Pr(signal g | state c).
class SignalingStrategy {
 public:
  SignalingStrategy() = default;
  explicit SignalingStrategy(Eigen::MatrixXd matrix);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  double prob(Eigen::Index state, Eigen::Index signal) const { return matrix_(state, signal); }
  Eigen::Index num_states() const { return matrix_.rows(); }
  Eigen::Index num_signals() const { return matrix_.cols(); }

  // Same signal distribution regardless of state (carries no information).
  static SignalingStrategy uninformative(Eigen::Index states, Eigen::Index signals);
  // Signal i sent exactly in state i (full revelation); requires signals >= states.
  static SignalingStrategy revealing(Eigen::Index states, Eigen::Index signals);

 private:
  Eigen::MatrixXd matrix_;
};

// State-conditional distribution over responses: entry (c, y) = Pr(recommend y | state c).
class DirectScheme {
 public:
  DirectScheme() = default;
  explicit DirectScheme(Eigen::MatrixXd matrix);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  double prob(Eigen::Index state, Eigen::Index response) const { return matrix_(state, response); }
  Eigen::Index num_states() const { return matrix_.rows(); }
  Eigen::Index num_responses() const { return matrix_.cols(); }

  static DirectScheme constant(Eigen::Index states, Eigen::Index responses, Eigen::Index response);

 private:
  Eigen::MatrixXd matrix_;
};

}  // namespace persuasion
