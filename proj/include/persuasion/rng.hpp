#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace persuasion {

// All randomness in the toolkit flows through these helpers so that runs are
// reproducible bit-for-bit across platforms. std::mt19937_64 output is fully
// specified by the standard; the distributions below are hand-rolled because
// the standard library's are implementation-defined.

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Index sample from an unnormalized non-negative weight vector (inverse CDF).
// Consumes exactly one draw. Falls back to the last positive-weight index if
// rounding pushes the cursor past the total mass.
inline Eigen::Index sample_index(const Eigen::VectorXd& weights,
                                 std::mt19937_64& rng) {
  const double total = weights.sum();
  double cursor = uniform01(rng) * total;
  Eigen::Index last_positive = 0;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_positive = i;
    cursor -= weights[i];
    if (cursor < 0.0) return i;
  }
  return last_positive;
}

}  // namespace persuasion
