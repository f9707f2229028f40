#pragma once

#include <cstdint>
#include <vector>

#include "qtrsk/growth.hpp"

namespace qtrsk {

// SplitMix64 (Steele, Lea, Flood): state += 0x9e3779b97f4a7c15, then two xor-shift-multiply rounds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// Index of the first weight whose cumulative threshold exceeds u. Thresholds are
// floor(2^64 * (w_0 + ... + w_k)), the last one forced to 2^64, so every index
// is hit with probability within 2^-64 of its weight. Weights must lie in [0,1]
// and sum to 1.
std::size_t choose_index(const std::vector<BigRational>& weights, std::uint64_t u);

// Throws ParameterOutOfRange unless q0, t0 are both in [0,1) or both in (1,inf).
void check_sampling_parameters(const BigRational& q0, const BigRational& t0);

// One growth drawn square by square in row-major order with exact probabilities
// at (q0, t0). A draw is consumed only at squares with two or more choices.
TableauPair sample_forward(const Matrix01& a, const BigRational& q0, const BigRational& t0, std::uint64_t seed);
// Squares filled from the south-east corner in reverse row-major order.
Matrix01 sample_backward(const Tableau& p, const Tableau& q, int m, int n, const BigRational& q0,
                         const BigRational& t0, std::uint64_t seed);

}  // namespace qtrsk
