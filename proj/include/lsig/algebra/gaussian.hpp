#pragma once

#include <cstdint>
#include <vector>

#include "lsig/rng.hpp"

namespace lsig {

// Discrete Gaussian D_{Z,sigma} with mass proportional to exp(-pi k^2 / sigma^2),
// truncated to |k| <= ceil(12 sigma). Sampling is an inverse-CDF lookup of a
// 63-bit uniform against a precomputed cumulative table.
class DiscreteGaussian {
 public:
  explicit DiscreteGaussian(double sigma);

  std::int64_t sample(Rng& rng) const;

  double sigma() const { return sigma_; }
  std::int64_t tail_bound() const { return tail_bound_; }

 private:
  double sigma_;
  std::int64_t tail_bound_;
  // cdt_[i] = floor(2^63 * Pr[X <= i - tail_bound]); the last entry is 2^63.
  std::vector<std::uint64_t> cdt_;
};

}  // namespace lsig
