#include "lsig/algebra/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lsig {

namespace {

constexpr int kTailMultiplier = 12;
constexpr std::uint64_t kScale = std::uint64_t{1} << 63;

}  // namespace

DiscreteGaussian::DiscreteGaussian(double sigma) : sigma_(sigma) {
  if (!(sigma > 0)) throw std::invalid_argument("gaussian sigma must be positive");
  tail_bound_ = static_cast<std::int64_t>(std::ceil(kTailMultiplier * sigma));

  std::vector<long double> weights;
  weights.reserve(2 * tail_bound_ + 1);
  long double mass = 0;
  for (std::int64_t k = -tail_bound_; k <= tail_bound_; ++k) {
    const long double x = static_cast<long double>(k) / sigma;
    const long double w = std::exp(-std::numbers::pi_v<long double> * x * x);
    weights.push_back(w);
    mass += w;
  }

  cdt_.reserve(weights.size());
  long double acc = 0;
  for (long double w : weights) {
    acc += w / mass;
    const long double scaled = std::floor(acc * static_cast<long double>(kScale));
    cdt_.push_back(scaled >= kScale ? kScale : static_cast<std::uint64_t>(scaled));
  }
  cdt_.back() = kScale;
}

std::int64_t DiscreteGaussian::sample(Rng& rng) const {
  const std::uint64_t u = rng.next() >> 1;
  const auto it = std::upper_bound(cdt_.begin(), cdt_.end(), u);
  return static_cast<std::int64_t>(it - cdt_.begin()) - tail_bound_;
}

}  // namespace lsig
