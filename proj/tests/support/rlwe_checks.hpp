#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lsig/algebra/ring.hpp"
#include "lsig/id/rlwe.hpp"
#include "lsig/rng.hpp"
#include "stats.hpp"

namespace lsig::testing {

// Fraction of trials with ||s c||_inf > sigma sqrt(n) log^3 n.
inline double product_norm_exceed_rate(const RlweParams& p, int trials, Rng& rng) {
  const RingParams& r = p.ring;
  const long double lg = r.log_n;
  const std::int64_t bound =
      static_cast<std::int64_t>(std::floor(r.sigma * std::sqrt(static_cast<long double>(r.n)) * lg * lg * lg));
  int over = 0;
  for (int i = 0; i < trials; ++i) {
    const auto s = sample_gaussian(r, rng);
    const auto c = sample_uniform_c(r, rng);
    if (inf_norm(ring_mul(r, s, c)) > bound) ++over;
  }
  return static_cast<double>(over) / trials;
}

inline std::int64_t product_norm_bound(const RingParams& r) {
  const long double lg = r.log_n;
  return static_cast<std::int64_t>(
      std::floor(r.sigma * std::sqrt(static_cast<long double>(r.n)) * lg * lg * lg));
}

struct MaskedShiftResult {
  double membership_rate = 0;
  double threshold = 0;      // 1/e - 1/(en) - 0.02
  double worst_chi2 = 0;     // largest per-coefficient statistic
  double chi2_critical = 0;  // at significance 0.001
};

// gamma is fixed with every coefficient at +bound or -bound (alternating),
// the extreme case allowed by the norm bound.
inline MaskedShiftResult masked_shift_check(const RlweParams& p, int trials, Rng& rng) {
  const RingParams& r = p.ring;
  const std::int64_t g = product_norm_bound(r);
  std::vector<std::int64_t> gc(r.n);
  for (std::size_t k = 0; k < r.n; ++k) gc[k] = (k % 2 == 0) ? g : -g;
  const RingElement gamma = ring_from(r, gc);

  constexpr std::size_t kBins = 16;
  const double width = static_cast<double>(2 * r.bound_z + 1);
  std::vector<std::vector<std::uint64_t>> counts(r.n, std::vector<std::uint64_t>(kBins, 0));
  auto bin_of = [&](std::int64_t z) {
    return static_cast<std::size_t>(static_cast<double>(z + r.bound_z) * kBins / width);
  };
  std::vector<double> bin_size(kBins, 0);
  for (std::int64_t z = -r.bound_z; z <= r.bound_z; ++z) bin_size[bin_of(z)] += 1;

  int hits = 0;
  for (int i = 0; i < trials; ++i) {
    const auto z = ring_add(r, gamma, sample_uniform_y(r, rng));
    if (inf_norm(z) > r.bound_z) continue;
    ++hits;
    for (std::size_t k = 0; k < r.n; ++k) ++counts[k][bin_of(z.coeffs[k])];
  }
  MaskedShiftResult out;
  out.membership_rate = static_cast<double>(hits) / trials;
  out.threshold = 1.0 / std::exp(1.0) - 1.0 / (std::exp(1.0) * r.n) - 0.02;
  out.chi2_critical = chi_square_critical(kBins - 1, 0.001);
  for (const auto& row : counts) {
    double stat = 0;
    for (std::size_t b = 0; b < kBins; ++b) {
      const double expected = hits * bin_size[b] / width;
      const double d = static_cast<double>(row[b]) - expected;
      stat += d * d / expected;
    }
    out.worst_chi2 = std::max(out.worst_chi2, stat);
  }
  return out;
}

// Exact probability, given gamma = s c, that one slot lands in Z:
// each coefficient of gamma + y is in Z with probability
// |[-B_Z, B_Z] intersect [gamma_k - B_Y, gamma_k + B_Y]| / (2 B_Y + 1).
inline double slot_accept_probability(const RingParams& r, const RingElement& g1, const RingElement& g2) {
  double p = 1;
  for (const auto* g : {&g1, &g2}) {
    for (auto gk : g->coeffs) {
      const std::int64_t lo = std::max(-r.bound_z, gk - r.bound_y);
      const std::int64_t hi = std::min(r.bound_z, gk + r.bound_y);
      p *= hi >= lo ? static_cast<double>(hi - lo + 1) / static_cast<double>(2 * r.bound_y + 1) : 0.0;
    }
  }
  return p;
}

struct AbortResult {
  double empirical = 0;
  double stderr_ = 0;
  double oracle = 0;         // Monte Carlo average of (1 - p_slot)^mu
  double oracle_stderr = 0;
};

// Runs `trials` honest commit/respond pairs with fresh keys and challenges,
// counting aborts, and evaluates the exact per-slot oracle on the same keys.
inline AbortResult abort_rate(const RlweParams& p, int trials, Rng& rng) {
  const RingParams& r = p.ring;
  int aborts = 0;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < trials; ++i) {
    const auto kp = rlwe_keygen(p, rng);
    const auto c = sample_uniform_c(r, rng);
    const double ps = slot_accept_probability(r, ring_mul(r, kp.sk.s1, c), ring_mul(r, kp.sk.s2, c));
    const double q = std::pow(1 - ps, static_cast<double>(r.mu));
    sum += q;
    sum_sq += q * q;
    auto st = rlwe_commit(p, rng);
    if (!rlwe_respond(p, kp.sk, st, c, rng)) ++aborts;
  }
  AbortResult out;
  const auto est = proportion(aborts, trials);
  out.empirical = est.mean;
  out.stderr_ = est.stderr_;
  out.oracle = sum / trials;
  out.oracle_stderr = std::sqrt(std::max(0.0, sum_sq / trials - out.oracle * out.oracle) / trials);
  return out;
}

// (1 - 1/(4 e^2))^mu, the closed-form abort bound.
inline double abort_closed_form(const RingParams& r) {
  return std::pow(1 - 1 / (4 * std::exp(2.0)), static_cast<double>(r.mu));
}

// Fraction of trials with ||sum_i h_i (s_i c + sum_j y_ij)||_inf <= eta_t.
inline double aggregate_within_eta_rate(const RlweParams& p, std::uint32_t t, int trials, Rng& rng) {
  const RingParams& r = p.ring;
  const std::int64_t eta = r.eta(t);
  int ok = 0;
  for (int i = 0; i < trials; ++i) {
    const auto c = sample_uniform_c(r, rng);
    RingElement z = ring_zero(r);
    for (std::uint32_t k = 0; k < t; ++k) {
      const auto h = sample_uniform_c(r, rng);
      RingElement inner = ring_mul(r, sample_gaussian(r, rng), c);
      for (std::uint32_t j = 0; j < r.mu; ++j) inner = ring_add(r, inner, sample_uniform_y(r, rng));
      z = ring_add(r, z, ring_mul(r, h, inner));
    }
    if (inf_norm(z) <= eta) ++ok;
  }
  return static_cast<double>(ok) / trials;
}

struct KsResult {
  double statistic = 0;
  double critical = 0;
};

// Coefficient 0 of z_{1 j*}: real (conditioned on no abort) against SIM.
inline KsResult simulator_ks(const RlweParams& p, int samples, Rng& rng) {
  const RingParams& r = p.ring;
  std::vector<double> real, sim;
  while (static_cast<int>(real.size()) < samples) {
    const auto kp = rlwe_keygen(p, rng);
    const auto c = sample_uniform_c(r, rng);
    auto st = rlwe_commit(p, rng);
    RlweRespondTrace trace;
    if (!rlwe_respond(p, kp.sk, st, c, rng, &trace)) continue;
    real.push_back(static_cast<double>(trace.z1_slot.coeffs[0]));
  }
  while (static_cast<int>(sim.size()) < samples) {
    const auto kp = rlwe_keygen(p, rng);
    const auto c = sample_uniform_c(r, rng);
    const auto out = rlwe_simulate(p, kp.u, c, rng);
    sim.push_back(static_cast<double>(out.z1_slot.coeffs[0]));
  }
  return {ks_statistic(real, sim), ks_critical(real.size(), sim.size(), 0.001)};
}

// Fraction of non-aborted honest transcripts with both ||z_b|| <= eta_1 (tight).
inline double tight_completeness_rate(const RlweParams& p, int trials, Rng& rng) {
  const RingParams& r = p.ring;
  int ok = 0, done = 0;
  while (done < trials) {
    const auto kp = rlwe_keygen(p, rng);
    const auto c = sample_uniform_c(r, rng);
    auto st = rlwe_commit(p, rng);
    auto rsp = rlwe_respond(p, kp.sk, st, c, rng);
    if (!rsp) continue;
    ++done;
    if (inf_norm(rsp->z1) <= r.eta1 && inf_norm(rsp->z2) <= r.eta1) ++ok;
  }
  return static_cast<double>(ok) / trials;
}

}  // namespace lsig::testing
