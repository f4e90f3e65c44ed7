#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "lsig/rng.hpp"

namespace lsig::forklab {

// Fixed-length coin; an algorithm derives all of its internal randomness from it.
using Coin = std::array<std::uint8_t, 32>;
// h_1..h_q at positions 0..q-1, each uniform on {0, ..., N-1}.
using OracleValues = std::vector<std::uint64_t>;

template <typename Side>
struct RunOutput {
  std::uint32_t I = 0;
  std::uint32_t J = 0;
  Side side{};
};

template <typename Side>
struct ForkSuccess {
  std::uint32_t I0 = 0;
  std::uint32_t J0 = 0;
  std::array<Side, 4> sides;
  std::array<OracleValues, 4> oracle;
};

template <typename Side>
using ForkOutcome = std::optional<ForkSuccess<Side>>;

template <typename Alg, typename Input>
using SideOf = decltype(std::declval<std::invoke_result_t<const Alg&, const Input&, const OracleValues&,
                                                          const Coin&>>()
                            .side);

namespace detail {

inline OracleValues fresh_suffix(OracleValues prefix, std::uint32_t q, std::uint64_t N, Rng& rng) {
  while (prefix.size() < q) prefix.push_back(rng.below(N));
  return prefix;
}

inline OracleValues prefix_of(const OracleValues& h, std::uint32_t len) {
  return OracleValues(h.begin(), h.begin() + len);
}

inline void require_shared_prefix(const OracleValues& a, const OracleValues& b, std::uint32_t len) {
  for (std::uint32_t k = 0; k < len; ++k) {
    if (a[k] != b[k]) throw std::logic_error("forked run does not share the required oracle prefix");
  }
}

}  // namespace detail

// The nested forking algorithm. Runs the algorithm on h, then on three
// resampled suffixes: from J0 (run 1), from I0 (run 2), and from J0 on top of
// run 2's values (run 3). Each run shares one coin. Returns nullopt (Fail) on
// any guard or when Flag1 and Flag2 do not both hold.
template <typename Input, typename Alg>
ForkOutcome<SideOf<Alg, Input>> fork(const Alg& alg, const Input& x, std::uint32_t q, std::uint64_t N, Rng& rng) {
  if (q < 2 || N < 2) throw std::invalid_argument("fork needs q >= 2 and N >= 2");
  Coin rho;
  rng.fill(rho);

  ForkSuccess<SideOf<Alg, Input>> out;
  out.oracle[0] = detail::fresh_suffix({}, q, N, rng);
  auto r0 = alg(x, out.oracle[0], rho);
  if (r0.I == 0 || r0.J == 0 || r0.I >= r0.J) return std::nullopt;
  const std::uint32_t I0 = r0.I;
  const std::uint32_t J0 = r0.J;

  out.oracle[1] = detail::fresh_suffix(detail::prefix_of(out.oracle[0], J0 - 1), q, N, rng);
  detail::require_shared_prefix(out.oracle[0], out.oracle[1], J0 - 1);
  auto r1 = alg(x, out.oracle[1], rho);
  if (r1.I == 0 || r1.J == 0) return std::nullopt;

  out.oracle[2] = detail::fresh_suffix(detail::prefix_of(out.oracle[0], I0 - 1), q, N, rng);
  detail::require_shared_prefix(out.oracle[0], out.oracle[2], I0 - 1);
  auto r2 = alg(x, out.oracle[2], rho);
  if (r2.I == 0 || r2.J == 0) return std::nullopt;

  out.oracle[3] = detail::fresh_suffix(detail::prefix_of(out.oracle[2], J0 - 1), q, N, rng);
  detail::require_shared_prefix(out.oracle[2], out.oracle[3], J0 - 1);
  auto r3 = alg(x, out.oracle[3], rho);
  if (r3.I == 0 || r3.J == 0) return std::nullopt;

  const bool flag1 = r1.I == I0 && r2.I == I0 && r3.I == I0 && r1.J == J0 && r2.J == J0 && r3.J == J0;
  const auto& h = out.oracle;
  const bool flag2 = h[0][I0 - 1] != h[2][I0 - 1] && h[0][J0 - 1] != h[1][J0 - 1] && h[2][J0 - 1] != h[3][J0 - 1];
  if (!(flag1 && flag2)) return std::nullopt;

  out.I0 = I0;
  out.J0 = J0;
  out.sides = {std::move(r0.side), std::move(r1.side), std::move(r2.side), std::move(r3.side)};
  return out;
}

struct Estimate {
  double value = 0;
  double stderr_ = 0;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
};

inline Estimate make_estimate(std::uint64_t hits, std::uint64_t trials) {
  Estimate e;
  e.hits = hits;
  e.trials = trials;
  e.value = static_cast<double>(hits) / static_cast<double>(trials);
  e.stderr_ = std::sqrt(e.value * (1 - e.value) / static_cast<double>(trials));
  return e;
}

// Pr[I, J >= 1] over x <- input_gen, fresh h and coin.
template <typename Alg, typename InputGen>
Estimate estimate_acc(const Alg& alg, InputGen&& input_gen, std::uint32_t q, std::uint64_t N,
                      std::uint64_t trials, Rng& rng) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto x = input_gen(rng);
    Coin rho;
    rng.fill(rho);
    const auto h = detail::fresh_suffix({}, q, N, rng);
    const auto r = alg(x, h, rho);
    if (r.I >= 1 && r.J >= 1) ++hits;
  }
  return make_estimate(hits, trials);
}

// Pr[fork(x) != Fail] over x <- input_gen.
template <typename Alg, typename InputGen>
Estimate estimate_frk(const Alg& alg, InputGen&& input_gen, std::uint32_t q, std::uint64_t N,
                      std::uint64_t trials, Rng& rng) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto x = input_gen(rng);
    if (fork(alg, x, q, N, rng)) ++hits;
  }
  return make_estimate(hits, trials);
}

// 8 acc^4 / (q^3 (q-1)^3) - 3/N.
double lemma1_bound(double acc, std::uint32_t q, std::uint64_t N);

// Test algorithms over oracle values in {0, ..., N-1}; the input is ignored.
//   always           (1, 2) every time
//   never            (0, 0)
//   bad-order        (2, 1)
//   threshold-half   (1, 2) iff h_1 < k and h_2 < k, k = round(N sqrt(1/2))
//   threshold-tenth  same with k = round(N sqrt(1/10))
//   random-index     1 <= I < J <= q drawn from the coin; succeeds iff h_J < N/2
class SyntheticAdversary {
 public:
  enum class Kind { Always, Never, BadOrder, Threshold, RandomIndex };

  static SyntheticAdversary by_name(const std::string& name, std::uint32_t q, std::uint64_t N);
  static SyntheticAdversary threshold(std::uint64_t k1, std::uint64_t k2);

  RunOutput<std::uint64_t> operator()(const int& x, const OracleValues& h, const Coin& rho) const;

  // Exact acceptance probability, when it has a closed form.
  double exact_acc() const;
  const std::string& name() const { return name_; }

 private:
  Kind kind_ = Kind::Never;
  std::string name_;
  std::uint32_t q_ = 2;
  std::uint64_t N_ = 2;
  std::uint64_t k1_ = 0;
  std::uint64_t k2_ = 0;
};

std::vector<std::string> synthetic_adversary_names();

// Input generator for the synthetic adversaries.
inline int dummy_input(Rng&) { return 0; }

struct LabRow {
  std::string adversary;
  std::uint32_t q = 0;
  std::uint64_t N = 0;
  Estimate acc;
  Estimate frk;
  double bound = 0;  // lemma1_bound(acc - 3 stderr)
  bool holds = false;  // frk + 3 stderr >= bound
};

LabRow run_lab(const std::string& adversary, std::uint32_t q, std::uint64_t N, std::uint64_t trials, Rng& rng);
std::string lab_csv_header();
std::string lab_csv_row(const LabRow& row);

}  // namespace lsig::forklab
