#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "lsig/forklab/extraction.hpp"
#include "lsig/forklab/forklab.hpp"
#include "lsig/id/params_file.hpp"

using namespace lsig;
using namespace lsig::forklab;

namespace {

constexpr std::uint64_t kN16 = 1 << 16;

const Scheme& tiny() {
  static const Scheme s = tiny_schnorr();
  return s;
}

const Scheme& rlwe() {
  static const Scheme s = desk_rlwe();
  return s;
}

// Records every oracle list it is run on.
struct Recorder {
  mutable std::vector<OracleValues>* seen;
  RunOutput<int> operator()(const int&, const OracleValues& h, const Coin&) const {
    seen->push_back(h);
    return {2, 4, 0};
  }
};

}  // namespace

TEST(Fork, Guards) {
  SeededRng rng(1);
  for (const auto& name : {"never", "bad-order"}) {
    const auto a = SyntheticAdversary::by_name(name, 2, kN16);
    for (int i = 0; i < 200; ++i) EXPECT_FALSE(fork(a, 0, 2, kN16, rng).has_value());
  }
  const auto a = SyntheticAdversary::by_name("always", 2, kN16);
  EXPECT_THROW(fork(a, 0, 1, kN16, rng), std::invalid_argument);
  EXPECT_THROW(fork(a, 0, 2, 1, rng), std::invalid_argument);
  EXPECT_THROW(SyntheticAdversary::by_name("nope", 2, kN16), std::invalid_argument);
}

TEST(Fork, SuffixStructure) {
  SeededRng rng(2);
  std::vector<OracleValues> seen;
  const Recorder rec{&seen};
  const std::uint32_t q = 5;
  const std::uint64_t N = 1000003;
  for (int trial = 0; trial < 50; ++trial) {
    seen.clear();
    const auto out = fork(rec, 0, q, N, rng);
    ASSERT_EQ(seen.size(), 4u);
    // I0 = 2, J0 = 4.
    for (std::uint32_t k = 0; k < 3; ++k) EXPECT_EQ(seen[1][k], seen[0][k]);
    EXPECT_EQ(seen[2][0], seen[0][0]);
    for (std::uint32_t k = 0; k < 3; ++k) EXPECT_EQ(seen[3][k], seen[2][k]);
    for (const auto& h : seen) {
      ASSERT_EQ(h.size(), q);
      for (auto v : h) EXPECT_LT(v, N);
    }
    // Resampled tails are fresh draws; with N ~ 10^6 coincidences are negligible.
    EXPECT_NE(seen[1][3], seen[0][3]);
    EXPECT_NE(seen[2][1], seen[0][1]);
    EXPECT_NE(seen[3][3], seen[2][3]);
    ASSERT_TRUE(out.has_value());
    EXPECT_EQ(out->I0, 2u);
    EXPECT_EQ(out->J0, 4u);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(out->oracle[i], seen[i]);
  }
}

TEST(Fork, ReplayDeterminism) {
  const auto a = SyntheticAdversary::by_name("random-index", 4, kN16);
  SeededRng rng(3);
  for (int i = 0; i < 200; ++i) {
    Coin rho;
    rng.fill(rho);
    OracleValues h(4);
    for (auto& v : h) v = rng.below(kN16);
    const auto r1 = a(0, h, rho);
    const auto r2 = a(0, h, rho);
    EXPECT_EQ(r1.I, r2.I);
    EXPECT_EQ(r1.J, r2.J);
    EXPECT_EQ(r1.side, r2.side);
    if (r1.I != 0) {
      EXPECT_LT(r1.I, r1.J);
      EXPECT_LE(r1.J, 4u);
    }
  }
  const CooperativeProver prover(tiny());
  SeededRng krng(4);
  const CoopInput x{keygen(tiny(), krng), 3};
  Coin rho{};
  rho[0] = 9;
  const auto o1 = prover(x, {3, 7}, rho);
  const auto o2 = prover(x, {3, 7}, rho);
  EXPECT_EQ(o1.I, 1u);
  EXPECT_EQ(o1.side.z, o2.side.z);
  EXPECT_EQ(o1.side.cmt, o2.side.cmt);
}

TEST(Fork, WholeRunIsSeedDeterministic) {
  const auto a = SyntheticAdversary::by_name("threshold-half", 3, kN16);
  SeededRng r1(5), r2(5);
  for (int i = 0; i < 100; ++i) {
    const auto o1 = fork(a, 0, 3, kN16, r1);
    const auto o2 = fork(a, 0, 3, kN16, r2);
    ASSERT_EQ(o1.has_value(), o2.has_value());
    if (o1) EXPECT_EQ(o1->oracle, o2->oracle);
  }
}

TEST(ForkBound, BoundExamples) {
  EXPECT_DOUBLE_EQ(lemma1_bound(0, 2, kN16), -3.0 / kN16);
  EXPECT_DOUBLE_EQ(lemma1_bound(0.5, 2, kN16), 0.0625 - 3.0 / kN16);
  EXPECT_DOUBLE_EQ(lemma1_bound(1, 2, kN16), 1 - 3.0 / 65536);
  EXPECT_DOUBLE_EQ(lemma1_bound(1, 3, 100), 8.0 / (27 * 8) - 0.03);
}

TEST(Estimate, NeverIsZero) {
  SeededRng rng(6);
  const auto a = SyntheticAdversary::by_name("never", 2, kN16);
  EXPECT_EQ(estimate_acc(a, dummy_input, 2, kN16, 1000, rng).value, 0.0);
  EXPECT_EQ(estimate_frk(a, dummy_input, 2, kN16, 1000, rng).value, 0.0);
  EXPECT_THROW(estimate_acc(a, dummy_input, 2, kN16, 0, rng), std::invalid_argument);
}

TEST(Estimate, ThresholdAccMatchesCounting) {
  SeededRng rng(7);
  const std::uint64_t N = 1000;
  const auto a = SyntheticAdversary::threshold(300, 700);
  const auto e = estimate_acc(a, dummy_input, 2, N, 50000, rng);
  EXPECT_NEAR(e.value, 0.21, 3 * e.stderr_);
  const auto tenth = SyntheticAdversary::by_name("threshold-tenth", 2, kN16);
  // round(65536 sqrt(0.1)) = 20724; (20724/65536)^2.
  EXPECT_NEAR(tenth.exact_acc(), 0.1000, 1e-4);
  const auto e2 = estimate_acc(tenth, dummy_input, 2, kN16, 50000, rng);
  EXPECT_NEAR(e2.value, tenth.exact_acc(), 3 * e2.stderr_);
}

TEST(Estimate, AlwaysForksExceptOnCollisions) {
  SeededRng rng(8);
  const std::uint64_t N = 50;
  const auto a = SyntheticAdversary::by_name("always", 2, N);
  const auto e = estimate_frk(a, dummy_input, 2, N, 40000, rng);
  // Three independent freshness inequalities: (1 - 1/N)^3 = 0.941192.
  EXPECT_NEAR(e.value, 0.941192, 3 * e.stderr_);
  EXPECT_GE(e.value + 3 * e.stderr_, lemma1_bound(1, 2, N));
}

TEST(ForkBound, HoldsForEverySyntheticAdversary) {
  SeededRng rng(9);
  const std::vector<std::pair<std::string, std::uint32_t>> cases = {
      {"always", 2}, {"threshold-half", 2}, {"threshold-half", 3}, {"threshold-tenth", 4},
      {"random-index", 4}, {"random-index", 2}, {"never", 3}};
  for (const auto& [name, q] : cases) {
    const auto row = run_lab(name, q, kN16, 10000, rng);
    EXPECT_TRUE(row.holds) << lab_csv_row(row);
  }
}

TEST(ForkBound, CsvShape) {
  SeededRng rng(10);
  const auto row = run_lab("always", 2, kN16, 100, rng);
  EXPECT_EQ(lab_csv_header(), "adversary,q,N,trials,acc,acc_stderr,frk,frk_stderr,bound,holds");
  EXPECT_EQ(lab_csv_row(row).rfind("always,2,65536,100,1.000000,0.000000,", 0), 0u);
}

TEST(OracleMap, SchnorrAndLattice) {
  EXPECT_EQ(oracle_domain(tiny()), 11u);
  EXPECT_EQ(std::get<ZqScalar>(challenge_from_oracle(tiny(), 7)).value, 7);
  EXPECT_THROW(challenge_from_oracle(tiny(), 11), std::out_of_range);
  EXPECT_THROW(oracle_domain(default_scheme(SchemeId::Schnorr)), std::invalid_argument);

  EXPECT_EQ(oracle_domain(rlwe()), 43046721u);  // 9^8
  const auto& r = rlwe().rlwe().ring;
  const auto c0 = std::get<RingElement>(challenge_from_oracle(rlwe(), 0));
  for (std::uint32_t i = 0; i < 8; ++i) EXPECT_EQ(c0.coeffs[i], -4);
  for (std::uint32_t i = 8; i < 16; ++i) EXPECT_EQ(c0.coeffs[i], 0);
  const auto c1 = std::get<RingElement>(challenge_from_oracle(rlwe(), 9 * 5 + 2));
  EXPECT_EQ(c1.coeffs[0], -2);
  EXPECT_EQ(c1.coeffs[1], 1);
  EXPECT_EQ(c1.coeffs[2], -4);
  SeededRng rng(11);
  std::set<std::vector<std::int64_t>> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto h = rng.below(oracle_domain(rlwe()));
    const auto c = std::get<RingElement>(challenge_from_oracle(rlwe(), h));
    EXPECT_TRUE(in_challenge_set(r, c));
    seen.insert(c.coeffs);
  }
  EXPECT_GT(seen.size(), 1990u);
}

TEST(Extraction, SchnorrRecoversSecretOnTinyGroup) {
  SeededRng rng(12);
  const auto rep = run_schnorr_extraction(tiny(), 3, 1000, rng);
  EXPECT_GE(rep.extracted, 1u);
  EXPECT_EQ(rep.wrong, 0u);
  EXPECT_EQ(rep.extracted, rep.forks);
  // acc = 1 and q = 2, so only Flag2 fails: (10/11)^3 = 0.751315.
  const double rate = static_cast<double>(rep.forks) / rep.attempts;
  const double se = std::sqrt(0.751315 * (1 - 0.751315) / rep.attempts);
  EXPECT_NEAR(rate, 0.751315, 3 * se);
}

TEST(Extraction, RlweYieldsRingSisSolution) {
  SeededRng rng(13);
  const auto rep = run_rlwe_extraction(rlwe(), 2, 40, rng);
  EXPECT_GT(rep.forks, 0u);
  EXPECT_EQ(rep.wrong, 0u);
  EXPECT_EQ(rep.extracted, rep.forks);
  EXPECT_LE(rep.max_length, rep.bound);
}

TEST(Extraction, RingSisCheckRejectsTampering) {
  SeededRng rng(14);
  const CooperativeProver prover(rlwe());
  std::optional<ForkSuccess<CoopSide>> out;
  CoopInput x;
  while (!out) {
    x = CoopInput{keygen(rlwe(), rng), 2};
    out = fork(prover, x, 2, oracle_domain(rlwe()), rng);
  }
  auto sol = extract_ring_sis(rlwe(), *out);
  const auto& u1 = std::get<RingElement>(x.target.pk);
  EXPECT_TRUE(ring_sis_holds(rlwe(), u1, sol));
  const auto& r = rlwe().rlwe().ring;
  auto bad = sol;
  bad.alpha2 = ring_add(r, bad.alpha2, ring_one(r));
  EXPECT_FALSE(ring_sis_holds(rlwe(), u1, bad));
  // Opposite sign on the key term does not vanish.
  auto flipped = sol;
  flipped.alpha3 = ring_neg(r, sol.alpha3);
  EXPECT_FALSE(ring_sis_holds(rlwe(), u1, flipped));
  EXPECT_FALSE(ring_sis_holds(rlwe(), u1, RingSisSolution{ring_zero(r), ring_zero(r), ring_zero(r)}));
}
