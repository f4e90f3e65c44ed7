#include <gtest/gtest.h>

#include <cmath>

#include "lsig/errors.hpp"
#include "lsig/harness/harness.hpp"
#include "lsig/id/params_file.hpp"

using namespace lsig;
using namespace lsig::harness;

namespace {

const Scheme& tiny() {
  static const Scheme s = tiny_schnorr();
  return s;
}

const Scheme& rlwe() {
  static const Scheme s = desk_rlwe();
  return s;
}

const Scheme& big() {
  static const Scheme s = default_scheme(SchemeId::Schnorr);
  return s;
}

Bytes msg(const std::string& s) { return Bytes(s.begin(), s.end()); }

bool all_phase(const RunReport& r, Phase p) {
  for (const auto& s : r.signers) {
    if (s.phase != p) return false;
  }
  return true;
}

}  // namespace

TEST(Harness, HonestSchnorrThreeSigners) {
  const auto r = run_honest(tiny(), 3, msg("hello"), 1);
  EXPECT_TRUE(all_phase(r, Phase::Done));
  EXPECT_TRUE(r.outputs_agree);
  ASSERT_TRUE(r.signature.has_value());
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(verify(tiny(), r.key, msg("hello"), *r.signature));
  const auto rb = run_honest(big(), 3, msg("hello"), 1);
  ASSERT_TRUE(rb.verified);
  EXPECT_FALSE(verify(big(), rb.key, msg("hellp"), *rb.signature));
  // One broadcast per signer per round, each observed once.
  EXPECT_EQ(r.observed, 9u);
  EXPECT_EQ(r.trace.size(), 27u);
}

TEST(Harness, HonestRlweTwoSigners) {
  int accepted = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = run_honest(rlwe(), 2, msg("lattice"), seed);
    if (r.verified) {
      ++accepted;
      continue;
    }
    // Misses are only ever the prover's abort.
    EXPECT_FALSE(r.signature.has_value());
    bool prover_abort = false;
    for (const auto& s : r.signers) prover_abort |= s.reason == "prover abort (no admissible slot)";
    EXPECT_TRUE(prover_abort);
  }
  EXPECT_GE(accepted, 5);
}

TEST(Harness, SingleSignerMatchesOneShotProof) {
  const auto r = run_honest(big(), 1, msg("solo"), 2);
  ASSERT_TRUE(r.verified);
  const auto& g = big().group();
  const auto& R = std::get<GroupElement>(r.signature->cmt_bar);
  const auto c = std::get<ZqScalar>(signing_challenge(big(), r.key.pk_bar, r.signature->cmt_bar, msg("solo")));
  EXPECT_TRUE(schnorr_verify(g, std::get<GroupElement>(r.key.pk_bar), 1, R, c, std::get<ZqScalar>(r.signature->rsp_bar)));
  EXPECT_EQ(r.observed, 3u);
}

TEST(Harness, SubstitutedCommitmentAbortsEveryone) {
  for (const auto* s : {&tiny(), &rlwe()}) {
    const auto r = run_adversarial(*s, 3, msg("bind"), Policy::substitute(2, 1), 3);
    EXPECT_FALSE(r.signature.has_value());
    EXPECT_FALSE(r.verified);
    EXPECT_TRUE(all_phase(r, Phase::Aborted));
    for (const auto& o : r.signers) EXPECT_EQ(o.reason, "commitment mismatch from signer 1");
  }
}

TEST(Harness, SubstitutedDigestAbortsEveryone) {
  const auto r = run_adversarial(tiny(), 3, msg("bind"), Policy::substitute(1, 0), 4);
  EXPECT_TRUE(all_phase(r, Phase::Aborted));
  EXPECT_FALSE(r.verified);
}

TEST(Harness, DroppedResponseYieldsNothing) {
  const auto r = run_adversarial(tiny(), 3, msg("drop"), Policy::drop(3, 2), 5);
  EXPECT_FALSE(r.signature.has_value());
  EXPECT_FALSE(r.verified);
  for (const auto& o : r.signers) {
    EXPECT_EQ(o.phase, Phase::Aborted);
    EXPECT_EQ(o.reason, "stalled: missing round-3 messages");
  }
  EXPECT_EQ(r.observed, 9u);
}

TEST(Harness, DroppedDigestStallsAtRoundTwo) {
  const auto r = run_adversarial(tiny(), 2, msg("drop"), Policy::drop(1, 0), 6);
  EXPECT_TRUE(all_phase(r, Phase::Aborted));
  EXPECT_EQ(r.signers[0].reason, "stalled: missing round-1 messages");
  EXPECT_EQ(r.observed, 2u);
}

TEST(Harness, SubstitutedResponseFailsVerify) {
  for (const auto* s : {&tiny(), &big(), &rlwe()}) {
    for (std::uint64_t seed = 10; seed < 14; ++seed) {
      const auto r = run_adversarial(*s, 3, msg("perturb"), Policy::substitute(3, 0), seed);
      if (!r.signature) continue;  // lattice prover abort
      EXPECT_TRUE(r.outputs_agree);
      if (s == &tiny()) {
        // Over Z_11 a random response hits the honest one with probability 1/11.
        continue;
      }
      EXPECT_FALSE(r.verified);
    }
  }
  const auto r = run_adversarial(big(), 3, msg("perturb"), Policy::substitute(3, 1, SubstituteMode::RandomBytes), 20);
  EXPECT_FALSE(r.verified);
}

TEST(Harness, MalformedPayloadAborts) {
  const auto r = run_adversarial(tiny(), 2, msg("x"), Policy::substitute(2, 1, SubstituteMode::Literal, Bytes{0x00}), 7);
  EXPECT_TRUE(all_phase(r, Phase::Aborted));
  EXPECT_EQ(r.signers[0].reason, "malformed round-2 message from signer 1");
}

TEST(Harness, ReorderStillSigns) {
  const auto pass = run_honest(tiny(), 4, msg("order"), 8);
  const auto shuf = run_adversarial(tiny(), 4, msg("order"), Policy::reorder(), 8);
  EXPECT_TRUE(shuf.verified);
  EXPECT_EQ(pass.signature, shuf.signature);
  EXPECT_NE(pass.trace, shuf.trace);
}

TEST(Harness, TraceIsSeedDeterministic) {
  for (const auto& p : {Policy::pass(), Policy::reorder(), Policy::substitute(3, 1, SubstituteMode::RandomBytes)}) {
    const auto a = run_adversarial(rlwe(), 3, msg("det"), p, 9);
    const auto b = run_adversarial(rlwe(), 3, msg("det"), p, 9);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(format_report(a, true), format_report(b, true));
  }
  EXPECT_NE(run_honest(tiny(), 3, msg("det"), 1).trace, run_honest(tiny(), 3, msg("det"), 2).trace);
}

TEST(Harness, NoFalseAccepts) {
  const std::vector<Policy> policies = {Policy::drop(1, 0), Policy::drop(2, 1), Policy::drop(3, 0),
                                        Policy::substitute(1, 1), Policy::substitute(2, 0),
                                        Policy::substitute(3, 1, SubstituteMode::RandomBytes)};
  for (const auto& p : policies) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto r = run_adversarial(big(), 3, msg("nfa"), p, seed);
      EXPECT_FALSE(r.verified) << describe(p);
    }
  }
}

TEST(Harness, ReportFormat) {
  const auto r = run_adversarial(tiny(), 2, msg("fmt"), Policy::drop(3, 1), 3);
  const auto text = format_report(r);
  EXPECT_NE(text.find("scheme=schnorr\nt=2\npolicy=drop round=3 sender=1\nsignature_produced=0\n"), std::string::npos);
  EXPECT_NE(text.find("signer.0.phase=ABORTED\nsigner.0.reason=stalled: missing round-3 messages\n"),
            std::string::npos);
  EXPECT_EQ(text.find("trace."), std::string::npos);
  EXPECT_NE(format_report(r, true).find("trace.0=to=0 01"), std::string::npos);
}

TEST(Scenario, ParseAndRun) {
  const auto sc = parse_scenario(
      "# binding check\n"
      "scheme = schnorr\n"
      "params = tiny\n"
      "t = 3\n"
      "policy = substitute\n"
      "round = 2\n"
      "sender = 0\n"
      "payload = fresh\n"
      "seed = 0x2a\n");
  EXPECT_EQ(sc.t, 3u);
  EXPECT_EQ(sc.seed, 42u);
  EXPECT_EQ(describe(sc.policy), "substitute round=2 sender=0 payload=fresh");
  const auto r = run_scenario(sc);
  EXPECT_TRUE(all_phase(r, Phase::Aborted));
  EXPECT_EQ(describe(parse_scenario("policy=substitute\nround=3\npayload=hex:00ff\n").policy),
            "substitute round=3 sender=0 payload=hex:00ff");
  EXPECT_THROW(parse_scenario("colour=blue\n"), ParseError);
  EXPECT_THROW(parse_scenario("policy=drop\n"), ParseError);
  EXPECT_THROW(parse_scenario("t=abc\n"), ParseError);
  EXPECT_THROW(parse_scenario("scheme=rsa\n"), ParseError);
  EXPECT_THROW(parse_scenario("policy=substitute\nround=1\npayload=hex:zz\n"), ParseError);
}

TEST(RogueKey, NaiveAggregationFallsOnTinyGroup) {
  const auto rep = rogue_key_demo(GroupParams::tiny(), 3, 1, 0);
  EXPECT_TRUE(rep.naive_forged);
  EXPECT_EQ(rep.compiled_attempts, 0u);
}

TEST(RogueKey, CompiledAggregationHoldsOnLargeGroup) {
  const auto rep = rogue_key_demo(big().group(), 3, 2, 100);
  EXPECT_TRUE(rep.naive_forged);
  EXPECT_FALSE(rep.compiled_forged);
  EXPECT_EQ(rep.compiled_attempts, 100u);
}

TEST(RogueKey, TinyGroupCompiledRateIsGuessing) {
  // With |G| = 11 the weighted aggregate equals g^s by chance about 1/11 of the time.
  const auto rep = rogue_key_demo(GroupParams::tiny(), 3, 3, 3000);
  const double p = 1.0 / 11;
  const double rate = static_cast<double>(rep.compiled_successes) / rep.compiled_attempts;
  EXPECT_NEAR(rate, p, 4 * std::sqrt(p * (1 - p) / rep.compiled_attempts));
  EXPECT_THROW(rogue_key_demo(GroupParams::tiny(), 0, 1), std::invalid_argument);
}

TEST(IdExperiment, HonestProverWins) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_TRUE(run_id_experiment(tiny(), 3, "honest-knows-all", seed));
    EXPECT_TRUE(run_id_experiment(big(), 2, "honest-knows-all", seed));
  }
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) wins += run_id_experiment(rlwe(), 2, "honest-knows-all", seed);
  // Two independent responders, each accepting with probability about 0.886.
  EXPECT_NEAR(wins / 200.0, 0.886 * 0.886, 0.1);
}

TEST(IdExperiment, RandomResponseIsGuessing) {
  const int trials = 5000;
  int wins = 0;
  for (int i = 0; i < trials; ++i) wins += run_id_experiment(tiny(), 2, "random-response", 1000 + i);
  const double p = 1.0 / 11;
  EXPECT_NEAR(static_cast<double>(wins) / trials, p, 3 * std::sqrt(p * (1 - p) / trials));

  int lattice_wins = 0;
  for (int i = 0; i < 1000; ++i) lattice_wins += run_id_experiment(rlwe(), 2, "random-response", i);
  EXPECT_EQ(lattice_wins, 0);
  EXPECT_THROW(make_id_adversary(tiny(), "psychic"), std::invalid_argument);
}
