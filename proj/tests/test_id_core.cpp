#include <gtest/gtest.h>

#include "lsig/errors.hpp"
#include "lsig/id/codec.hpp"
#include "lsig/id/params_file.hpp"
#include "lsig/id/scheme.hpp"

using namespace lsig;

namespace {

const Scheme& tiny() {
  static const Scheme s = tiny_schnorr();
  return s;
}

const Scheme& rlwe() {
  static const Scheme s = desk_rlwe();
  return s;
}

Challenge sc(long v) { return scalar_from(tiny().group(), v); }

// Draws an honest transcript, retrying commit when the RLWE prover aborts.
Response honest_response(const Scheme& s, const SecretKey& sk, const Challenge& ch,
                         Commitment& cmt, Rng& rng) {
  for (;;) {
    auto st = commit(s, rng);
    cmt = commitment_of(s, st);
    if (auto rsp = respond(s, sk, st, ch, rng)) return *rsp;
  }
}

}  // namespace

TEST(Aggregate, SchnorrKeysExample) {
  const auto pk = aggregate_keys(tiny(), {sc(2), sc(7)}, {GroupElement{8}, GroupElement{9}});
  EXPECT_EQ(std::get<GroupElement>(pk).value, 3);
  EXPECT_EQ(aggregate_keys(tiny(), {sc(1)}, {GroupElement{9}}), PublicKey{GroupElement{9}});
  EXPECT_EQ(aggregate_keys(tiny(), {sc(0), sc(0)}, {GroupElement{8}, GroupElement{9}}),
            PublicKey{group_identity()});
}

TEST(Aggregate, SchnorrCommitmentsExample) {
  const auto c = aggregate_commitments(tiny(), {sc(2), sc(3)}, {GroupElement{16}, GroupElement{4}});
  EXPECT_EQ(std::get<GroupElement>(c).value, 8);
}

TEST(Aggregate, RlweZeroAndIdentity) {
  SeededRng rng(1);
  const auto& r = rlwe().rlwe().ring;
  const RlweResponse zero{ring_zero(r), ring_zero(r)};
  const auto agg = aggregate_responses(rlwe(), {sample_challenge(rlwe(), rng), sample_challenge(rlwe(), rng)},
                                       {zero, zero});
  EXPECT_EQ(std::get<RlweResponse>(agg), zero);
  const auto kp = keygen(rlwe(), rng);
  EXPECT_EQ(aggregate_keys(rlwe(), {ring_one(r)}, {kp.pk}), kp.pk);
  EXPECT_EQ(aggregate_keys(rlwe(), {ring_zero(r)}, {kp.pk}), PublicKey{ring_zero(r)});
}

TEST(Aggregate, Errors) {
  SeededRng rng(2);
  const auto kp = keygen(rlwe(), rng);
  EXPECT_THROW(aggregate_keys(tiny(), {sc(1)}, {kp.pk}), SchemeMismatch);
  EXPECT_THROW(aggregate_keys(tiny(), {sc(1), sc(2)}, {GroupElement{8}}), std::invalid_argument);
  EXPECT_THROW(aggregate_keys(tiny(), {}, {}), std::invalid_argument);
  EXPECT_THROW(aggregate_keys(rlwe(), {sc(1)}, {kp.pk}), SchemeMismatch);
}

TEST(Aggregate, BilinearOverSplits) {
  SeededRng rng(3);
  for (const Scheme* s : {&tiny(), &rlwe()}) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 2 + rng.below(6);
      std::vector<Challenge> w;
      std::vector<PublicKey> pks;
      for (std::size_t i = 0; i < n; ++i) {
        w.push_back(sample_challenge(*s, rng));
        pks.push_back(keygen(*s, rng).pk);
      }
      const std::size_t cut = 1 + rng.below(n - 1);
      const auto whole = aggregate_keys(*s, w, pks);
      const auto left = aggregate_keys(*s, {w.begin(), w.begin() + cut}, {pks.begin(), pks.begin() + cut});
      const auto right = aggregate_keys(*s, {w.begin() + cut, w.end()}, {pks.begin() + cut, pks.end()});
      const Challenge one = s->id() == SchemeId::Schnorr ? Challenge{scalar_from(s->group(), 1)}
                                                         : Challenge{ring_one(s->rlwe().ring)};
      ASSERT_EQ(whole, aggregate_keys(*s, {one, one}, {left, right}));
    }
  }
}

TEST(VerifyAggregated, LinearityEndToEnd) {
  SeededRng rng(4);
  for (const Scheme* s : {&tiny(), &rlwe()}) {
    int failures = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const auto t = static_cast<std::uint32_t>(1 + rng.below(8));
      const Challenge ch = sample_challenge(*s, rng);
      std::vector<Challenge> w;
      std::vector<PublicKey> pks;
      std::vector<Commitment> cmts;
      std::vector<Response> rsps;
      for (std::uint32_t i = 0; i < t; ++i) {
        const auto kp = keygen(*s, rng);
        Commitment cmt;
        rsps.push_back(honest_response(*s, kp.sk, ch, cmt, rng));
        cmts.push_back(cmt);
        pks.push_back(kp.pk);
        w.push_back(sample_challenge(*s, rng));
      }
      const Transcript tr{aggregate_commitments(*s, w, cmts), ch, aggregate_responses(*s, w, rsps)};
      if (!verify(*s, aggregate_keys(*s, w, pks), t, tr)) ++failures;
    }
    EXPECT_EQ(failures, 0) << scheme_name(s->id());
  }
}

TEST(VerifyAggregated, PerturbedResponseRejects) {
  SeededRng rng(5);
  for (const Scheme* s : {&tiny(), &rlwe()}) {
    const auto kp = keygen(*s, rng);
    const Challenge ch = sample_challenge(*s, rng);
    Commitment cmt;
    Response rsp = honest_response(*s, kp.sk, ch, cmt, rng);
    ASSERT_TRUE(verify(*s, kp.pk, 1, Transcript{cmt, ch, rsp}));
    if (s->id() == SchemeId::Schnorr) {
      auto& z = std::get<ZqScalar>(rsp);
      z = scalar_add(s->group(), z, scalar_from(s->group(), 1));
    } else {
      auto& z = std::get<RlweResponse>(rsp);
      z.z1.coeffs[3] += 1;
    }
    EXPECT_FALSE(verify(*s, kp.pk, 1, Transcript{cmt, ch, rsp}));
    EXPECT_FALSE(verify(*s, kp.pk, 0, Transcript{cmt, ch, rsp}));
  }
}

TEST(VerifyAggregated, MixedSchemesReject) {
  SeededRng rng(6);
  const auto kp = keygen(rlwe(), rng);
  EXPECT_FALSE(verify(tiny(), kp.pk, 1, Transcript{GroupElement{1}, sc(1), scalar_from(tiny().group(), 0)}));
}

TEST(Codec, RoundTrips) {
  SeededRng rng(7);
  for (const Scheme* s : {&tiny(), &rlwe()}) {
    const auto kp = keygen(*s, rng);
    EXPECT_EQ(decode_public_key(*s, encode_public_key(*s, kp.pk)), kp.pk);
    EXPECT_EQ(encode_public_key(*s, kp.pk).size(), public_key_bytes(*s));
    EXPECT_EQ(decode_secret_key(*s, encode_secret_key(*s, kp.sk)), kp.sk);
    auto st = commit(*s, rng);
    const auto cmt = commitment_of(*s, st);
    EXPECT_EQ(decode_commitment(*s, encode_commitment(*s, cmt)), cmt);
    EXPECT_EQ(encode_commitment(*s, cmt).size(), commitment_bytes(*s));
    const auto ch = sample_challenge(*s, rng);
    EXPECT_EQ(decode_challenge(*s, encode_challenge(*s, ch)), ch);
    const auto params = encode_params(*s);
    EXPECT_EQ(encode_params(decode_params(s->id(), params)), params);
    auto bytes = encode_public_key(*s, kp.pk);
    bytes.pop_back();
    EXPECT_THROW(decode_public_key(*s, bytes), ParseError);
  }
}

TEST(Codec, RejectsNonSubgroupElement) {
  EXPECT_THROW(decode_public_key(tiny(), Bytes{5}), ParseError);
  EXPECT_THROW(decode_response(tiny(), Bytes{11}), ParseError);
}

TEST(ParamsFile, InRepoFilesLoad) {
  const auto s = default_scheme(SchemeId::Schnorr);
  EXPECT_EQ(mpz_sizeinbase(s.group().p.get_mpz_t(), 2), 2048u);
  const auto r = default_scheme(SchemeId::Rlwe);
  EXPECT_EQ(r.rlwe().a, rlwe().rlwe().a);
  EXPECT_EQ(load_params_file(default_params_dir() / "schnorr-tiny.params").group().p, 23);
  EXPECT_THROW(parse_params_text("scheme=schnorr\np=23\nq=11\ng=5\n"), InvalidParams);
  EXPECT_THROW(parse_params_text("scheme=rlwe\nn=16\n"), InvalidParams);
}
