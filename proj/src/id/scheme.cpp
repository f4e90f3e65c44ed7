#include "lsig/id/scheme.hpp"

#include <stdexcept>

namespace lsig {

namespace {

template <typename A, typename B>
void check_lengths(const std::vector<A>& weights, const std::vector<B>& values) {
  if (weights.empty()) throw std::invalid_argument("aggregation needs at least one value");
  if (weights.size() != values.size()) throw std::invalid_argument("weights and values differ in length");
}

template <typename Seq>
void require_all(const Scheme& scheme, const Seq& values) {
  for (const auto& v : values) require_scheme(scheme, v);
}

void require_weights(const Scheme& scheme, const std::vector<Challenge>& weights) {
  require_all(scheme, weights);
  for (const auto& w : weights) {
    if (!in_theta(scheme, w)) throw std::invalid_argument("aggregation weight outside the challenge set");
  }
}

}  // namespace

std::string scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::Schnorr:
      return "schnorr";
    case SchemeId::Rlwe:
      return "rlwe";
  }
  throw std::invalid_argument("unknown scheme id");
}

SchemeId scheme_from_name(const std::string& name) {
  if (name == "schnorr") return SchemeId::Schnorr;
  if (name == "rlwe") return SchemeId::Rlwe;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

Scheme Scheme::schnorr(GroupParams params) {
  Scheme s;
  s.params_ = std::make_shared<const GroupParams>(std::move(params));
  return s;
}

Scheme Scheme::rlwe(RlweParams params) {
  Scheme s;
  s.params_ = std::make_shared<const RlweParams>(std::move(params));
  return s;
}

SchemeId Scheme::id() const { return params_.index() == 0 ? SchemeId::Schnorr : SchemeId::Rlwe; }

const GroupParams& Scheme::group() const {
  if (params_.index() != 0) throw SchemeMismatch("not a Schnorr scheme");
  return *std::get<0>(params_);
}

const RlweParams& Scheme::rlwe() const {
  if (params_.index() != 1) throw SchemeMismatch("not an RLWE scheme");
  return *std::get<1>(params_);
}

std::string Scheme::theta_description() const {
  if (id() == SchemeId::Schnorr) return "Z_q, q = " + group().q.get_str();
  const RingParams& r = rlwe().ring;
  return "C: deg < " + std::to_string(r.n / 2) + ", |c_i| <= " + std::to_string(r.bound_c);
}

KeyPair keygen(const Scheme& scheme, Rng& rng) {
  if (scheme.id() == SchemeId::Schnorr) {
    auto kp = schnorr_keygen(scheme.group(), rng);
    return KeyPair{kp.s, kp.A};
  }
  auto kp = rlwe_keygen(scheme.rlwe(), rng);
  return KeyPair{kp.sk, kp.u};
}

PublicKey public_key_of(const Scheme& scheme, const SecretKey& sk) {
  require_scheme(scheme, sk);
  if (scheme.id() == SchemeId::Schnorr) {
    return schnorr_keygen_from(scheme.group(), std::get<ZqScalar>(sk)).A;
  }
  const auto& s = std::get<RlweSecret>(sk);
  return rlwe_keygen_from(scheme.rlwe(), s.s1, s.s2).u;
}

CommitState commit(const Scheme& scheme, Rng& rng) {
  if (scheme.id() == SchemeId::Schnorr) return schnorr_commit(scheme.group(), rng);
  return rlwe_commit(scheme.rlwe(), rng);
}

Commitment commitment_of(const Scheme& scheme, const CommitState& state) {
  require_scheme(scheme, state);
  if (scheme.id() == SchemeId::Schnorr) return std::get<SchnorrCommitState>(state).X;
  return rlwe_commitment(scheme.rlwe(), std::get<RlweCommitState>(state));
}

std::optional<Response> respond(const Scheme& scheme, const SecretKey& sk, CommitState& state,
                                const Challenge& ch, Rng& rng) {
  require_scheme(scheme, sk);
  require_scheme(scheme, state);
  require_scheme(scheme, ch);
  if (scheme.id() == SchemeId::Schnorr) {
    return schnorr_respond(scheme.group(), std::get<ZqScalar>(sk),
                           std::get<SchnorrCommitState>(state), std::get<ZqScalar>(ch));
  }
  auto rsp = rlwe_respond(scheme.rlwe(), std::get<RlweSecret>(sk), std::get<RlweCommitState>(state),
                          std::get<RingElement>(ch), rng);
  if (!rsp) return std::nullopt;
  return Response{std::move(*rsp)};
}

bool verify(const Scheme& scheme, const PublicKey& pk, std::uint32_t t, const Transcript& tr) {
  const std::size_t k = scheme.index();
  if (pk.index() != k || tr.cmt.index() != k || tr.ch.index() != k || tr.rsp.index() != k) return false;
  if (t == 0) return false;
  if (scheme.id() == SchemeId::Schnorr) {
    return schnorr_verify(scheme.group(), std::get<GroupElement>(pk), t,
                          std::get<GroupElement>(tr.cmt), std::get<ZqScalar>(tr.ch),
                          std::get<ZqScalar>(tr.rsp));
  }
  if (!in_challenge_set(scheme.rlwe().ring, std::get<RingElement>(tr.ch))) return false;
  return rlwe_verify(scheme.rlwe(), std::get<RingElement>(pk), t, std::get<RingVector>(tr.cmt),
                     std::get<RingElement>(tr.ch), std::get<RlweResponse>(tr.rsp));
}

Transcript simulate(const Scheme& scheme, const PublicKey& pk, const Challenge& ch, Rng& rng) {
  require_scheme(scheme, pk);
  require_scheme(scheme, ch);
  if (scheme.id() == SchemeId::Schnorr) {
    auto tr = schnorr_simulate(scheme.group(), std::get<GroupElement>(pk), std::get<ZqScalar>(ch), rng);
    return Transcript{tr.X, tr.c, tr.z};
  }
  auto sim = rlwe_simulate(scheme.rlwe(), std::get<RingElement>(pk), std::get<RingElement>(ch), rng);
  return Transcript{std::move(sim.v), ch, std::move(sim.rsp)};
}

Challenge sample_challenge(const Scheme& scheme, Rng& rng) {
  if (scheme.id() == SchemeId::Schnorr) return scalar_uniform(scheme.group(), rng);
  return sample_uniform_c(scheme.rlwe().ring, rng);
}

bool in_theta(const Scheme& scheme, const Challenge& ch) {
  if (ch.index() != scheme.index()) return false;
  if (scheme.id() == SchemeId::Schnorr) {
    const auto& c = std::get<ZqScalar>(ch);
    return c.value >= 0 && c.value < scheme.group().q;
  }
  return in_challenge_set(scheme.rlwe().ring, std::get<RingElement>(ch));
}

PublicKey aggregate_keys(const Scheme& scheme, const std::vector<Challenge>& weights,
                         const std::vector<PublicKey>& pks) {
  check_lengths(weights, pks);
  require_weights(scheme, weights);
  require_all(scheme, pks);
  if (scheme.id() == SchemeId::Schnorr) {
    const GroupParams& g = scheme.group();
    std::vector<GroupElement> bases;
    std::vector<ZqScalar> exps;
    for (std::size_t i = 0; i < pks.size(); ++i) {
      bases.push_back(std::get<GroupElement>(pks[i]));
      exps.push_back(std::get<ZqScalar>(weights[i]));
    }
    return group_multi_exp(g, bases, exps);
  }
  const RingParams& r = scheme.rlwe().ring;
  RingElement acc = ring_zero(r);
  for (std::size_t i = 0; i < pks.size(); ++i) {
    acc = ring_add(r, acc, ring_mul(r, std::get<RingElement>(weights[i]), std::get<RingElement>(pks[i])));
  }
  return acc;
}

Commitment aggregate_commitments(const Scheme& scheme, const std::vector<Challenge>& weights,
                                 const std::vector<Commitment>& cmts) {
  check_lengths(weights, cmts);
  require_weights(scheme, weights);
  require_all(scheme, cmts);
  if (scheme.id() == SchemeId::Schnorr) {
    const GroupParams& g = scheme.group();
    std::vector<GroupElement> bases;
    std::vector<ZqScalar> exps;
    for (std::size_t i = 0; i < cmts.size(); ++i) {
      bases.push_back(std::get<GroupElement>(cmts[i]));
      exps.push_back(std::get<ZqScalar>(weights[i]));
    }
    return group_multi_exp(g, bases, exps);
  }
  const RingParams& r = scheme.rlwe().ring;
  RingVector acc = vec_zero(r);
  for (std::size_t i = 0; i < cmts.size(); ++i) {
    const auto& v = std::get<RingVector>(cmts[i]);
    if (v.elems.size() != r.mu) throw std::invalid_argument("commitment has wrong number of slots");
    acc = vec_add(r, acc, vec_scale(r, std::get<RingElement>(weights[i]), v));
  }
  return acc;
}

Response aggregate_responses(const Scheme& scheme, const std::vector<Challenge>& weights,
                             const std::vector<Response>& rsps) {
  check_lengths(weights, rsps);
  require_weights(scheme, weights);
  require_all(scheme, rsps);
  if (scheme.id() == SchemeId::Schnorr) {
    const GroupParams& g = scheme.group();
    ZqScalar acc = scalar_from(g, 0);
    for (std::size_t i = 0; i < rsps.size(); ++i) {
      acc = scalar_add(g, acc, scalar_mul(g, std::get<ZqScalar>(weights[i]), std::get<ZqScalar>(rsps[i])));
    }
    return acc;
  }
  const RingParams& r = scheme.rlwe().ring;
  RlweResponse acc{ring_zero(r), ring_zero(r)};
  for (std::size_t i = 0; i < rsps.size(); ++i) {
    const auto& w = std::get<RingElement>(weights[i]);
    const auto& z = std::get<RlweResponse>(rsps[i]);
    acc.z1 = ring_add(r, acc.z1, ring_mul(r, w, z.z1));
    acc.z2 = ring_add(r, acc.z2, ring_mul(r, w, z.z2));
  }
  return acc;
}

SecretKey aggregate_secrets(const Scheme& scheme, const std::vector<Challenge>& weights,
                            const std::vector<SecretKey>& sks) {
  check_lengths(weights, sks);
  require_weights(scheme, weights);
  require_all(scheme, sks);
  if (scheme.id() == SchemeId::Schnorr) {
    const GroupParams& g = scheme.group();
    ZqScalar acc = scalar_from(g, 0);
    for (std::size_t i = 0; i < sks.size(); ++i) {
      acc = scalar_add(g, acc, scalar_mul(g, std::get<ZqScalar>(weights[i]), std::get<ZqScalar>(sks[i])));
    }
    return acc;
  }
  const RingParams& r = scheme.rlwe().ring;
  RlweSecret acc{ring_zero(r), ring_zero(r)};
  for (std::size_t i = 0; i < sks.size(); ++i) {
    const auto& w = std::get<RingElement>(weights[i]);
    const auto& s = std::get<RlweSecret>(sks[i]);
    acc.s1 = ring_add(r, acc.s1, ring_mul(r, w, s.s1));
    acc.s2 = ring_add(r, acc.s2, ring_mul(r, w, s.s2));
  }
  return acc;
}

}  // namespace lsig
