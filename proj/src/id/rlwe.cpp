#include "lsig/id/rlwe.hpp"

#include <utility>

#include "lsig/errors.hpp"

namespace lsig {

namespace {

RingVector sample_y_vector(const RingParams& ring, Rng& rng) {
  RingVector v;
  v.elems.reserve(ring.mu);
  for (std::uint32_t j = 0; j < ring.mu; ++j) v.elems.push_back(sample_uniform_y(ring, rng));
  return v;
}

bool in_z(const RingParams& ring, const RingElement& z) { return inf_norm(z) <= ring.bound_z; }

}  // namespace

RlweParams rlwe_setup(std::uint32_t n, std::uint64_t q, double sigma, std::uint32_t mu, Rng& rng,
                      std::uint32_t* attempts) {
  RingParams ring = RingParams::create(n, q, sigma, mu);
  std::uint32_t count = 0;
  for (;;) {
    ++count;
    RingElement a = sample_uniform_rq(ring, rng);
    if (ring_invert(ring, a)) {
      if (attempts) *attempts = count;
      return RlweParams{std::move(ring), std::move(a)};
    }
  }
}

RlweParams rlwe_params_from(RingParams ring, RingElement a) {
  if (!is_canonical(ring, a)) throw InvalidParams("public element a is not a canonical ring element");
  if (!ring_invert(ring, a)) throw InvalidParams("public element a is not invertible");
  return RlweParams{std::move(ring), std::move(a)};
}

RlweKeyPair rlwe_keygen(const RlweParams& params, Rng& rng) {
  RingElement s1 = sample_gaussian(params.ring, rng);
  RingElement s2 = sample_gaussian(params.ring, rng);
  return rlwe_keygen_from(params, s1, s2);
}

RlweKeyPair rlwe_keygen_from(const RlweParams& params, const RingElement& s1, const RingElement& s2) {
  const RingParams& r = params.ring;
  RingElement u = ring_add(r, ring_mul(r, params.a, s1), s2);
  return RlweKeyPair{RlweSecret{ring_from(r, s1.coeffs), ring_from(r, s2.coeffs)}, std::move(u)};
}

RingVector rlwe_commitment(const RlweParams& params, const RlweCommitState& state) {
  const RingParams& r = params.ring;
  RingVector v;
  v.elems.reserve(state.y1.elems.size());
  for (std::size_t j = 0; j < state.y1.elems.size(); ++j) {
    v.elems.push_back(ring_add(r, ring_mul(r, params.a, state.y1.elems[j]), state.y2.elems[j]));
  }
  return v;
}

RlweCommitState rlwe_commit(const RlweParams& params, Rng& rng) {
  RingVector y1 = sample_y_vector(params.ring, rng);
  RingVector y2 = sample_y_vector(params.ring, rng);
  return rlwe_commit_from(params, std::move(y1), std::move(y2));
}

RlweCommitState rlwe_commit_from(const RlweParams& params, RingVector y1, RingVector y2) {
  if (y1.elems.size() != params.ring.mu || y2.elems.size() != params.ring.mu) {
    throw std::invalid_argument("commit masks must have mu slots");
  }
  return RlweCommitState{std::move(y1), std::move(y2), false};
}

std::optional<RlweResponse> rlwe_respond(const RlweParams& params, const RlweSecret& sk,
                                         RlweCommitState& state, const RingElement& c, Rng& rng,
                                         RlweRespondTrace* trace) {
  const RingParams& r = params.ring;
  if (!in_challenge_set(r, c)) throw ChallengeOutOfSet("challenge is not in C");
  if (state.used) throw NonceReuse("rlwe commit state already used");
  state.used = true;

  const RingElement s1c = ring_mul(r, sk.s1, c);
  const RingElement s2c = ring_mul(r, sk.s2, c);
  std::vector<std::uint32_t> accepted;
  for (std::uint32_t j = 0; j < r.mu; ++j) {
    if (in_z(r, ring_add(r, s1c, state.y1.elems[j])) && in_z(r, ring_add(r, s2c, state.y2.elems[j]))) {
      accepted.push_back(j);
    }
  }
  if (trace) trace->accepted = accepted;
  if (accepted.empty()) return std::nullopt;

  const std::uint32_t j_star = accepted[rng.below(accepted.size())];
  RingElement z1 = ring_add(r, s1c, state.y1.elems[j_star]);
  RingElement z2 = ring_add(r, s2c, state.y2.elems[j_star]);
  if (trace) {
    trace->j_star = j_star;
    trace->z1_slot = z1;
    trace->z2_slot = z2;
  }
  for (std::uint32_t j = 0; j < r.mu; ++j) {
    if (j == j_star) continue;
    z1 = ring_add(r, z1, state.y1.elems[j]);
    z2 = ring_add(r, z2, state.y2.elems[j]);
  }
  return RlweResponse{std::move(z1), std::move(z2)};
}

bool rlwe_verify(const RlweParams& params, const RingElement& u, std::uint32_t t,
                 const RingVector& v, const RingElement& c, const RlweResponse& rsp) {
  const RingParams& r = params.ring;
  if (t == 0) return false;
  if (v.elems.size() != r.mu) return false;
  for (const auto& e : v.elems) {
    if (!is_canonical(r, e)) return false;
  }
  if (!is_canonical(r, u) || !is_canonical(r, c) || !is_canonical(r, rsp.z1) ||
      !is_canonical(r, rsp.z2)) {
    return false;
  }
  const std::int64_t eta = r.eta(t);
  if (inf_norm(rsp.z1) > eta || inf_norm(rsp.z2) > eta) return false;
  const RingElement lhs = vec_sum(r, v);
  const RingElement rhs =
      ring_sub(r, ring_add(r, ring_mul(r, params.a, rsp.z1), rsp.z2), ring_mul(r, u, c));
  return lhs == rhs;
}

RlweSimulated rlwe_simulate(const RlweParams& params, const RingElement& u, const RingElement& c,
                            Rng& rng) {
  const RingParams& r = params.ring;
  RlweSimulated out;
  out.j_star = static_cast<std::uint32_t>(rng.below(r.mu));
  out.z1_slot = sample_uniform_z(r, rng);
  out.z2_slot = sample_uniform_z(r, rng);
  RingElement z1 = out.z1_slot;
  RingElement z2 = out.z2_slot;
  out.v.elems.resize(r.mu);
  for (std::uint32_t j = 0; j < r.mu; ++j) {
    if (j == out.j_star) {
      out.v.elems[j] = ring_sub(
          r, ring_add(r, ring_mul(r, params.a, out.z1_slot), out.z2_slot), ring_mul(r, u, c));
      continue;
    }
    const RingElement y1 = sample_uniform_y(r, rng);
    const RingElement y2 = sample_uniform_y(r, rng);
    out.v.elems[j] = ring_add(r, ring_mul(r, params.a, y1), y2);
    z1 = ring_add(r, z1, y1);
    z2 = ring_add(r, z2, y2);
  }
  out.rsp = RlweResponse{std::move(z1), std::move(z2)};
  return out;
}

}  // namespace lsig
