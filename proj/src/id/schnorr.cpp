#include "lsig/id/schnorr.hpp"

#include "lsig/errors.hpp"

namespace lsig {

SchnorrKeyPair schnorr_keygen(const GroupParams& params, Rng& rng) {
  return schnorr_keygen_from(params, scalar_uniform(params, rng));
}

SchnorrKeyPair schnorr_keygen_from(const GroupParams& params, const ZqScalar& s) {
  return SchnorrKeyPair{s, group_exp(params, group_generator(params), s)};
}

SchnorrCommitState schnorr_commit(const GroupParams& params, Rng& rng) {
  return schnorr_commit_from(params, scalar_uniform(params, rng));
}

SchnorrCommitState schnorr_commit_from(const GroupParams& params, const ZqScalar& x) {
  return SchnorrCommitState{x, group_exp(params, group_generator(params), x)};
}

ZqScalar schnorr_respond(const GroupParams& params, const ZqScalar& s, SchnorrCommitState& state,
                         const ZqScalar& c) {
  if (!state.x) throw NonceReuse("schnorr commit state already used");
  const ZqScalar z = scalar_add(params, scalar_mul(params, s, c), *state.x);
  state.x.reset();
  return z;
}

bool schnorr_verify(const GroupParams& params, const GroupElement& A, std::uint32_t /*t*/,
                    const GroupElement& X, const ZqScalar& c, const ZqScalar& z) {
  if (!in_subgroup(params, A.value) || !in_subgroup(params, X.value)) return false;
  if (c.value < 0 || c.value >= params.q || z.value < 0 || z.value >= params.q) return false;
  const GroupElement lhs = group_exp(params, group_generator(params), z);
  const GroupElement rhs = group_mul(params, group_exp(params, A, c), X);
  return lhs == rhs;
}

SchnorrTranscript schnorr_simulate(const GroupParams& params, const GroupElement& A,
                                   const ZqScalar& c, Rng& rng) {
  return schnorr_simulate_from(params, A, c, scalar_uniform(params, rng));
}

SchnorrTranscript schnorr_simulate_from(const GroupParams& params, const GroupElement& A,
                                        const ZqScalar& c, const ZqScalar& z) {
  const GroupElement gz = group_exp(params, group_generator(params), z);
  const GroupElement X = group_mul(params, gz, group_inv(params, group_exp(params, A, c)));
  return SchnorrTranscript{X, c, z};
}

}  // namespace lsig
