#pragma once

#include <optional>

#include "lsig/algebra/group.hpp"
#include "lsig/rng.hpp"

namespace lsig {

struct SchnorrKeyPair {
  ZqScalar s;
  GroupElement A;  // g^s
};

// Prover state between commit and respond. The nonce is cleared by the first
// response; a second response throws NonceReuse.
struct SchnorrCommitState {
  std::optional<ZqScalar> x;
  GroupElement X;
};

struct SchnorrTranscript {
  GroupElement X;
  ZqScalar c;
  ZqScalar z;
};

SchnorrKeyPair schnorr_keygen(const GroupParams& params, Rng& rng);
SchnorrKeyPair schnorr_keygen_from(const GroupParams& params, const ZqScalar& s);

SchnorrCommitState schnorr_commit(const GroupParams& params, Rng& rng);
SchnorrCommitState schnorr_commit_from(const GroupParams& params, const ZqScalar& x);

// z = s c + x mod q.
ZqScalar schnorr_respond(const GroupParams& params, const ZqScalar& s, SchnorrCommitState& state,
                         const ZqScalar& c);

// Accepts iff g^z == A^c X. t is accepted for interface uniformity and ignored.
// Elements outside <g> are rejected.
bool schnorr_verify(const GroupParams& params, const GroupElement& A, std::uint32_t t,
                    const GroupElement& X, const ZqScalar& c, const ZqScalar& z);

// z uniform, X = g^z A^-c.
SchnorrTranscript schnorr_simulate(const GroupParams& params, const GroupElement& A,
                                   const ZqScalar& c, Rng& rng);
SchnorrTranscript schnorr_simulate_from(const GroupParams& params, const GroupElement& A,
                                        const ZqScalar& c, const ZqScalar& z);

}  // namespace lsig
