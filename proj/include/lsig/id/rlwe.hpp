#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lsig/algebra/ring.hpp"
#include "lsig/rng.hpp"

namespace lsig {

// Ring parameters together with the public invertible element a.
struct RlweParams {
  RingParams ring;
  RingElement a;
};

// Samples uniform a until it is invertible. `attempts`, when given, receives
// the number of candidates drawn.
RlweParams rlwe_setup(std::uint32_t n, std::uint64_t q, double sigma, std::uint32_t mu, Rng& rng,
                      std::uint32_t* attempts = nullptr);
// Rebuilds params around a given a; throws InvalidParams if a is not invertible.
RlweParams rlwe_params_from(RingParams ring, RingElement a);

struct RlweSecret {
  RingElement s1;
  RingElement s2;

  friend bool operator==(const RlweSecret&, const RlweSecret&) = default;
};

struct RlweKeyPair {
  RlweSecret sk;
  RingElement u;  // a s1 + s2
};

struct RlweCommitState {
  RingVector y1;
  RingVector y2;
  bool used = false;
};

struct RlweResponse {
  RingElement z1;
  RingElement z2;

  friend bool operator==(const RlweResponse&, const RlweResponse&) = default;
};

// Internals of one respond call, for tests.
struct RlweRespondTrace {
  std::vector<std::uint32_t> accepted;  // the index set A
  std::uint32_t j_star = 0;
  RingElement z1_slot;  // z_{1 j*}
  RingElement z2_slot;
};

RlweKeyPair rlwe_keygen(const RlweParams& params, Rng& rng);
RlweKeyPair rlwe_keygen_from(const RlweParams& params, const RingElement& s1, const RingElement& s2);

RingVector rlwe_commitment(const RlweParams& params, const RlweCommitState& state);
// Returns the state; the commitment is v_j = a y_1j + y_2j.
RlweCommitState rlwe_commit(const RlweParams& params, Rng& rng);
RlweCommitState rlwe_commit_from(const RlweParams& params, RingVector y1, RingVector y2);

// nullopt is Abort (A empty). Throws ChallengeOutOfSet when c is not in C and
// NonceReuse when the state was already used.
std::optional<RlweResponse> rlwe_respond(const RlweParams& params, const RlweSecret& sk,
                                         RlweCommitState& state, const RingElement& c, Rng& rng,
                                         RlweRespondTrace* trace = nullptr);

// Accepts iff both responses have inf-norm <= eta_t and
// sum_j v_j == a z1 + z2 - u c.
bool rlwe_verify(const RlweParams& params, const RingElement& u, std::uint32_t t,
                 const RingVector& v, const RingElement& c, const RlweResponse& rsp);

struct RlweSimulated {
  RingVector v;
  RlweResponse rsp;
  std::uint32_t j_star = 0;
  RingElement z1_slot;
  RingElement z2_slot;
};

RlweSimulated rlwe_simulate(const RlweParams& params, const RingElement& u, const RingElement& c,
                            Rng& rng);

}  // namespace lsig
