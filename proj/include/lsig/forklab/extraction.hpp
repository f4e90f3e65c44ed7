#pragma once

#include <cstdint>
#include <optional>

#include "lsig/forklab/forklab.hpp"
#include "lsig/id/scheme.hpp"

namespace lsig::forklab {

// Size of the oracle range used to drive a scheme's weights and challenges:
// q for Schnorr (must fit in 64 bits), |C| = (2 log n + 1)^(n/2) for RLWE.
std::uint64_t oracle_domain(const Scheme& scheme);
// Bijection {0, ..., oracle_domain - 1} -> Theta.
Challenge challenge_from_oracle(const Scheme& scheme, std::uint64_t h);

struct CoopInput {
  KeyPair target;
  std::uint32_t t = 2;
};

struct CoopSide {
  Challenge lambda1;
  Challenge c;
  Commitment cmt;
  Response z;
};

// Honest stand-in for an impersonator: h_1 is the weight of the target key,
// h_2 the challenge. Co-signer keys, their weights, and all nonces come from
// the coin. Returns (1, 2) when the aggregated transcript verifies, (0, 0)
// otherwise (including a lattice prover abort).
class CooperativeProver {
 public:
  explicit CooperativeProver(Scheme scheme) : scheme_(std::move(scheme)) {}
  RunOutput<CoopSide> operator()(const CoopInput& x, const OracleValues& h, const Coin& rho) const;
  const Scheme& scheme() const { return scheme_; }

 private:
  Scheme scheme_;
};

// a_1 = (k0 - k1) / (lambda1 - lambda1'), k = (z - z') / (c - c').
ZqScalar extract_schnorr_secret(const Scheme& scheme, const ForkSuccess<CoopSide>& fork);

struct RingSisSolution {
  RingElement alpha1;
  RingElement alpha2;
  RingElement alpha3;
};

RingSisSolution extract_ring_sis(const Scheme& scheme, const ForkSuccess<CoopSide>& fork);
// a alpha1 + alpha2 + u1 alpha3 == 0 and alpha3 != 0.
bool ring_sis_holds(const Scheme& scheme, const RingElement& u1, const RingSisSolution& sol);
// Euclidean length of (alpha1, alpha2, alpha3) over centered coefficients.
double ring_sis_length(const RingSisSolution& sol);
// 16 eta_t sqrt(n) log^2 n.
double ring_sis_bound(const RingParams& ring, std::uint32_t t);

struct ExtractionReport {
  std::uint64_t attempts = 0;
  std::uint64_t forks = 0;      // fork returned non-Fail
  std::uint64_t extracted = 0;  // Schnorr: recovered == secret; RLWE: equation holds within the bound
  std::uint64_t wrong = 0;
  double max_length = 0;        // RLWE only
  double bound = 0;             // RLWE only
};

ExtractionReport run_schnorr_extraction(const Scheme& scheme, std::uint32_t t, std::uint64_t attempts, Rng& rng);
ExtractionReport run_rlwe_extraction(const Scheme& scheme, std::uint32_t t, std::uint64_t attempts, Rng& rng);

}  // namespace lsig::forklab
