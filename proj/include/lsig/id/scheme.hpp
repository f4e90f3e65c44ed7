#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lsig/algebra/group.hpp"
#include "lsig/algebra/ring.hpp"
#include "lsig/errors.hpp"
#include "lsig/id/rlwe.hpp"
#include "lsig/id/schnorr.hpp"
#include "lsig/rng.hpp"

namespace lsig {

// Wire and file tag of a backend.
enum class SchemeId : std::uint8_t { Schnorr = 0x01, Rlwe = 0x02 };

std::string scheme_name(SchemeId id);
SchemeId scheme_from_name(const std::string& name);

// Backend selector plus its parameters. Copies share the parameter block.
class Scheme {
 public:
  static Scheme schnorr(GroupParams params);
  static Scheme rlwe(RlweParams params);

  SchemeId id() const;
  // Variant index used by every value type below: 0 Schnorr, 1 RLWE.
  std::size_t index() const { return params_.index(); }
  const GroupParams& group() const;
  const RlweParams& rlwe() const;
  // Short human-readable description of the challenge set.
  std::string theta_description() const;

 private:
  std::variant<std::shared_ptr<const GroupParams>, std::shared_ptr<const RlweParams>> params_;
};

using PublicKey = std::variant<GroupElement, RingElement>;
using SecretKey = std::variant<ZqScalar, RlweSecret>;
using Commitment = std::variant<GroupElement, RingVector>;
using Response = std::variant<ZqScalar, RlweResponse>;
using Challenge = std::variant<ZqScalar, RingElement>;
using CommitState = std::variant<SchnorrCommitState, RlweCommitState>;

struct KeyPair {
  SecretKey sk;
  PublicKey pk;
};

struct Transcript {
  Commitment cmt;
  Challenge ch;
  Response rsp;
};

KeyPair keygen(const Scheme& scheme, Rng& rng);
// Public key belonging to a secret key.
PublicKey public_key_of(const Scheme& scheme, const SecretKey& sk);

CommitState commit(const Scheme& scheme, Rng& rng);
Commitment commitment_of(const Scheme& scheme, const CommitState& state);

// nullopt is the RLWE Abort outcome. Consumes the state.
std::optional<Response> respond(const Scheme& scheme, const SecretKey& sk, CommitState& state,
                                const Challenge& ch, Rng& rng);

// V_t. Mismatched or malformed values reject.
bool verify(const Scheme& scheme, const PublicKey& pk, std::uint32_t t, const Transcript& tr);

Transcript simulate(const Scheme& scheme, const PublicKey& pk, const Challenge& ch, Rng& rng);

Challenge sample_challenge(const Scheme& scheme, Rng& rng);
bool in_theta(const Scheme& scheme, const Challenge& ch);

// Theta-weighted module sums. Throw std::invalid_argument on empty input or
// length mismatch and SchemeMismatch when a value belongs to another backend.
PublicKey aggregate_keys(const Scheme& scheme, const std::vector<Challenge>& weights,
                         const std::vector<PublicKey>& pks);
Commitment aggregate_commitments(const Scheme& scheme, const std::vector<Challenge>& weights,
                                 const std::vector<Commitment>& cmts);
Response aggregate_responses(const Scheme& scheme, const std::vector<Challenge>& weights,
                             const std::vector<Response>& rsps);
// Secret of the aggregated key, sum of lambda_i sk_i.
SecretKey aggregate_secrets(const Scheme& scheme, const std::vector<Challenge>& weights,
                            const std::vector<SecretKey>& sks);

// Throws SchemeMismatch unless v holds the alternative for this scheme.
template <typename Variant>
void require_scheme(const Scheme& scheme, const Variant& v) {
  if (v.index() != scheme.index()) {
    throw SchemeMismatch("value belongs to a different scheme than " + scheme_name(scheme.id()));
  }
}

}  // namespace lsig
