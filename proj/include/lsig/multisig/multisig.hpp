#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsig/bytes.hpp"
#include "lsig/id/scheme.hpp"
#include "lsig/rng.hpp"

namespace lsig {

inline constexpr std::uint8_t kDomainH0 = 0x00;
inline constexpr std::uint8_t kDomainH1 = 0x01;

// Random oracle into Theta: a SHAKE256 stream over (domain || input) feeds a
// rejection sampler. Schnorr: fixed-width chunks masked to bitlen(q) and
// rejected when >= q. RLWE: each of the n/2 low coefficients takes the next
// byte below the largest multiple of (2 log n + 1) and reduces it.
Challenge hash_to_theta(const Scheme& scheme, std::uint8_t domain, ByteSpan input);

// Public keys of one signing group, sorted by their serialized bytes.
class SignerSet {
 public:
  // Throws std::invalid_argument on an empty list or duplicate keys.
  static SignerSet create(const Scheme& scheme, std::vector<PublicKey> pks);

  const std::vector<PublicKey>& keys() const { return keys_; }
  // Concatenation of the sorted fixed-width key encodings.
  const Bytes& canonical_encoding() const { return encoding_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(keys_.size()); }
  std::optional<std::uint32_t> index_of(const PublicKey& pk) const;

 private:
  std::vector<PublicKey> keys_;
  std::vector<Bytes> encoded_;
  Bytes encoding_;
};

struct AggregatedKey {
  PublicKey pk_bar;
  std::uint32_t t = 0;

  friend bool operator==(const AggregatedKey&, const AggregatedKey&) = default;
};

struct MultiSignature {
  Commitment cmt_bar;
  Response rsp_bar;

  friend bool operator==(const MultiSignature&, const MultiSignature&) = default;
};

// lambda_i = H0(lp(pk_i) || lp(PK)), in set order.
std::vector<Challenge> aggregation_weights(const Scheme& scheme, const SignerSet& set);
AggregatedKey key_aggregate(const Scheme& scheme, const SignerSet& set);

// r_i = H0(lp(CMT_i) || lp(pk_i)).
Challenge commitment_digest(const Scheme& scheme, const Commitment& cmt, const PublicKey& pk);
// CH = H1(lp(pk_bar) || lp(CMT_bar) || lp(M)).
Challenge signing_challenge(const Scheme& scheme, const PublicKey& pk_bar, const Commitment& cmt_bar,
                            ByteSpan message);

// Uses only its arguments.
bool verify(const Scheme& scheme, const AggregatedKey& key, ByteSpan message, const MultiSignature& sig);

// cmt_bar || rsp_bar at their fixed widths.
Bytes encode_signature(const Scheme& scheme, const MultiSignature& sig);
MultiSignature decode_signature(const Scheme& scheme, ByteSpan in);
// pk_bar || t (u32 little-endian).
Bytes encode_aggregated_key(const Scheme& scheme, const AggregatedKey& key);
AggregatedKey decode_aggregated_key(const Scheme& scheme, ByteSpan in);

enum class Phase { Init, SentR1, SentCmt, SentRsp, Done, Aborted };
std::string phase_name(Phase p);

// One signer's view of a three-round signing run. Purely reactive: the caller
// delivers each round's messages and forwards the returned broadcast.
class SignSession {
 public:
  // Throws std::invalid_argument when pk is not in the set.
  SignSession(Scheme scheme, SecretKey sk, PublicKey pk, SignerSet set, Bytes message);

  // Commits and returns r_i. INIT -> SENT_R1.
  Challenge round1(Rng& rng);
  // Registers r_j for every signer and releases CMT_i (SENT_R1 -> SENT_CMT).
  // Returns nullopt and stays in SENT_R1 while some r_j is missing.
  std::optional<Commitment> round2(const std::map<std::uint32_t, Challenge>& digests);
  // Checks every CMT_j against r_j, derives CH and responds (SENT_CMT ->
  // SENT_RSP). Returns nullopt with the phase unchanged while some CMT_j is
  // missing, or nullopt in ABORTED on a digest mismatch or a prover abort.
  std::optional<Response> round3(const std::map<std::uint32_t, Commitment>& cmts, Rng& rng);
  // Aggregates all responses. SENT_RSP -> DONE. Throws std::invalid_argument
  // when a response is missing.
  MultiSignature finish(const std::map<std::uint32_t, Response>& rsps);
  // Moves to ABORTED from any phase.
  void abort(std::string reason);

  Phase phase() const { return phase_; }
  const std::string& abort_reason() const { return abort_reason_; }
  std::uint32_t my_index() const { return my_index_; }
  const SignerSet& signers() const { return set_; }
  const AggregatedKey& aggregated_key() const { return agg_; }
  const std::vector<Challenge>& weights() const { return weights_; }
  const Bytes& message() const { return message_; }

 private:
  void require_phase(Phase expected, const char* op) const;

  Scheme scheme_;
  SecretKey sk_;
  PublicKey pk_;
  SignerSet set_;
  Bytes message_;
  std::uint32_t my_index_ = 0;
  std::vector<Challenge> weights_;
  AggregatedKey agg_;

  Phase phase_ = Phase::Init;
  std::string abort_reason_;
  std::optional<CommitState> commit_state_;
  std::map<std::uint32_t, Challenge> received_r1_;
  std::map<std::uint32_t, Commitment> received_cmts_;
  std::optional<Commitment> cmt_bar_;
};

// [version:1][scheme:1][session-id:16][round:1][sender:4 BE][length:4 BE][payload]
struct Envelope {
  std::uint8_t version = 1;
  SchemeId scheme = SchemeId::Schnorr;
  std::array<std::uint8_t, 16> session_id{};
  std::uint8_t round = 1;
  std::uint32_t sender = 0;
  Bytes payload;

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

Bytes encode_envelope(const Envelope& env);
// Throws ParseError on unknown version, scheme or round, or a length mismatch.
Envelope decode_envelope(ByteSpan in);

}  // namespace lsig
