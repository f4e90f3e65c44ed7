#include "lsig/multisig/multisig.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lsig/errors.hpp"
#include "lsig/id/codec.hpp"
#include "lsig/xof.hpp"

namespace lsig {

namespace {

constexpr std::uint8_t kWireVersion = 1;

Bytes oracle_input(std::uint8_t domain, ByteSpan input) {
  Bytes seed;
  seed.reserve(input.size() + 1);
  seed.push_back(domain);
  seed.insert(seed.end(), input.begin(), input.end());
  return seed;
}

}  // namespace

Challenge hash_to_theta(const Scheme& scheme, std::uint8_t domain, ByteSpan input) {
  XofStream xof(oracle_input(domain, input));
  if (scheme.id() == SchemeId::Schnorr) {
    const GroupParams& g = scheme.group();
    const std::size_t bits = mpz_sizeinbase(g.q.get_mpz_t(), 2);
    Bytes chunk(g.scalar_bytes());
    for (;;) {
      xof.read(chunk);
      if (bits % 8 != 0) chunk[0] &= static_cast<std::uint8_t>((1u << (bits % 8)) - 1);
      mpz_class v = import_be(chunk);
      if (v < g.q) return ZqScalar{v};
    }
  }
  const RingParams& r = scheme.rlwe().ring;
  const unsigned alphabet = static_cast<unsigned>(2 * r.bound_c + 1);
  const unsigned limit = 256 - 256 % alphabet;
  RingElement c = ring_zero(r);
  for (std::size_t i = 0; i < r.n / 2; ++i) {
    unsigned b;
    do {
      b = xof.next_byte();
    } while (b >= limit);
    c.coeffs[i] = static_cast<std::int64_t>(b % alphabet) - r.bound_c;
  }
  return c;
}

SignerSet SignerSet::create(const Scheme& scheme, std::vector<PublicKey> pks) {
  if (pks.empty()) throw std::invalid_argument("signer set is empty");
  std::vector<Bytes> enc;
  enc.reserve(pks.size());
  for (const auto& pk : pks) enc.push_back(encode_public_key(scheme, pk));
  std::vector<std::size_t> order(pks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return enc[a] < enc[b]; });
  SignerSet set;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && enc[order[k]] == enc[order[k - 1]]) {
      throw std::invalid_argument("signer set contains a duplicate key");
    }
    set.keys_.push_back(std::move(pks[order[k]]));
    set.encoded_.push_back(enc[order[k]]);
    set.encoding_.insert(set.encoding_.end(), enc[order[k]].begin(), enc[order[k]].end());
  }
  return set;
}

std::optional<std::uint32_t> SignerSet::index_of(const PublicKey& pk) const {
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] == pk) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::vector<Challenge> aggregation_weights(const Scheme& scheme, const SignerSet& set) {
  std::vector<Challenge> out;
  out.reserve(set.size());
  for (const auto& pk : set.keys()) {
    ByteWriter w;
    w.put_framed(encode_public_key(scheme, pk));
    w.put_framed(set.canonical_encoding());
    out.push_back(hash_to_theta(scheme, kDomainH0, w.bytes()));
  }
  return out;
}

AggregatedKey key_aggregate(const Scheme& scheme, const SignerSet& set) {
  return AggregatedKey{aggregate_keys(scheme, aggregation_weights(scheme, set), set.keys()), set.size()};
}

Challenge commitment_digest(const Scheme& scheme, const Commitment& cmt, const PublicKey& pk) {
  ByteWriter w;
  w.put_framed(encode_commitment(scheme, cmt));
  w.put_framed(encode_public_key(scheme, pk));
  return hash_to_theta(scheme, kDomainH0, w.bytes());
}

Challenge signing_challenge(const Scheme& scheme, const PublicKey& pk_bar, const Commitment& cmt_bar,
                            ByteSpan message) {
  ByteWriter w;
  w.put_framed(encode_public_key(scheme, pk_bar));
  w.put_framed(encode_commitment(scheme, cmt_bar));
  w.put_framed(message);
  return hash_to_theta(scheme, kDomainH1, w.bytes());
}

bool verify(const Scheme& scheme, const AggregatedKey& key, ByteSpan message, const MultiSignature& sig) {
  const std::size_t k = scheme.index();
  if (key.pk_bar.index() != k || sig.cmt_bar.index() != k || sig.rsp_bar.index() != k) return false;
  try {
    const Challenge ch = signing_challenge(scheme, key.pk_bar, sig.cmt_bar, message);
    return verify(scheme, key.pk_bar, key.t, Transcript{sig.cmt_bar, ch, sig.rsp_bar});
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Bytes encode_signature(const Scheme& scheme, const MultiSignature& sig) {
  Bytes out = encode_commitment(scheme, sig.cmt_bar);
  const Bytes rsp = encode_response(scheme, sig.rsp_bar);
  out.insert(out.end(), rsp.begin(), rsp.end());
  return out;
}

MultiSignature decode_signature(const Scheme& scheme, ByteSpan in) {
  const std::size_t cb = commitment_bytes(scheme);
  if (in.size() != cb + response_bytes(scheme)) throw ParseError("signature has wrong length");
  return MultiSignature{decode_commitment(scheme, in.subspan(0, cb)), decode_response(scheme, in.subspan(cb))};
}

Bytes encode_aggregated_key(const Scheme& scheme, const AggregatedKey& key) {
  ByteWriter w;
  w.put_bytes(encode_public_key(scheme, key.pk_bar));
  w.put_u32_le(key.t);
  return std::move(w).take();
}

AggregatedKey decode_aggregated_key(const Scheme& scheme, ByteSpan in) {
  const std::size_t pb = public_key_bytes(scheme);
  if (in.size() != pb + 4) throw ParseError("aggregated key has wrong length");
  ByteReader rd(in.subspan(pb));
  const std::uint32_t t = rd.get_u32_le();
  if (t == 0) throw ParseError("aggregated key with t = 0");
  return AggregatedKey{decode_public_key(scheme, in.subspan(0, pb)), t};
}

std::string phase_name(Phase p) {
  switch (p) {
    case Phase::Init:
      return "INIT";
    case Phase::SentR1:
      return "SENT_R1";
    case Phase::SentCmt:
      return "SENT_CMT";
    case Phase::SentRsp:
      return "SENT_RSP";
    case Phase::Done:
      return "DONE";
    case Phase::Aborted:
      return "ABORTED";
  }
  return "?";
}

SignSession::SignSession(Scheme scheme, SecretKey sk, PublicKey pk, SignerSet set, Bytes message)
    : scheme_(std::move(scheme)),
      sk_(std::move(sk)),
      pk_(std::move(pk)),
      set_(std::move(set)),
      message_(std::move(message)) {
  require_scheme(scheme_, sk_);
  require_scheme(scheme_, pk_);
  const auto idx = set_.index_of(pk_);
  if (!idx) throw std::invalid_argument("public key is not in the signer set");
  my_index_ = *idx;
  weights_ = aggregation_weights(scheme_, set_);
  agg_ = AggregatedKey{aggregate_keys(scheme_, weights_, set_.keys()), set_.size()};
}

void SignSession::require_phase(Phase expected, const char* op) const {
  if (phase_ != expected) {
    throw SessionStateError(std::string(op) + " called in phase " + phase_name(phase_));
  }
}

Challenge SignSession::round1(Rng& rng) {
  require_phase(Phase::Init, "round1");
  commit_state_ = commit(scheme_, rng);
  phase_ = Phase::SentR1;
  return commitment_digest(scheme_, commitment_of(scheme_, *commit_state_), pk_);
}

std::optional<Commitment> SignSession::round2(const std::map<std::uint32_t, Challenge>& digests) {
  require_phase(Phase::SentR1, "round2");
  for (std::uint32_t j = 0; j < set_.size(); ++j) {
    if (!digests.count(j)) return std::nullopt;
  }
  received_r1_.clear();
  for (std::uint32_t j = 0; j < set_.size(); ++j) received_r1_.emplace(j, digests.at(j));
  phase_ = Phase::SentCmt;
  return commitment_of(scheme_, *commit_state_);
}

std::optional<Response> SignSession::round3(const std::map<std::uint32_t, Commitment>& cmts, Rng& rng) {
  require_phase(Phase::SentCmt, "round3");
  for (std::uint32_t j = 0; j < set_.size(); ++j) {
    if (!cmts.count(j)) return std::nullopt;
  }
  std::vector<Commitment> ordered;
  ordered.reserve(set_.size());
  for (std::uint32_t j = 0; j < set_.size(); ++j) {
    const Commitment& cmt = cmts.at(j);
    if (cmt.index() != scheme_.index() || commitment_digest(scheme_, cmt, set_.keys()[j]) != received_r1_.at(j)) {
      abort("commitment mismatch from signer " + std::to_string(j));
      return std::nullopt;
    }
    ordered.push_back(cmt);
  }
  received_cmts_ = cmts;
  cmt_bar_ = aggregate_commitments(scheme_, weights_, ordered);
  const Challenge ch = signing_challenge(scheme_, agg_.pk_bar, *cmt_bar_, message_);
  auto rsp = respond(scheme_, sk_, *commit_state_, ch, rng);
  commit_state_.reset();
  if (!rsp) {
    abort("prover abort (no admissible slot)");
    return std::nullopt;
  }
  phase_ = Phase::SentRsp;
  return rsp;
}

MultiSignature SignSession::finish(const std::map<std::uint32_t, Response>& rsps) {
  require_phase(Phase::SentRsp, "finish");
  std::vector<Response> ordered;
  ordered.reserve(set_.size());
  for (std::uint32_t j = 0; j < set_.size(); ++j) {
    auto it = rsps.find(j);
    if (it == rsps.end()) throw std::invalid_argument("missing response from signer " + std::to_string(j));
    if (it->second.index() != scheme_.index()) {
      throw SchemeMismatch("response from signer " + std::to_string(j) + " has the wrong scheme");
    }
    ordered.push_back(it->second);
  }
  MultiSignature sig{*cmt_bar_, aggregate_responses(scheme_, weights_, ordered)};
  phase_ = Phase::Done;
  return sig;
}

void SignSession::abort(std::string reason) {
  phase_ = Phase::Aborted;
  abort_reason_ = std::move(reason);
  commit_state_.reset();
}

Bytes encode_envelope(const Envelope& env) {
  ByteWriter w;
  w.put_u8(env.version);
  w.put_u8(static_cast<std::uint8_t>(env.scheme));
  w.put_bytes(env.session_id);
  w.put_u8(env.round);
  w.put_u32_be(env.sender);
  w.put_u32_be(static_cast<std::uint32_t>(env.payload.size()));
  w.put_bytes(env.payload);
  return std::move(w).take();
}

Envelope decode_envelope(ByteSpan in) {
  ByteReader rd(in);
  Envelope env;
  env.version = rd.get_u8();
  if (env.version != kWireVersion) throw ParseError("unsupported envelope version");
  const std::uint8_t scheme = rd.get_u8();
  if (scheme != static_cast<std::uint8_t>(SchemeId::Schnorr) && scheme != static_cast<std::uint8_t>(SchemeId::Rlwe)) {
    throw ParseError("unknown scheme tag in envelope");
  }
  env.scheme = static_cast<SchemeId>(scheme);
  const ByteSpan sid = rd.get_bytes(env.session_id.size());
  std::copy(sid.begin(), sid.end(), env.session_id.begin());
  env.round = rd.get_u8();
  if (env.round < 1 || env.round > 3) throw ParseError("envelope round out of range");
  env.sender = rd.get_u32_be();
  const std::uint32_t len = rd.get_u32_be();
  const ByteSpan payload = rd.get_bytes(len);
  env.payload.assign(payload.begin(), payload.end());
  rd.expect_end();
  return env;
}

}  // namespace lsig
