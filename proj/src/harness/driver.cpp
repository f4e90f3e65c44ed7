#include <set>
#include <sstream>

#include "lsig/errors.hpp"
#include "lsig/harness/harness.hpp"
#include "lsig/id/codec.hpp"

namespace lsig::harness {

std::vector<KeyPair> distinct_keys(const Scheme& scheme, std::uint32_t t, Rng& rng) {
  std::vector<KeyPair> out;
  std::set<Bytes> seen;
  std::uint64_t tries = 0;
  while (out.size() < t) {
    if (++tries > 100ULL * t + 100) throw std::invalid_argument("cannot draw enough distinct keys");
    auto kp = keygen(scheme, rng);
    if (seen.insert(encode_public_key(scheme, kp.pk)).second) out.push_back(std::move(kp));
  }
  return out;
}

namespace {

struct Party {
  SignSession session;
  SeededRng rng;
};

template <typename Value, typename Decode>
std::optional<std::map<std::uint32_t, Value>> collect(Party& p, const std::vector<Envelope>& batch,
                                                      std::uint8_t round, const Envelope& header,
                                                      Decode&& decode) {
  std::map<std::uint32_t, Value> values;
  for (const auto& env : batch) {
    if (env.round != round || env.session_id != header.session_id || env.scheme != header.scheme) continue;
    try {
      values.insert_or_assign(env.sender, decode(env.payload));
    } catch (const std::exception&) {
      p.session.abort("malformed round-" + std::to_string(round) + " message from signer " +
                      std::to_string(env.sender));
      return std::nullopt;
    }
  }
  if (values.size() < p.session.signers().size()) {
    p.session.abort("stalled: missing round-" + std::to_string(round) + " messages");
    return std::nullopt;
  }
  return values;
}

bool live(const Party& p) { return p.session.phase() != Phase::Aborted; }

}  // namespace

RunReport run_with_keys(const Scheme& scheme, const std::vector<KeyPair>& keys, const Bytes& message,
                        const Policy& policy, std::uint64_t seed) {
  if (keys.empty()) throw std::invalid_argument("t must be >= 1");
  SeededRng master(seed);
  Envelope header;
  header.scheme = scheme.id();
  master.fill(header.session_id);

  std::vector<PublicKey> pks;
  for (const auto& kp : keys) pks.push_back(kp.pk);
  const auto set = SignerSet::create(scheme, pks);
  const auto t = set.size();

  Bus bus(t, Interceptor(scheme, policy, master.next()));
  std::vector<Party> parties;
  for (const auto& kp : keys) parties.push_back(Party{SignSession(scheme, kp.sk, kp.pk, set, message), SeededRng(master.next())});
  // Parties are addressed by their position in the signer set.
  std::sort(parties.begin(), parties.end(),
            [](const Party& a, const Party& b) { return a.session.my_index() < b.session.my_index(); });

  auto send = [&](const Party& p, std::uint8_t round, Bytes payload) {
    Envelope env = header;
    env.round = round;
    env.sender = p.session.my_index();
    env.payload = std::move(payload);
    bus.broadcast(env);
  };

  // Round-synchronous: every inbox is emptied before anyone processes.
  auto drain_all = [&] {
    std::vector<std::vector<Envelope>> batches;
    for (std::uint32_t i = 0; i < t; ++i) batches.push_back(bus.drain(i));
    return batches;
  };

  for (auto& p : parties) send(p, 1, encode_challenge(scheme, p.session.round1(p.rng)));

  auto batches = drain_all();
  for (std::uint32_t i = 0; i < t; ++i) {
    auto& p = parties[i];
    const auto& batch = batches[i];
    if (!live(p)) continue;
    auto digests = collect<Challenge>(p, batch, 1, header, [&](const Bytes& b) { return decode_challenge(scheme, b); });
    if (!digests) continue;
    if (auto cmt = p.session.round2(*digests)) send(p, 2, encode_commitment(scheme, *cmt));
  }

  batches = drain_all();
  for (std::uint32_t i = 0; i < t; ++i) {
    auto& p = parties[i];
    const auto& batch = batches[i];
    if (!live(p)) continue;
    auto cmts = collect<Commitment>(p, batch, 2, header, [&](const Bytes& b) { return decode_commitment(scheme, b); });
    if (!cmts) continue;
    if (auto rsp = p.session.round3(*cmts, p.rng)) send(p, 3, encode_response(scheme, *rsp));
  }

  RunReport rep;
  rep.scheme = scheme.id();
  rep.t = t;
  rep.policy = describe(policy);
  rep.key = key_aggregate(scheme, set);
  batches = drain_all();
  for (std::uint32_t i = 0; i < t; ++i) {
    auto& p = parties[i];
    const auto& batch = batches[i];
    SignerOutcome out;
    out.index = i;
    if (live(p)) {
      auto rsps = collect<Response>(p, batch, 3, header, [&](const Bytes& b) { return decode_response(scheme, b); });
      if (rsps) out.signature = p.session.finish(*rsps);
    }
    out.phase = p.session.phase();
    out.reason = p.session.abort_reason();
    rep.signers.push_back(std::move(out));
  }

  rep.outputs_agree = true;
  for (const auto& s : rep.signers) {
    if (!s.signature || !(*s.signature == *rep.signers.front().signature)) rep.outputs_agree = false;
  }
  if (rep.outputs_agree) {
    rep.signature = rep.signers.front().signature;
    rep.verified = verify(scheme, rep.key, message, *rep.signature);
  }
  rep.trace = bus.trace();
  rep.observed = bus.interceptor().observed();
  return rep;
}

RunReport run_adversarial(const Scheme& scheme, std::uint32_t t, const Bytes& message, const Policy& policy,
                          std::uint64_t seed) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  SeededRng master(seed);
  const auto keys = distinct_keys(scheme, t, master);
  return run_with_keys(scheme, keys, message, policy, master.next());
}

RunReport run_honest(const Scheme& scheme, std::uint32_t t, const Bytes& message, std::uint64_t seed) {
  return run_adversarial(scheme, t, message, Policy::pass(), seed);
}

std::string format_report(const RunReport& r, bool with_trace) {
  std::ostringstream os;
  os << "scheme=" << scheme_name(r.scheme) << '\n';
  os << "t=" << r.t << '\n';
  os << "policy=" << r.policy << '\n';
  os << "signature_produced=" << (r.signature ? 1 : 0) << '\n';
  os << "outputs_agree=" << (r.outputs_agree ? 1 : 0) << '\n';
  os << "verified=" << (r.verified ? 1 : 0) << '\n';
  os << "messages_observed=" << r.observed << '\n';
  for (const auto& s : r.signers) {
    os << "signer." << s.index << ".phase=" << phase_name(s.phase) << '\n';
    if (!s.reason.empty()) os << "signer." << s.index << ".reason=" << s.reason << '\n';
  }
  if (with_trace) {
    for (std::size_t i = 0; i < r.trace.size(); ++i) os << "trace." << i << '=' << r.trace[i] << '\n';
  }
  return os.str();
}

}  // namespace lsig::harness
