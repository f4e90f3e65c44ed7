#include "lsig/harness/harness.hpp"

#include <algorithm>

#include "lsig/errors.hpp"
#include "lsig/id/codec.hpp"

namespace lsig::harness {

Policy Policy::drop(std::uint8_t round, std::uint32_t sender) {
  Policy p;
  p.kind = PolicyKind::Drop;
  p.round = round;
  p.sender = sender;
  return p;
}

Policy Policy::substitute(std::uint8_t round, std::uint32_t sender, SubstituteMode mode, Bytes literal) {
  Policy p;
  p.kind = PolicyKind::Substitute;
  p.round = round;
  p.sender = sender;
  p.mode = mode;
  p.literal = std::move(literal);
  return p;
}

Policy Policy::reorder() {
  Policy p;
  p.kind = PolicyKind::Reorder;
  return p;
}

std::string describe(const Policy& p) {
  const auto target = " round=" + std::to_string(p.round) + " sender=" + std::to_string(p.sender);
  switch (p.kind) {
    case PolicyKind::Pass:
      return "pass";
    case PolicyKind::Reorder:
      return "reorder";
    case PolicyKind::Drop:
      return "drop" + target;
    case PolicyKind::Substitute: {
      std::string mode = p.mode == SubstituteMode::Fresh         ? "fresh"
                         : p.mode == SubstituteMode::RandomBytes ? "random-bytes"
                                                                 : "hex:" + to_hex(p.literal);
      return "substitute" + target + " payload=" + mode;
    }
  }
  return "pass";
}

namespace {

Bytes fresh_payload(const Scheme& scheme, std::uint8_t round, Rng& rng) {
  switch (round) {
    case 1:
      return encode_challenge(scheme, sample_challenge(scheme, rng));
    case 2:
      return encode_commitment(scheme, commitment_of(scheme, commit(scheme, rng)));
    default:
      if (scheme.id() == SchemeId::Schnorr) {
        return encode_response(scheme, Response{scalar_uniform(scheme.group(), rng)});
      } else {
        const auto& r = scheme.rlwe().ring;
        return encode_response(scheme, Response{RlweResponse{sample_uniform_z(r, rng), sample_uniform_z(r, rng)}});
      }
  }
}

}  // namespace

Interceptor::Interceptor(Scheme scheme, Policy policy, std::uint64_t seed)
    : scheme_(std::move(scheme)), policy_(std::move(policy)), rng_(seed) {}

std::optional<Envelope> Interceptor::on_send(const Envelope& env) {
  ++observed_;
  const bool targeted = env.round == policy_.round && env.sender == policy_.sender;
  if (policy_.kind == PolicyKind::Drop && targeted) return std::nullopt;
  if (policy_.kind == PolicyKind::Substitute && targeted) {
    Envelope out = env;
    switch (policy_.mode) {
      case SubstituteMode::Fresh:
        out.payload = fresh_payload(scheme_, env.round, rng_);
        break;
      case SubstituteMode::RandomBytes:
        rng_.fill(out.payload);
        break;
      case SubstituteMode::Literal:
        out.payload = policy_.literal;
        break;
    }
    return out;
  }
  return env;
}

void Interceptor::on_deliver(std::vector<Envelope>& batch) {
  if (policy_.kind == PolicyKind::Reorder) std::shuffle(batch.begin(), batch.end(), rng_);
}

Bus::Bus(std::uint32_t parties, Interceptor interceptor)
    : interceptor_(std::move(interceptor)), inboxes_(parties) {}

void Bus::broadcast(const Envelope& env) {
  const auto out = interceptor_.on_send(env);
  if (!out) return;
  const auto wire = encode_envelope(*out);
  for (auto& inbox : inboxes_) inbox.push_back(wire);
}

std::vector<Envelope> Bus::drain(std::uint32_t recipient) {
  auto& inbox = inboxes_.at(recipient);
  std::vector<Envelope> batch;
  for (const auto& wire : inbox) batch.push_back(decode_envelope(wire));
  inbox.clear();
  interceptor_.on_deliver(batch);
  for (const auto& env : batch) {
    trace_.push_back("to=" + std::to_string(recipient) + " " + to_hex(encode_envelope(env)));
  }
  return batch;
}

}  // namespace lsig::harness
