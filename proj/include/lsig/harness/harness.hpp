#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lsig/bytes.hpp"
#include "lsig/multisig/multisig.hpp"
#include "lsig/rng.hpp"

namespace lsig::harness {

enum class PolicyKind { Pass, Drop, Substitute, Reorder };

// What a SUBSTITUTE writes in place of the original payload.
//   Fresh        a well-formed random value of the round's type
//   RandomBytes  uniformly random bytes of the original length
//   Literal      the given bytes
enum class SubstituteMode { Fresh, RandomBytes, Literal };

struct Policy {
  PolicyKind kind = PolicyKind::Pass;
  std::uint8_t round = 0;   // DROP / SUBSTITUTE target
  std::uint32_t sender = 0;
  SubstituteMode mode = SubstituteMode::Fresh;
  Bytes literal;

  static Policy pass() { return {}; }
  static Policy drop(std::uint8_t round, std::uint32_t sender);
  static Policy substitute(std::uint8_t round, std::uint32_t sender, SubstituteMode mode = SubstituteMode::Fresh,
                           Bytes literal = {});
  static Policy reorder();
};

std::string describe(const Policy& p);

// Sees every broadcast exactly once and decides what reaches the inboxes.
class Interceptor {
 public:
  Interceptor(Scheme scheme, Policy policy, std::uint64_t seed);

  // nullopt drops the message.
  std::optional<Envelope> on_send(const Envelope& env);
  // Permutes one recipient's pending deliveries (REORDER only).
  void on_deliver(std::vector<Envelope>& batch);

  const Policy& policy() const { return policy_; }
  std::uint64_t observed() const { return observed_; }

 private:
  Scheme scheme_;
  Policy policy_;
  SeededRng rng_;
  std::uint64_t observed_ = 0;
};

// Broadcast bus with one inbox per party. Each send is encoded to wire bytes,
// passed through the interceptor, and the surviving bytes are decoded into
// every inbox (the sender's included).
class Bus {
 public:
  Bus(std::uint32_t parties, Interceptor interceptor);

  void broadcast(const Envelope& env);
  std::vector<Envelope> drain(std::uint32_t recipient);

  // "to=<recipient> <hex envelope>" for every delivery, in delivery order.
  const std::vector<std::string>& trace() const { return trace_; }
  const Interceptor& interceptor() const { return interceptor_; }

 private:
  Interceptor interceptor_;
  std::vector<std::vector<Bytes>> inboxes_;
  std::vector<std::string> trace_;
};

struct SignerOutcome {
  std::uint32_t index = 0;
  Phase phase = Phase::Init;
  std::string reason;
  std::optional<MultiSignature> signature;
};

struct RunReport {
  SchemeId scheme = SchemeId::Schnorr;
  std::uint32_t t = 0;
  std::string policy;
  AggregatedKey key;
  std::optional<MultiSignature> signature;  // set when every signer reached DONE with equal outputs
  bool outputs_agree = false;
  bool verified = false;
  std::vector<SignerOutcome> signers;
  std::vector<std::string> trace;
  std::uint64_t observed = 0;
};

// t distinct honest key pairs drawn from rng.
std::vector<KeyPair> distinct_keys(const Scheme& scheme, std::uint32_t t, Rng& rng);

// Drives t sessions round-synchronously over a bus. Keys and all signer
// randomness derive from seed.
RunReport run_adversarial(const Scheme& scheme, std::uint32_t t, const Bytes& message, const Policy& policy,
                          std::uint64_t seed);
RunReport run_honest(const Scheme& scheme, std::uint32_t t, const Bytes& message, std::uint64_t seed);
// Same, with caller-supplied keys.
RunReport run_with_keys(const Scheme& scheme, const std::vector<KeyPair>& keys, const Bytes& message,
                        const Policy& policy, std::uint64_t seed);

// key=value lines; trace lines are included when asked.
std::string format_report(const RunReport& r, bool with_trace = false);

struct Scenario {
  std::string scheme = "schnorr";
  std::string params;  // file path; empty selects the default for the scheme
  std::uint32_t t = 2;
  std::string message = "scenario";
  Policy policy;
  std::uint64_t seed = 1;
};

// Plain text: one key=value per line, '#' comments. Keys: scheme, params, t,
// message, policy (pass|drop|substitute|reorder), round, sender, payload
// (fresh|random-bytes|hex:<digits>), seed. Throws ParseError.
Scenario parse_scenario(const std::string& text);
RunReport run_scenario(const Scenario& sc);
Scheme scenario_scheme(const Scenario& sc);

struct RogueKeyReport {
  bool naive_forged = false;
  bool compiled_forged = false;
  std::uint64_t compiled_attempts = 0;
  std::uint64_t compiled_successes = 0;
};

// Naive aggregation prod pk_i against the weighted compiler. In both cases the
// adversary picks pk_adv = g^s (prod honest pk)^-1 and signs alone with s.
RogueKeyReport rogue_key_demo(const GroupParams& group, std::uint32_t honest_count, std::uint64_t seed,
                              std::uint64_t attempts = 1000);

// Impersonation experiment adversary. Calls arrive in the experiment's order.
class IdAdversary {
 public:
  virtual ~IdAdversary() = default;
  // Only strategies that cheat get the target secret.
  virtual bool wants_target_secret() const { return false; }
  virtual void receive_target(const PublicKey& pk1, const SecretKey* sk1) = 0;
  virtual std::vector<PublicKey> choose_keys(std::uint32_t t, Rng& rng) = 0;
  virtual Commitment commit(const std::vector<Challenge>& lambdas, Rng& rng) = 0;
  virtual std::optional<Response> respond(const Challenge& ch, Rng& rng) = 0;
};

// "honest-knows-all" or "random-response".
std::unique_ptr<IdAdversary> make_id_adversary(const Scheme& scheme, const std::string& name);

// One run of the impersonation experiment; returns the verifier's bit.
bool run_id_experiment(const Scheme& scheme, std::uint32_t t, IdAdversary& adversary, std::uint64_t seed);
bool run_id_experiment(const Scheme& scheme, std::uint32_t t, const std::string& strategy, std::uint64_t seed);

}  // namespace lsig::harness
