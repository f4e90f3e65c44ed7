#include <algorithm>
#include <sstream>

#include "lsig/errors.hpp"
#include "lsig/harness/harness.hpp"
#include "lsig/id/codec.hpp"
#include "lsig/id/params_file.hpp"

namespace lsig::harness {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const auto x = std::stoull(v, &pos, 0);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParseError("scenario: bad integer for " + key + ": " + v);
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario sc;
  std::string policy = "pass";
  std::string payload = "fresh";
  std::uint64_t round = 0, sender = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("scenario: expected key=value: " + line);
    const auto key = trim(line.substr(0, eq));
    const auto val = trim(line.substr(eq + 1));
    if (key == "scheme") {
      sc.scheme = val;
    } else if (key == "params") {
      sc.params = val;
    } else if (key == "t") {
      sc.t = static_cast<std::uint32_t>(parse_uint(key, val));
    } else if (key == "message") {
      sc.message = val;
    } else if (key == "policy") {
      policy = val;
    } else if (key == "round") {
      round = parse_uint(key, val);
    } else if (key == "sender") {
      sender = parse_uint(key, val);
    } else if (key == "payload") {
      payload = val;
    } else if (key == "seed") {
      sc.seed = parse_uint(key, val);
    } else {
      throw ParseError("scenario: unknown key " + key);
    }
  }
  if (sc.scheme != "schnorr" && sc.scheme != "rlwe") throw ParseError("scenario: unknown scheme " + sc.scheme);
  if (sc.t < 1) throw ParseError("scenario: t must be >= 1");
  if ((policy == "drop" || policy == "substitute") && (round < 1 || round > 3)) {
    throw ParseError("scenario: round must be 1, 2 or 3");
  }
  const auto r8 = static_cast<std::uint8_t>(round);
  const auto s32 = static_cast<std::uint32_t>(sender);
  if (policy == "pass") {
    sc.policy = Policy::pass();
  } else if (policy == "reorder") {
    sc.policy = Policy::reorder();
  } else if (policy == "drop") {
    sc.policy = Policy::drop(r8, s32);
  } else if (policy == "substitute") {
    if (payload == "fresh") {
      sc.policy = Policy::substitute(r8, s32, SubstituteMode::Fresh);
    } else if (payload == "random-bytes") {
      sc.policy = Policy::substitute(r8, s32, SubstituteMode::RandomBytes);
    } else if (payload.rfind("hex:", 0) == 0) {
      Bytes lit;
      try {
        lit = from_hex(payload.substr(4));
      } catch (const std::exception&) {
        throw ParseError("scenario: bad hex payload");
      }
      sc.policy = Policy::substitute(r8, s32, SubstituteMode::Literal, std::move(lit));
    } else {
      throw ParseError("scenario: unknown payload " + payload);
    }
  } else {
    throw ParseError("scenario: unknown policy " + policy);
  }
  return sc;
}

Scheme scenario_scheme(const Scenario& sc) {
  const auto id = scheme_from_name(sc.scheme);
  if (sc.params.empty()) return default_scheme(id);
  if (sc.params == "tiny") return tiny_schnorr();
  auto s = load_params_file(sc.params);
  if (s.id() != id) throw SchemeMismatch("params file is for " + scheme_name(s.id()));
  return s;
}

RunReport run_scenario(const Scenario& sc) {
  return run_adversarial(scenario_scheme(sc), sc.t, Bytes(sc.message.begin(), sc.message.end()), sc.policy,
                         sc.seed);
}

RogueKeyReport rogue_key_demo(const GroupParams& group, std::uint32_t honest_count, std::uint64_t seed,
                              std::uint64_t attempts) {
  if (honest_count < 1) throw std::invalid_argument("honest_count must be >= 1");
  const auto scheme = Scheme::schnorr(group);
  const std::string text = "pay the adversary";
  const Bytes msg(text.begin(), text.end());
  SeededRng rng(seed);
  const auto g = group_generator(group);

  auto rogue = [&](const std::vector<KeyPair>& honest, const ZqScalar& s) {
    GroupElement prod = group_identity();
    for (const auto& kp : honest) prod = group_mul(group, prod, std::get<GroupElement>(kp.pk));
    return group_mul(group, group_exp(group, g, s), group_inv(group, prod));
  };
  // Schnorr proof under the key the adversary believes it controls: g^s.
  auto sign_alone = [&](const PublicKey& key, const ZqScalar& s) {
    const auto r = scalar_uniform(group, rng);
    const auto R = group_exp(group, g, r);
    const auto c = std::get<ZqScalar>(signing_challenge(scheme, key, Commitment{R}, msg));
    return MultiSignature{Commitment{R}, Response{scalar_add(group, r, scalar_mul(group, c, s))}};
  };

  RogueKeyReport rep;
  {
    const auto honest = distinct_keys(scheme, honest_count, rng);
    const auto s = scalar_uniform(group, rng);
    const auto pk_adv = rogue(honest, s);
    GroupElement naive = pk_adv;
    for (const auto& kp : honest) naive = group_mul(group, naive, std::get<GroupElement>(kp.pk));
    const auto sig = sign_alone(PublicKey{naive}, s);
    const auto& R = std::get<GroupElement>(sig.cmt_bar);
    const auto c = std::get<ZqScalar>(signing_challenge(scheme, PublicKey{naive}, sig.cmt_bar, msg));
    rep.naive_forged = schnorr_verify(group, naive, honest_count + 1, R, c, std::get<ZqScalar>(sig.rsp_bar));
  }

  for (std::uint64_t i = 0; i < attempts; ++i) {
    const auto honest = distinct_keys(scheme, honest_count, rng);
    const auto s = scalar_uniform(group, rng);
    std::vector<PublicKey> pks;
    for (const auto& kp : honest) pks.push_back(kp.pk);
    pks.push_back(PublicKey{rogue(honest, s)});
    ++rep.compiled_attempts;
    std::optional<SignerSet> set;
    try {
      set = SignerSet::create(scheme, pks);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto agg = key_aggregate(scheme, *set);
    if (verify(scheme, agg, msg, sign_alone(agg.pk_bar, s))) ++rep.compiled_successes;
  }
  rep.compiled_forged = rep.compiled_successes > 0;
  return rep;
}

namespace {

class HonestKnowsAll final : public IdAdversary {
 public:
  explicit HonestKnowsAll(Scheme scheme) : scheme_(std::move(scheme)) {}
  bool wants_target_secret() const override { return true; }
  void receive_target(const PublicKey&, const SecretKey* sk1) override {
    if (!sk1) throw std::logic_error("honest-knows-all needs the target secret");
    sks_ = {*sk1};
  }
  std::vector<PublicKey> choose_keys(std::uint32_t t, Rng& rng) override {
    std::vector<PublicKey> out;
    for (std::uint32_t i = 1; i < t; ++i) {
      auto kp = keygen(scheme_, rng);
      sks_.push_back(kp.sk);
      out.push_back(kp.pk);
    }
    return out;
  }
  Commitment commit(const std::vector<Challenge>& lambdas, Rng& rng) override {
    lambdas_ = lambdas;
    states_.clear();
    std::vector<Commitment> cmts;
    for (std::size_t i = 0; i < sks_.size(); ++i) {
      states_.push_back(lsig::commit(scheme_, rng));
      cmts.push_back(commitment_of(scheme_, states_.back()));
    }
    return aggregate_commitments(scheme_, lambdas_, cmts);
  }
  std::optional<Response> respond(const Challenge& ch, Rng& rng) override {
    std::vector<Response> rsps;
    for (std::size_t i = 0; i < sks_.size(); ++i) {
      auto z = lsig::respond(scheme_, sks_[i], states_[i], ch, rng);
      if (!z) return std::nullopt;
      rsps.push_back(std::move(*z));
    }
    return aggregate_responses(scheme_, lambdas_, rsps);
  }

 private:
  Scheme scheme_;
  std::vector<SecretKey> sks_;
  std::vector<CommitState> states_;
  std::vector<Challenge> lambdas_;
};

class RandomResponse final : public IdAdversary {
 public:
  explicit RandomResponse(Scheme scheme) : scheme_(std::move(scheme)) {}
  void receive_target(const PublicKey&, const SecretKey*) override {}
  std::vector<PublicKey> choose_keys(std::uint32_t t, Rng& rng) override {
    t_ = t;
    std::vector<PublicKey> out;
    for (std::uint32_t i = 1; i < t; ++i) out.push_back(keygen(scheme_, rng).pk);
    return out;
  }
  Commitment commit(const std::vector<Challenge>&, Rng& rng) override {
    return commitment_of(scheme_, lsig::commit(scheme_, rng));
  }
  std::optional<Response> respond(const Challenge&, Rng& rng) override {
    if (scheme_.id() == SchemeId::Schnorr) return Response{scalar_uniform(scheme_.group(), rng)};
    const auto& r = scheme_.rlwe().ring;
    const auto eta = r.eta(t_);
    auto draw = [&] {
      RingElement e = ring_zero(r);
      for (auto& c : e.coeffs) c = rng.uniform_int(-eta, eta);
      return e;
    };
    RlweResponse z;
    z.z1 = draw();
    z.z2 = draw();
    return Response{std::move(z)};
  }

 private:
  Scheme scheme_;
  std::uint32_t t_ = 1;
};

}  // namespace

std::unique_ptr<IdAdversary> make_id_adversary(const Scheme& scheme, const std::string& name) {
  if (name == "honest-knows-all") return std::make_unique<HonestKnowsAll>(scheme);
  if (name == "random-response") return std::make_unique<RandomResponse>(scheme);
  throw std::invalid_argument("unknown strategy: " + name);
}

bool run_id_experiment(const Scheme& scheme, std::uint32_t t, IdAdversary& adversary, std::uint64_t seed) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  SeededRng rng(seed);
  SeededRng coins(rng.next());
  const auto kp1 = keygen(scheme, rng);
  adversary.receive_target(kp1.pk, adversary.wants_target_secret() ? &kp1.sk : nullptr);
  auto pks = adversary.choose_keys(t, coins);
  if (pks.size() + 1 != t) return false;
  pks.insert(pks.begin(), kp1.pk);
  std::vector<Challenge> lambdas;
  for (std::uint32_t i = 0; i < t; ++i) lambdas.push_back(sample_challenge(scheme, rng));
  const auto cmt = adversary.commit(lambdas, coins);
  const auto ch = sample_challenge(scheme, rng);
  const auto rsp = adversary.respond(ch, coins);
  if (!rsp) return false;
  try {
    const auto pk_bar = aggregate_keys(scheme, lambdas, pks);
    return verify(scheme, pk_bar, t, Transcript{cmt, ch, *rsp});
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool run_id_experiment(const Scheme& scheme, std::uint32_t t, const std::string& strategy, std::uint64_t seed) {
  auto adv = make_id_adversary(scheme, strategy);
  return run_id_experiment(scheme, t, *adv, seed);
}

}  // namespace lsig::harness
