#include "lsig/forklab/extraction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lsig::forklab {

std::uint64_t oracle_domain(const Scheme& scheme) {
  if (scheme.id() == SchemeId::Schnorr) {
    const auto& q = scheme.group().q;
    if (!q.fits_ulong_p() || mpz_sizeinbase(q.get_mpz_t(), 2) > 63) {
      throw std::invalid_argument("group order too large for the forking lab");
    }
    return q.get_ui();
  }
  const auto& r = scheme.rlwe().ring;
  const auto base = static_cast<std::uint64_t>(2 * r.bound_c + 1);
  std::uint64_t d = 1;
  for (std::uint32_t i = 0; i < r.n / 2; ++i) {
    if (d > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::invalid_argument("challenge set too large for the forking lab");
    }
    d *= base;
  }
  return d;
}

Challenge challenge_from_oracle(const Scheme& scheme, std::uint64_t h) {
  if (h >= oracle_domain(scheme)) throw std::out_of_range("oracle value outside the domain");
  if (scheme.id() == SchemeId::Schnorr) return scalar_from(scheme.group(), mpz_class(std::to_string(h)));
  const auto& r = scheme.rlwe().ring;
  const auto base = static_cast<std::uint64_t>(2 * r.bound_c + 1);
  std::vector<std::int64_t> coeffs(r.n, 0);
  for (std::uint32_t i = 0; i < r.n / 2; ++i) {
    coeffs[i] = static_cast<std::int64_t>(h % base) - r.bound_c;
    h /= base;
  }
  return ring_from(r, coeffs);
}

RunOutput<CoopSide> CooperativeProver::operator()(const CoopInput& x, const OracleValues& h, const Coin& rho) const {
  if (h.size() < 2) throw std::invalid_argument("cooperative prover needs q >= 2");
  if (x.t < 1) throw std::invalid_argument("t must be >= 1");
  SeededRng r(rho);

  std::vector<SecretKey> sks{x.target.sk};
  std::vector<PublicKey> pks{x.target.pk};
  std::vector<Challenge> weights{challenge_from_oracle(scheme_, h[0])};
  for (std::uint32_t i = 1; i < x.t; ++i) {
    auto kp = keygen(scheme_, r);
    sks.push_back(kp.sk);
    pks.push_back(kp.pk);
    weights.push_back(sample_challenge(scheme_, r));
  }
  std::vector<CommitState> states;
  std::vector<Commitment> cmts;
  for (std::uint32_t i = 0; i < x.t; ++i) {
    states.push_back(commit(scheme_, r));
    cmts.push_back(commitment_of(scheme_, states.back()));
  }
  const Challenge c = challenge_from_oracle(scheme_, h[1]);

  std::vector<Response> rsps;
  for (std::uint32_t i = 0; i < x.t; ++i) {
    auto z = respond(scheme_, sks[i], states[i], c, r);
    if (!z) return {};
    rsps.push_back(std::move(*z));
  }
  CoopSide side{weights[0], c, aggregate_commitments(scheme_, weights, cmts),
                aggregate_responses(scheme_, weights, rsps)};
  const auto pk_bar = aggregate_keys(scheme_, weights, pks);
  if (!verify(scheme_, pk_bar, x.t, Transcript{side.cmt, side.c, side.z})) return {};
  return {1, 2, std::move(side)};
}

ZqScalar extract_schnorr_secret(const Scheme& scheme, const ForkSuccess<CoopSide>& fork) {
  const auto& g = scheme.group();
  auto sc = [](const Challenge& ch) { return std::get<ZqScalar>(ch); };
  auto rs = [](const Response& z) { return std::get<ZqScalar>(z); };
  const auto& s = fork.sides;
  const auto k0 = scalar_mul(g, scalar_sub(g, rs(s[0].z), rs(s[1].z)),
                             scalar_inv(g, scalar_sub(g, sc(s[0].c), sc(s[1].c))));
  const auto k1 = scalar_mul(g, scalar_sub(g, rs(s[2].z), rs(s[3].z)),
                             scalar_inv(g, scalar_sub(g, sc(s[2].c), sc(s[3].c))));
  return scalar_mul(g, scalar_sub(g, k0, k1),
                    scalar_inv(g, scalar_sub(g, sc(s[0].lambda1), sc(s[2].lambda1))));
}

RingSisSolution extract_ring_sis(const Scheme& scheme, const ForkSuccess<CoopSide>& fork) {
  const auto& r = scheme.rlwe().ring;
  auto ch = [&](int i) -> const RingElement& { return std::get<RingElement>(fork.sides[i].c); };
  auto lam = [&](int i) -> const RingElement& { return std::get<RingElement>(fork.sides[i].lambda1); };
  auto z = [&](int i) -> const RlweResponse& { return std::get<RlweResponse>(fork.sides[i].z); };

  const auto dc01 = ring_sub(r, ch(1), ch(0));
  const auto dc23 = ring_sub(r, ch(3), ch(2));
  RingSisSolution sol;
  sol.alpha1 = ring_sub(r, ring_mul(r, ring_sub(r, z(3).z1, z(2).z1), dc01),
                        ring_mul(r, ring_sub(r, z(1).z1, z(0).z1), dc23));
  sol.alpha2 = ring_sub(r, ring_mul(r, ring_sub(r, z(3).z2, z(2).z2), dc01),
                        ring_mul(r, ring_sub(r, z(1).z2, z(0).z2), dc23));
  sol.alpha3 = ring_mul(r, ring_mul(r, ring_sub(r, lam(0), lam(2)), dc01), dc23);
  return sol;
}

bool ring_sis_holds(const Scheme& scheme, const RingElement& u1, const RingSisSolution& sol) {
  const auto& p = scheme.rlwe();
  const auto& r = p.ring;
  if (sol.alpha3 == ring_zero(r)) return false;
  const auto lhs = ring_add(r, ring_add(r, ring_mul(r, p.a, sol.alpha1), sol.alpha2), ring_mul(r, u1, sol.alpha3));
  return lhs == ring_zero(r);
}

double ring_sis_length(const RingSisSolution& sol) {
  long double sum = 0;
  for (const auto* e : {&sol.alpha1, &sol.alpha2, &sol.alpha3}) {
    for (auto c : e->coeffs) sum += static_cast<long double>(c) * static_cast<long double>(c);
  }
  return static_cast<double>(std::sqrt(sum));
}

double ring_sis_bound(const RingParams& ring, std::uint32_t t) {
  const double ln = ring.log_n;
  return 16.0 * static_cast<double>(ring.eta(t)) * std::sqrt(static_cast<double>(ring.n)) * ln * ln;
}

namespace {

template <typename OnFork>
ExtractionReport run_extraction(const Scheme& scheme, std::uint32_t t, std::uint64_t attempts, Rng& rng,
                                OnFork&& on_fork) {
  const CooperativeProver prover(scheme);
  const auto N = oracle_domain(scheme);
  ExtractionReport rep;
  rep.attempts = attempts;
  for (std::uint64_t i = 0; i < attempts; ++i) {
    CoopInput x{keygen(scheme, rng), t};
    auto out = fork(prover, x, 2, N, rng);
    if (!out) continue;
    ++rep.forks;
    on_fork(x, *out, rep);
  }
  return rep;
}

}  // namespace

ExtractionReport run_schnorr_extraction(const Scheme& scheme, std::uint32_t t, std::uint64_t attempts, Rng& rng) {
  if (scheme.id() != SchemeId::Schnorr) throw SchemeMismatch("Schnorr extraction on a lattice scheme");
  return run_extraction(scheme, t, attempts, rng, [&](const CoopInput& x, const ForkSuccess<CoopSide>& f, ExtractionReport& rep) {
    if (extract_schnorr_secret(scheme, f) == std::get<ZqScalar>(x.target.sk)) {
      ++rep.extracted;
    } else {
      ++rep.wrong;
    }
  });
}

ExtractionReport run_rlwe_extraction(const Scheme& scheme, std::uint32_t t, std::uint64_t attempts, Rng& rng) {
  if (scheme.id() != SchemeId::Rlwe) throw SchemeMismatch("ring-SIS extraction on a Schnorr scheme");
  const double bound = ring_sis_bound(scheme.rlwe().ring, t);
  auto rep = run_extraction(scheme, t, attempts, rng, [&](const CoopInput& x, const ForkSuccess<CoopSide>& f, ExtractionReport& rep) {
    const auto sol = extract_ring_sis(scheme, f);
    const double len = ring_sis_length(sol);
    if (len > rep.max_length) rep.max_length = len;
    if (ring_sis_holds(scheme, std::get<RingElement>(x.target.pk), sol) && len <= bound) {
      ++rep.extracted;
    } else {
      ++rep.wrong;
    }
  });
  rep.bound = bound;
  return rep;
}

}  // namespace lsig::forklab
