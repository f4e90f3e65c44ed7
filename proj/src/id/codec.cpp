#include "lsig/id/codec.hpp"

#include <bit>
#include <string>

#include "lsig/errors.hpp"

namespace lsig {

namespace {

constexpr std::uint8_t kParamsVersion = 1;
constexpr std::uint32_t kMaxRingDegree = 1u << 12;
constexpr std::uint32_t kMaxSlots = 1u << 12;

void put_ring(ByteWriter& w, const RingElement& e) {
  for (auto c : e.coeffs) w.put_i64_le(c);
}

RingElement get_ring(const RingParams& r, ByteReader& rd) {
  RingElement e{std::vector<std::int64_t>(r.n)};
  for (auto& c : e.coeffs) c = rd.get_i64_le();
  if (!is_canonical(r, e)) throw ParseError("ring coefficient outside canonical range");
  return e;
}

GroupElement get_element(const GroupParams& g, ByteReader& rd) {
  mpz_class v = import_be(rd.get_bytes(g.element_bytes()));
  if (!in_subgroup(g, v)) throw ParseError("group element not in the prime-order subgroup");
  return GroupElement{v};
}

ZqScalar get_scalar(const GroupParams& g, ByteReader& rd) {
  mpz_class v = import_be(rd.get_bytes(g.scalar_bytes()));
  if (v >= g.q) throw ParseError("scalar not reduced mod q");
  return ZqScalar{v};
}

template <typename Fn>
auto parse_all(ByteSpan in, Fn&& fn) {
  ByteReader rd(in);
  auto out = fn(rd);
  rd.expect_end();
  return out;
}

}  // namespace

Bytes encode_public_key(const Scheme& scheme, const PublicKey& pk) {
  require_scheme(scheme, pk);
  if (scheme.id() == SchemeId::Schnorr) {
    return export_be(std::get<GroupElement>(pk).value, scheme.group().element_bytes());
  }
  ByteWriter w;
  put_ring(w, std::get<RingElement>(pk));
  return std::move(w).take();
}

PublicKey decode_public_key(const Scheme& scheme, ByteSpan in) {
  return parse_all(in, [&](ByteReader& rd) -> PublicKey {
    if (scheme.id() == SchemeId::Schnorr) return get_element(scheme.group(), rd);
    return get_ring(scheme.rlwe().ring, rd);
  });
}

Bytes encode_secret_key(const Scheme& scheme, const SecretKey& sk) {
  require_scheme(scheme, sk);
  if (scheme.id() == SchemeId::Schnorr) {
    return export_be(std::get<ZqScalar>(sk).value, scheme.group().scalar_bytes());
  }
  ByteWriter w;
  put_ring(w, std::get<RlweSecret>(sk).s1);
  put_ring(w, std::get<RlweSecret>(sk).s2);
  return std::move(w).take();
}

SecretKey decode_secret_key(const Scheme& scheme, ByteSpan in) {
  return parse_all(in, [&](ByteReader& rd) -> SecretKey {
    if (scheme.id() == SchemeId::Schnorr) return get_scalar(scheme.group(), rd);
    const RingParams& r = scheme.rlwe().ring;
    RingElement s1 = get_ring(r, rd);
    RingElement s2 = get_ring(r, rd);
    return RlweSecret{std::move(s1), std::move(s2)};
  });
}

Bytes encode_commitment(const Scheme& scheme, const Commitment& cmt) {
  require_scheme(scheme, cmt);
  if (scheme.id() == SchemeId::Schnorr) {
    return export_be(std::get<GroupElement>(cmt).value, scheme.group().element_bytes());
  }
  const auto& v = std::get<RingVector>(cmt);
  if (v.elems.size() != scheme.rlwe().ring.mu) throw std::invalid_argument("commitment has wrong slot count");
  ByteWriter w;
  for (const auto& e : v.elems) put_ring(w, e);
  return std::move(w).take();
}

Commitment decode_commitment(const Scheme& scheme, ByteSpan in) {
  return parse_all(in, [&](ByteReader& rd) -> Commitment {
    if (scheme.id() == SchemeId::Schnorr) return get_element(scheme.group(), rd);
    const RingParams& r = scheme.rlwe().ring;
    RingVector v;
    for (std::uint32_t j = 0; j < r.mu; ++j) v.elems.push_back(get_ring(r, rd));
    return v;
  });
}

Bytes encode_response(const Scheme& scheme, const Response& rsp) {
  require_scheme(scheme, rsp);
  if (scheme.id() == SchemeId::Schnorr) {
    return export_be(std::get<ZqScalar>(rsp).value, scheme.group().scalar_bytes());
  }
  ByteWriter w;
  put_ring(w, std::get<RlweResponse>(rsp).z1);
  put_ring(w, std::get<RlweResponse>(rsp).z2);
  return std::move(w).take();
}

Response decode_response(const Scheme& scheme, ByteSpan in) {
  return parse_all(in, [&](ByteReader& rd) -> Response {
    if (scheme.id() == SchemeId::Schnorr) return get_scalar(scheme.group(), rd);
    const RingParams& r = scheme.rlwe().ring;
    RingElement z1 = get_ring(r, rd);
    RingElement z2 = get_ring(r, rd);
    return RlweResponse{std::move(z1), std::move(z2)};
  });
}

Bytes encode_challenge(const Scheme& scheme, const Challenge& ch) {
  require_scheme(scheme, ch);
  if (scheme.id() == SchemeId::Schnorr) {
    return export_be(std::get<ZqScalar>(ch).value, scheme.group().scalar_bytes());
  }
  ByteWriter w;
  put_ring(w, std::get<RingElement>(ch));
  return std::move(w).take();
}

Challenge decode_challenge(const Scheme& scheme, ByteSpan in) {
  return parse_all(in, [&](ByteReader& rd) -> Challenge {
    if (scheme.id() == SchemeId::Schnorr) return get_scalar(scheme.group(), rd);
    RingElement c = get_ring(scheme.rlwe().ring, rd);
    if (!in_challenge_set(scheme.rlwe().ring, c)) throw ParseError("challenge outside C");
    return c;
  });
}

std::size_t public_key_bytes(const Scheme& scheme) {
  if (scheme.id() == SchemeId::Schnorr) return scheme.group().element_bytes();
  return 8 * scheme.rlwe().ring.n;
}

std::size_t commitment_bytes(const Scheme& scheme) {
  if (scheme.id() == SchemeId::Schnorr) return scheme.group().element_bytes();
  return 8 * scheme.rlwe().ring.n * scheme.rlwe().ring.mu;
}

std::size_t response_bytes(const Scheme& scheme) {
  if (scheme.id() == SchemeId::Schnorr) return scheme.group().scalar_bytes();
  return 16 * scheme.rlwe().ring.n;
}

std::size_t challenge_bytes(const Scheme& scheme) {
  if (scheme.id() == SchemeId::Schnorr) return scheme.group().scalar_bytes();
  return 8 * scheme.rlwe().ring.n;
}

Bytes encode_params(const Scheme& scheme) {
  ByteWriter w;
  w.put_u8(kParamsVersion);
  if (scheme.id() == SchemeId::Schnorr) {
    const GroupParams& g = scheme.group();
    w.put_framed(export_le(g.p));
    w.put_framed(export_le(g.q));
    w.put_framed(export_le(g.g));
  } else {
    const RlweParams& p = scheme.rlwe();
    w.put_u32_le(p.ring.n);
    w.put_u64_le(p.ring.q);
    w.put_u64_le(std::bit_cast<std::uint64_t>(p.ring.sigma));
    w.put_u32_le(p.ring.mu);
    put_ring(w, p.a);
  }
  return std::move(w).take();
}

Scheme decode_params(SchemeId id, ByteSpan in) {
  ByteReader rd(in);
  const std::uint8_t version = rd.get_u8();
  if (version != kParamsVersion) {
    throw ParseError("unsupported params version " + std::to_string(version));
  }
  try {
    if (id == SchemeId::Schnorr) {
      mpz_class p = import_le(rd.get_framed());
      mpz_class q = import_le(rd.get_framed());
      mpz_class g = import_le(rd.get_framed());
      rd.expect_end();
      return Scheme::schnorr(GroupParams::create(p, q, g));
    }
    const std::uint32_t n = rd.get_u32_le();
    const std::uint64_t q = rd.get_u64_le();
    const double sigma = std::bit_cast<double>(rd.get_u64_le());
    const std::uint32_t mu = rd.get_u32_le();
    if (n > kMaxRingDegree || mu > kMaxSlots) throw ParseError("ring dimensions too large");
    RingParams ring = RingParams::create(n, q, sigma, mu);
    RingElement a = get_ring(ring, rd);
    rd.expect_end();
    return Scheme::rlwe(rlwe_params_from(std::move(ring), std::move(a)));
  } catch (const InvalidParams& e) {
    throw ParseError(std::string("invalid parameters: ") + e.what());
  }
}

}  // namespace lsig
