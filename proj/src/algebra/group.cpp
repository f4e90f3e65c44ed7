#include "lsig/algebra/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "lsig/errors.hpp"

namespace lsig {

namespace {

bool is_probable_prime(const mpz_class& v) { return mpz_probab_prime_p(v.get_mpz_t(), 40) > 0; }

std::size_t byte_length(const mpz_class& v) { return (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8; }

}  // namespace

std::size_t GroupParams::element_bytes() const { return byte_length(p); }
std::size_t GroupParams::scalar_bytes() const { return byte_length(q); }

GroupParams GroupParams::create(mpz_class p, mpz_class q, mpz_class g, std::string name) {
  if (p < 3 || !is_probable_prime(p)) throw InvalidParams("group modulus p is not prime");
  if (q < 2 || !is_probable_prime(q)) throw InvalidParams("group order q is not prime");
  if (mpz_class((p - 1) % q) != 0) throw InvalidParams("q does not divide p - 1");
  if (g <= 1 || g >= p) throw InvalidParams("generator out of range");
  mpz_class check;
  mpz_powm(check.get_mpz_t(), g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  if (check != 1) throw InvalidParams("g^q != 1 mod p");
  return GroupParams{std::move(p), std::move(q), std::move(g), std::move(name)};
}

GroupParams GroupParams::tiny() { return create(23, 11, 2, "tiny"); }

ZqScalar scalar_from(const GroupParams& params, const mpz_class& v) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), params.q.get_mpz_t());
  return ZqScalar{r};
}

ZqScalar scalar_from(const GroupParams& params, long v) { return scalar_from(params, mpz_class(v)); }

ZqScalar scalar_add(const GroupParams& params, const ZqScalar& a, const ZqScalar& b) {
  return scalar_from(params, mpz_class(a.value + b.value));
}

ZqScalar scalar_sub(const GroupParams& params, const ZqScalar& a, const ZqScalar& b) {
  return scalar_from(params, mpz_class(a.value - b.value));
}

ZqScalar scalar_mul(const GroupParams& params, const ZqScalar& a, const ZqScalar& b) {
  return scalar_from(params, mpz_class(a.value * b.value));
}

ZqScalar scalar_inv(const GroupParams& params, const ZqScalar& a) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.value.get_mpz_t(), params.q.get_mpz_t()) == 0) {
    throw std::domain_error("scalar not invertible");
  }
  return ZqScalar{r};
}

ZqScalar scalar_uniform(const GroupParams& params, Rng& rng) {
  return ZqScalar{uniform_below(params.q, rng)};
}

GroupElement group_identity() { return GroupElement{1}; }

GroupElement group_generator(const GroupParams& params) { return GroupElement{params.g}; }

GroupElement group_exp(const GroupParams& params, const GroupElement& base, const ZqScalar& e) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.value.get_mpz_t(), e.value.get_mpz_t(), params.p.get_mpz_t());
  return GroupElement{r};
}

GroupElement group_multi_exp(const GroupParams& params, const std::vector<GroupElement>& bases,
                             const std::vector<ZqScalar>& exps) {
  if (bases.size() != exps.size()) throw std::invalid_argument("group_multi_exp: length mismatch");
  if (bases.empty()) return group_identity();
  if (bases.size() == 1) return group_exp(params, bases[0], exps[0]);
  constexpr unsigned kWindow = 4;
  constexpr unsigned kTable = 1u << kWindow;
  const mpz_srcptr p = params.p.get_mpz_t();

  std::vector<std::vector<mpz_class>> tables(bases.size());
  std::size_t bits = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    auto& t = tables[i];
    t.resize(kTable);
    t[0] = 1;
    t[1] = bases[i].value;
    for (unsigned k = 2; k < kTable; ++k) {
      mpz_mul(t[k].get_mpz_t(), t[k - 1].get_mpz_t(), t[1].get_mpz_t());
      mpz_mod(t[k].get_mpz_t(), t[k].get_mpz_t(), p);
    }
    bits = std::max(bits, mpz_sizeinbase(exps[i].value.get_mpz_t(), 2));
  }
  const std::size_t windows = (bits + kWindow - 1) / kWindow;
  mpz_class acc = 1;
  for (std::size_t w = windows; w-- > 0;) {
    for (unsigned k = 0; k < kWindow; ++k) {
      mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), acc.get_mpz_t());
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p);
    }
    for (std::size_t i = 0; i < bases.size(); ++i) {
      unsigned digit = 0;
      for (unsigned k = 0; k < kWindow; ++k) {
        digit |= static_cast<unsigned>(mpz_tstbit(exps[i].value.get_mpz_t(), w * kWindow + k)) << k;
      }
      if (digit == 0) continue;
      mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), tables[i][digit].get_mpz_t());
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p);
    }
  }
  return GroupElement{acc};
}

GroupElement group_mul(const GroupParams& params, const GroupElement& a, const GroupElement& b) {
  mpz_class r = a.value * b.value;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), params.p.get_mpz_t());
  return GroupElement{r};
}

GroupElement group_inv(const GroupParams& params, const GroupElement& a) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.value.get_mpz_t(), params.p.get_mpz_t()) == 0) {
    throw std::domain_error("group element not invertible");
  }
  return GroupElement{r};
}

bool in_subgroup(const GroupParams& params, const mpz_class& v) {
  if (v < 1 || v >= params.p) return false;
  mpz_class r;
  mpz_powm(r.get_mpz_t(), v.get_mpz_t(), params.q.get_mpz_t(), params.p.get_mpz_t());
  return r == 1;
}

mpz_class uniform_below(const mpz_class& bound, Rng& rng) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::size_t bits = mpz_sizeinbase(mpz_class(bound - 1).get_mpz_t(), 2);
  const std::size_t nbytes = (bits + 7) / 8;
  Bytes buf(nbytes);
  for (;;) {
    rng.fill(buf);
    if (bits % 8 != 0) buf[0] &= static_cast<std::uint8_t>((1u << (bits % 8)) - 1);
    mpz_class v = import_be(buf);
    if (v < bound) return v;
  }
}

Bytes export_be(const mpz_class& v, std::size_t width) {
  if (v < 0) throw std::invalid_argument("export_be: negative value");
  const std::size_t len = v == 0 ? 0 : byte_length(v);
  if (len > width) throw std::invalid_argument("export_be: value wider than field");
  Bytes out(width, 0);
  if (len > 0) {
    std::size_t written = 0;
    mpz_export(out.data() + (width - len), &written, 1, 1, 1, 0, v.get_mpz_t());
  }
  return out;
}

mpz_class import_be(ByteSpan bytes) {
  mpz_class v;
  if (!bytes.empty()) mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return v;
}

Bytes export_le(const mpz_class& v) {
  if (v < 0) throw std::invalid_argument("export_le: negative value");
  const std::size_t len = v == 0 ? 0 : byte_length(v);
  Bytes out(len, 0);
  if (len > 0) {
    std::size_t written = 0;
    mpz_export(out.data(), &written, -1, 1, -1, 0, v.get_mpz_t());
  }
  return out;
}

mpz_class import_le(ByteSpan bytes) {
  mpz_class v;
  if (!bytes.empty()) mpz_import(v.get_mpz_t(), bytes.size(), -1, 1, -1, 0, bytes.data());
  return v;
}

}  // namespace lsig
