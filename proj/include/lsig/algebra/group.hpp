#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "lsig/bytes.hpp"
#include "lsig/rng.hpp"

namespace lsig {

// Prime-order subgroup <g> of Z_p^*, with q | p - 1.
struct GroupParams {
  mpz_class p;
  mpz_class q;
  mpz_class g;
  std::string name;

  // Fixed big-endian widths used when serializing elements and scalars.
  std::size_t element_bytes() const;
  std::size_t scalar_bytes() const;

  // Checks primality of p and q, q | p - 1, g != 1 and g^q == 1 (mod p).
  // Throws InvalidParams.
  static GroupParams create(mpz_class p, mpz_class q, mpz_class g, std::string name = {});

  // p = 23, q = 11, g = 2.
  static GroupParams tiny();
};

// Exponent ring Z_q. Invariant: 0 <= value < q.
struct ZqScalar {
  mpz_class value;

  friend bool operator==(const ZqScalar& a, const ZqScalar& b) { return a.value == b.value; }
};

// Element of <g>. Invariant: value^q == 1 (mod p).
struct GroupElement {
  mpz_class value;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.value == b.value;
  }
};

ZqScalar scalar_from(const GroupParams& params, const mpz_class& v);
ZqScalar scalar_from(const GroupParams& params, long v);
ZqScalar scalar_add(const GroupParams& params, const ZqScalar& a, const ZqScalar& b);
ZqScalar scalar_sub(const GroupParams& params, const ZqScalar& a, const ZqScalar& b);
ZqScalar scalar_mul(const GroupParams& params, const ZqScalar& a, const ZqScalar& b);
// Throws std::domain_error on zero.
ZqScalar scalar_inv(const GroupParams& params, const ZqScalar& a);
ZqScalar scalar_uniform(const GroupParams& params, Rng& rng);

GroupElement group_identity();
GroupElement group_generator(const GroupParams& params);
GroupElement group_exp(const GroupParams& params, const GroupElement& base, const ZqScalar& e);
// prod bases[i]^exps[i], sharing the squarings (interleaved 4-bit windows).
GroupElement group_multi_exp(const GroupParams& params, const std::vector<GroupElement>& bases,
                             const std::vector<ZqScalar>& exps);
GroupElement group_mul(const GroupParams& params, const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupParams& params, const GroupElement& a);
bool in_subgroup(const GroupParams& params, const mpz_class& v);

// Uniform integer in [0, bound) by rejection on the bit length of bound.
mpz_class uniform_below(const mpz_class& bound, Rng& rng);

// Big-endian export into exactly `width` bytes; throws if it does not fit.
Bytes export_be(const mpz_class& v, std::size_t width);
mpz_class import_be(ByteSpan bytes);
Bytes export_le(const mpz_class& v);
mpz_class import_le(ByteSpan bytes);

}  // namespace lsig
