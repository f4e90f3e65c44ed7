#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lsig/algebra/gaussian.hpp"
#include "lsig/rng.hpp"

namespace lsig {

// Parameters of R_q = Z_q[x]/(x^n + 1) and the small-norm sets C, Y, Z.
// Every bound uses log2 n (an integer, n being a power of two) and is floored
// once here, so verification is a pure integer comparison.
struct RingParams {
  std::uint32_t n = 0;
  std::uint64_t q = 0;
  double sigma = 0;
  std::uint32_t mu = 0;

  std::uint32_t log_n = 0;
  std::int64_t bound_c = 0;  // log n
  std::int64_t bound_y = 0;  // floor(n^1.5 sigma log^3 n)
  std::int64_t bound_z = 0;  // floor((n-1) n^0.5 sigma log^3 n)
  std::int64_t eta1 = 0;     // floor(3 sigma n^1.5 sqrt(mu) log^4 n)
  std::shared_ptr<const DiscreteGaussian> gaussian;

  // Throws InvalidParams unless n is a power of two (>= 4), q is a prime with
  // q = 3 mod 8 and q < 2^62, sigma > 0, and mu >= (log n)^2.
  static RingParams create(std::uint32_t n, std::uint64_t q, double sigma, std::uint32_t mu);

  // floor(5 sigma n^2 sqrt(t mu) log^6 n). t must be >= 1.
  std::int64_t eta(std::uint32_t t) const;

  std::int64_t half_q() const { return static_cast<std::int64_t>((q - 1) / 2); }
};

// Element of R_q; coefficients are the canonical representatives in
// [-(q-1)/2, (q-1)/2], lowest degree first.
struct RingElement {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

// Fixed-length vector of mu ring elements.
struct RingVector {
  std::vector<RingElement> elems;

  friend bool operator==(const RingVector&, const RingVector&) = default;
};

std::int64_t reduce_canonical(const RingParams& params, __int128 v);

RingElement ring_zero(const RingParams& params);
RingElement ring_one(const RingParams& params);
// Reduces arbitrary integer coefficients into canonical range; size must be n.
RingElement ring_from(const RingParams& params, const std::vector<std::int64_t>& coeffs);
bool is_canonical(const RingParams& params, const RingElement& u);

RingElement ring_add(const RingParams& params, const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingParams& params, const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingParams& params, const RingElement& a);
// Schoolbook negacyclic product.
RingElement ring_mul(const RingParams& params, const RingElement& a, const RingElement& b);
// Karatsuba over the same ring; bit-identical to ring_mul.
RingElement ring_mul_karatsuba(const RingParams& params, const RingElement& a,
                               const RingElement& b);
// Inverse via extended Euclid in Z_q[x] against x^n + 1; nullopt when
// gcd(u, x^n + 1) is non-constant.
std::optional<RingElement> ring_invert(const RingParams& params, const RingElement& u);

std::int64_t inf_norm(const RingElement& u);
std::int64_t inf_norm(const RingVector& v);

// Membership in C: deg < n/2 and inf-norm <= log n.
bool in_challenge_set(const RingParams& params, const RingElement& c);

RingElement sample_gaussian(const RingParams& params, Rng& rng);
RingElement sample_uniform_c(const RingParams& params, Rng& rng);
RingElement sample_uniform_y(const RingParams& params, Rng& rng);
// Uniform on the Z set (inf-norm <= bound_z).
RingElement sample_uniform_z(const RingParams& params, Rng& rng);
RingElement sample_uniform_rq(const RingParams& params, Rng& rng);

RingVector vec_zero(const RingParams& params);
RingVector vec_add(const RingParams& params, const RingVector& a, const RingVector& b);
// Scalar-times-vector: c * v componentwise.
RingVector vec_scale(const RingParams& params, const RingElement& c, const RingVector& v);
// Sum of the slots.
RingElement vec_sum(const RingParams& params, const RingVector& v);

}  // namespace lsig
