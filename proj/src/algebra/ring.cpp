#include "lsig/algebra/ring.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "lsig/errors.hpp"

namespace lsig {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::int64_t floor_to_int(long double v) { return static_cast<std::int64_t>(std::floor(v)); }

void check_size(const RingParams& params, const RingElement& a) {
  if (a.coeffs.size() != params.n) throw std::invalid_argument("ring element has wrong degree");
}

// Polynomials over Z_q in [0, q) representation, lowest degree first, used by
// the extended Euclid inversion.
using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return a >= b ? a - b : a + q - b;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, q);
    base = mulmod(base, base, q);
    e >>= 1;
  }
  return r;
}

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = quot * b + rem; b must be nonzero (trimmed, non-empty).
void divmod(const ModPoly& a, const ModPoly& b, std::uint64_t q, ModPoly& quot, ModPoly& rem) {
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
  const std::uint64_t lead_inv = powmod(b.back(), q - 2, q);
  while (rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const std::uint64_t factor = mulmod(rem.back(), lead_inv, q);
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rem[shift + i] = submod(rem[shift + i], mulmod(factor, b[i], q), q);
    }
    trim(rem);
  }
}

ModPoly poly_mul(const ModPoly& a, const ModPoly& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod(a[i], b[j], q)) % q;
    }
  }
  trim(out);
  return out;
}

ModPoly poly_sub(const ModPoly& a, const ModPoly& b, std::uint64_t q) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = submod(x, y, q);
  }
  trim(out);
  return out;
}

using WidePoly = std::vector<__int128>;

// Full (non-reduced) product of two equal-length integer polynomials.
WidePoly karatsuba(const WidePoly& a, const WidePoly& b) {
  const std::size_t n = a.size();
  WidePoly out(2 * n - 1, 0);
  if (n <= 8) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }
  const std::size_t h = n / 2;
  WidePoly a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
  WidePoly b0(b.begin(), b.begin() + h), b1(b.begin() + h, b.end());
  WidePoly as(h), bs(h);
  for (std::size_t i = 0; i < h; ++i) {
    as[i] = a0[i] + a1[i];
    bs[i] = b0[i] + b1[i];
  }
  const WidePoly low = karatsuba(a0, b0);
  const WidePoly high = karatsuba(a1, b1);
  WidePoly mid = karatsuba(as, bs);
  for (std::size_t i = 0; i < mid.size(); ++i) mid[i] -= low[i] + high[i];
  for (std::size_t i = 0; i < low.size(); ++i) {
    out[i] += low[i];
    out[i + h] += mid[i];
    out[i + 2 * h] += high[i];
  }
  return out;
}

}  // namespace

RingParams RingParams::create(std::uint32_t n, std::uint64_t q, double sigma, std::uint32_t mu) {
  if (n < 4 || !std::has_single_bit(n)) throw InvalidParams("ring degree n must be a power of two >= 4");
  if (q >= kMaxModulus) throw InvalidParams("ring modulus q must be below 2^62");
  if (q % 8 != 3) throw InvalidParams("ring modulus q must be 3 mod 8");
  if (mpz_probab_prime_p(mpz_class(std::to_string(q)).get_mpz_t(), 40) == 0) {
    throw InvalidParams("ring modulus q is not prime");
  }
  if (!(sigma > 0)) throw InvalidParams("sigma must be positive");
  const std::uint32_t log_n = static_cast<std::uint32_t>(std::countr_zero(n));
  if (mu < log_n * log_n) throw InvalidParams("mu must be at least (log2 n)^2");

  RingParams p;
  p.n = n;
  p.q = q;
  p.sigma = sigma;
  p.mu = mu;
  p.log_n = log_n;

  const long double nn = n;
  const long double lg = log_n;
  const long double sg = sigma;
  const long double root_n = std::sqrt(nn);
  p.bound_c = log_n;
  p.bound_y = floor_to_int(nn * root_n * sg * lg * lg * lg);
  p.bound_z = floor_to_int((nn - 1) * root_n * sg * lg * lg * lg);
  p.eta1 = floor_to_int(3 * sg * nn * root_n * std::sqrt(static_cast<long double>(mu)) *
                        lg * lg * lg * lg);
  p.gaussian = std::make_shared<const DiscreteGaussian>(sigma);
  return p;
}

std::int64_t RingParams::eta(std::uint32_t t) const {
  if (t == 0) throw std::invalid_argument("eta: t must be >= 1");
  const long double nn = n;
  const long double lg = log_n;
  const long double lg6 = lg * lg * lg * lg * lg * lg;
  return floor_to_int(5 * static_cast<long double>(sigma) * nn * nn *
                      std::sqrt(static_cast<long double>(t) * mu) * lg6);
}

std::int64_t reduce_canonical(const RingParams& params, __int128 v) {
  const __int128 q = params.q;
  __int128 r = v % q;
  if (r < 0) r += q;
  if (r > params.half_q()) r -= q;
  return static_cast<std::int64_t>(r);
}

RingElement ring_zero(const RingParams& params) {
  return RingElement{std::vector<std::int64_t>(params.n, 0)};
}

RingElement ring_one(const RingParams& params) {
  RingElement one = ring_zero(params);
  one.coeffs[0] = 1;
  return one;
}

RingElement ring_from(const RingParams& params, const std::vector<std::int64_t>& coeffs) {
  if (coeffs.size() != params.n) throw std::invalid_argument("ring_from: wrong number of coefficients");
  RingElement out{std::vector<std::int64_t>(params.n)};
  for (std::size_t i = 0; i < params.n; ++i) out.coeffs[i] = reduce_canonical(params, coeffs[i]);
  return out;
}

bool is_canonical(const RingParams& params, const RingElement& u) {
  if (u.coeffs.size() != params.n) return false;
  const std::int64_t h = params.half_q();
  return std::all_of(u.coeffs.begin(), u.coeffs.end(),
                     [h](std::int64_t c) { return c >= -h && c <= h; });
}

RingElement ring_add(const RingParams& params, const RingElement& a, const RingElement& b) {
  check_size(params, a);
  check_size(params, b);
  RingElement out{std::vector<std::int64_t>(params.n)};
  for (std::size_t i = 0; i < params.n; ++i) {
    out.coeffs[i] = reduce_canonical(params, static_cast<__int128>(a.coeffs[i]) + b.coeffs[i]);
  }
  return out;
}

RingElement ring_sub(const RingParams& params, const RingElement& a, const RingElement& b) {
  check_size(params, a);
  check_size(params, b);
  RingElement out{std::vector<std::int64_t>(params.n)};
  for (std::size_t i = 0; i < params.n; ++i) {
    out.coeffs[i] = reduce_canonical(params, static_cast<__int128>(a.coeffs[i]) - b.coeffs[i]);
  }
  return out;
}

RingElement ring_neg(const RingParams& params, const RingElement& a) {
  return ring_sub(params, ring_zero(params), a);
}

RingElement ring_mul(const RingParams& params, const RingElement& a, const RingElement& b) {
  check_size(params, a);
  check_size(params, b);
  const std::size_t n = params.n;
  std::vector<__int128> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    const __int128 ai = a.coeffs[i];
    for (std::size_t j = 0; j < n; ++j) {
      const __int128 prod = ai * b.coeffs[j];
      const std::size_t k = i + j;
      if (k < n) {
        acc[k] += prod;
      } else {
        acc[k - n] -= prod;
      }
    }
  }
  RingElement out{std::vector<std::int64_t>(n)};
  for (std::size_t k = 0; k < n; ++k) out.coeffs[k] = reduce_canonical(params, acc[k]);
  return out;
}

RingElement ring_mul_karatsuba(const RingParams& params, const RingElement& a,
                               const RingElement& b) {
  check_size(params, a);
  check_size(params, b);
  const std::size_t n = params.n;
  const WidePoly wa(a.coeffs.begin(), a.coeffs.end());
  const WidePoly wb(b.coeffs.begin(), b.coeffs.end());
  const WidePoly full = karatsuba(wa, wb);
  RingElement out{std::vector<std::int64_t>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    __int128 v = full[k];
    if (k + n < full.size()) v -= full[k + n];
    out.coeffs[k] = reduce_canonical(params, v);
  }
  return out;
}

std::optional<RingElement> ring_invert(const RingParams& params, const RingElement& u) {
  check_size(params, u);
  const std::uint64_t q = params.q;
  const std::size_t n = params.n;

  ModPoly r0(n + 1, 0);
  r0[0] = 1;
  r0[n] = 1;
  ModPoly r1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t c = u.coeffs[i];
    r1[i] = c >= 0 ? static_cast<std::uint64_t>(c) : q - static_cast<std::uint64_t>(-c);
  }
  trim(r1);
  // Invariant: s_k * u == r_k (mod x^n + 1).
  ModPoly s0;
  ModPoly s1{1};
  ModPoly quot, rem;
  while (!r1.empty()) {
    divmod(r0, r1, q, quot, rem);
    ModPoly s2 = poly_sub(s0, poly_mul(quot, s1, q), q);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return std::nullopt;

  const std::uint64_t scale = powmod(r0[0], q - 2, q);
  std::vector<__int128> acc(n, 0);
  for (std::size_t i = 0; i < s0.size(); ++i) {
    const __int128 v = mulmod(s0[i], scale, q);
    // Fold degree >= n terms with x^n = -1.
    const std::size_t wraps = i / n;
    acc[i % n] += (wraps % 2 == 0) ? v : -v;
  }
  RingElement out{std::vector<std::int64_t>(n)};
  for (std::size_t k = 0; k < n; ++k) out.coeffs[k] = reduce_canonical(params, acc[k]);
  return out;
}

std::int64_t inf_norm(const RingElement& u) {
  std::int64_t m = 0;
  for (std::int64_t c : u.coeffs) m = std::max(m, c < 0 ? -c : c);
  return m;
}

std::int64_t inf_norm(const RingVector& v) {
  std::int64_t m = 0;
  for (const auto& e : v.elems) m = std::max(m, inf_norm(e));
  return m;
}

bool in_challenge_set(const RingParams& params, const RingElement& c) {
  if (c.coeffs.size() != params.n) return false;
  for (std::size_t i = 0; i < params.n; ++i) {
    const std::int64_t v = c.coeffs[i];
    if (i >= params.n / 2 && v != 0) return false;
    if (v < -params.bound_c || v > params.bound_c) return false;
  }
  return true;
}

RingElement sample_gaussian(const RingParams& params, Rng& rng) {
  RingElement out{std::vector<std::int64_t>(params.n)};
  for (auto& c : out.coeffs) c = params.gaussian->sample(rng);
  return out;
}

RingElement sample_uniform_c(const RingParams& params, Rng& rng) {
  RingElement out = ring_zero(params);
  for (std::size_t i = 0; i < params.n / 2; ++i) {
    out.coeffs[i] = rng.uniform_int(-params.bound_c, params.bound_c);
  }
  return out;
}

RingElement sample_uniform_y(const RingParams& params, Rng& rng) {
  RingElement out{std::vector<std::int64_t>(params.n)};
  for (auto& c : out.coeffs) c = rng.uniform_int(-params.bound_y, params.bound_y);
  return out;
}

RingElement sample_uniform_z(const RingParams& params, Rng& rng) {
  RingElement out{std::vector<std::int64_t>(params.n)};
  for (auto& c : out.coeffs) c = rng.uniform_int(-params.bound_z, params.bound_z);
  return out;
}

RingElement sample_uniform_rq(const RingParams& params, Rng& rng) {
  RingElement out{std::vector<std::int64_t>(params.n)};
  for (auto& c : out.coeffs) c = rng.uniform_int(-params.half_q(), params.half_q());
  return out;
}

RingVector vec_zero(const RingParams& params) {
  return RingVector{std::vector<RingElement>(params.mu, ring_zero(params))};
}

RingVector vec_add(const RingParams& params, const RingVector& a, const RingVector& b) {
  if (a.elems.size() != b.elems.size()) throw std::invalid_argument("vector length mismatch");
  RingVector out;
  out.elems.reserve(a.elems.size());
  for (std::size_t j = 0; j < a.elems.size(); ++j) {
    out.elems.push_back(ring_add(params, a.elems[j], b.elems[j]));
  }
  return out;
}

RingVector vec_scale(const RingParams& params, const RingElement& c, const RingVector& v) {
  RingVector out;
  out.elems.reserve(v.elems.size());
  for (const auto& e : v.elems) out.elems.push_back(ring_mul(params, c, e));
  return out;
}

RingElement vec_sum(const RingParams& params, const RingVector& v) {
  RingElement acc = ring_zero(params);
  for (const auto& e : v.elems) acc = ring_add(params, acc, e);
  return acc;
}

}  // namespace lsig
