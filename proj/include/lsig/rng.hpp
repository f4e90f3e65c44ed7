#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>

namespace lsig {

// Randomness handle passed explicitly to every sampling routine. Handles are
// single-owner; do not share one between threads.
//
// Satisfies UniformRandomBitGenerator so it can drive <random> and
// std::shuffle directly.
class Rng {
 public:
  using result_type = std::uint64_t;

  virtual ~Rng() = default;
  virtual std::uint64_t next() = 0;

  std::uint64_t operator()() { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  // Uniform on [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on the closed interval [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  void fill(std::span<std::uint8_t> out);
};

// Deterministic generator backed by mt19937_64.
class SeededRng final : public Rng {
 public:
  explicit SeededRng(std::uint64_t seed);
  explicit SeededRng(std::span<const std::uint8_t> seed_bytes);

  std::uint64_t next() override { return engine_(); }

  // Seeded from std::random_device.
  static SeededRng from_entropy();

 private:
  std::mt19937_64 engine_;
};

// Value of LSIG_SEED when set and parseable.
std::optional<std::uint64_t> seed_from_env();

// LSIG_SEED when set, fresh entropy otherwise.
SeededRng make_default_rng();

}  // namespace lsig
