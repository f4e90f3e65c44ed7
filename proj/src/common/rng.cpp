#include "lsig/rng.hpp"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace lsig {

// Lemire's multiply-and-reject; the rejection threshold keeps it unbiased.
std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    if (static_cast<std::uint64_t>(m) >= threshold) {
      return static_cast<std::uint64_t>(m >> 64);
    }
  }
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
}

void Rng::fill(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t w = next();
    for (int k = 0; k < 8 && i < out.size(); ++k, ++i) {
      out[i] = static_cast<std::uint8_t>(w);
      w >>= 8;
    }
  }
}

SeededRng::SeededRng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  engine_.seed(seq);
}

SeededRng::SeededRng(std::span<const std::uint8_t> seed_bytes) {
  std::vector<std::uint32_t> words((seed_bytes.size() + 3) / 4, 0);
  for (std::size_t i = 0; i < seed_bytes.size(); ++i) {
    words[i / 4] |= static_cast<std::uint32_t>(seed_bytes[i]) << (8 * (i % 4));
  }
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

SeededRng SeededRng::from_entropy() {
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  return SeededRng(seed);
}

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv("LSIG_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used, 0);
    if (used != std::strlen(raw)) return std::nullopt;
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

SeededRng make_default_rng() {
  if (auto seed = seed_from_env()) return SeededRng(*seed);
  return SeededRng::from_entropy();
}

}  // namespace lsig
