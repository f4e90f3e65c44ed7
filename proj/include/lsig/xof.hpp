#pragma once

#include <cstdint>
#include <span>

#include "lsig/bytes.hpp"

namespace lsig {

Bytes shake256(ByteSpan input, std::size_t out_len);

// Unbounded SHAKE256 output stream: block k is SHAKE256(seed || be32(k)),
// 136 bytes each. Used wherever an unbiased rejection sampler needs more
// bytes than it knows in advance.
class XofStream {
 public:
  explicit XofStream(ByteSpan seed);

  void read(std::span<std::uint8_t> out);
  std::uint8_t next_byte();

 private:
  void refill();

  Bytes seed_;
  Bytes block_;
  std::size_t pos_ = 0;
  std::uint32_t counter_ = 0;
};

}  // namespace lsig
