#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lsig {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

// Appends fixed-width integers and framed byte strings to a buffer.
class ByteWriter {
 public:
  ByteWriter() = default;

  void put_u8(std::uint8_t v) { buf_.push_back(v); }
  void put_u32_le(std::uint32_t v);
  void put_u32_be(std::uint32_t v);
  void put_u64_le(std::uint64_t v);
  void put_i64_le(std::int64_t v) { put_u64_le(static_cast<std::uint64_t>(v)); }
  void put_bytes(ByteSpan b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
  // u32 little-endian length followed by the bytes.
  void put_framed(ByteSpan b);

  const Bytes& bytes() const& { return buf_; }
  Bytes take() && { return std::move(buf_); }

 private:
  Bytes buf_;
};

// Bounds-checked cursor over a byte span; every short read throws ParseError.
class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  std::uint8_t get_u8();
  std::uint32_t get_u32_le();
  std::uint32_t get_u32_be();
  std::uint64_t get_u64_le();
  std::int64_t get_i64_le() { return static_cast<std::int64_t>(get_u64_le()); }
  ByteSpan get_bytes(std::size_t n);
  ByteSpan get_framed();

  std::size_t remaining() const { return data_.size() - pos_; }
  std::size_t position() const { return pos_; }
  void expect_end() const;

 private:
  ByteSpan data_;
  std::size_t pos_ = 0;
};

std::string to_hex(ByteSpan b);
Bytes from_hex(std::string_view hex);

inline ByteSpan as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace lsig
