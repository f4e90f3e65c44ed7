#include "lsig/bytes.hpp"

#include "lsig/errors.hpp"

namespace lsig {

void ByteWriter::put_u32_le(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::put_u32_be(std::uint32_t v) {
  for (int i = 3; i >= 0; --i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::put_u64_le(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::put_framed(ByteSpan b) {
  put_u32_le(static_cast<std::uint32_t>(b.size()));
  put_bytes(b);
}

std::uint8_t ByteReader::get_u8() { return get_bytes(1)[0]; }

std::uint32_t ByteReader::get_u32_le() {
  auto b = get_bytes(4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::uint32_t ByteReader::get_u32_be() {
  auto b = get_bytes(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | b[i];
  return v;
}

std::uint64_t ByteReader::get_u64_le() {
  auto b = get_bytes(8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

ByteSpan ByteReader::get_bytes(std::size_t n) {
  if (n > remaining()) {
    throw ParseError("truncated input: need " + std::to_string(n) + " bytes at offset " +
                     std::to_string(pos_) + ", have " + std::to_string(remaining()));
  }
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

ByteSpan ByteReader::get_framed() {
  const std::uint32_t len = get_u32_le();
  return get_bytes(len);
}

void ByteReader::expect_end() const {
  if (remaining() != 0) {
    throw ParseError(std::to_string(remaining()) + " trailing bytes");
  }
}

std::string to_hex(ByteSpan b) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * b.size());
  for (std::uint8_t v : b) {
    out.push_back(kDigits[v >> 4]);
    out.push_back(kDigits[v & 0xf]);
  }
  return out;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw ParseError("odd-length hex string");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw ParseError("invalid hex digit");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

}  // namespace lsig
