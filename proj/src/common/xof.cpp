#include "lsig/xof.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

namespace lsig {

namespace {

constexpr std::size_t kBlockBytes = 136;

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

}  // namespace

Bytes shake256(ByteSpan input, std::size_t out_len) {
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  Bytes out(out_len);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1 ||
      EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
    throw std::runtime_error("SHAKE256 failed");
  }
  return out;
}

XofStream::XofStream(ByteSpan seed) : seed_(seed.begin(), seed.end()) { refill(); }

void XofStream::refill() {
  Bytes input = seed_;
  for (int i = 3; i >= 0; --i) input.push_back(static_cast<std::uint8_t>(counter_ >> (8 * i)));
  ++counter_;
  block_ = shake256(input, kBlockBytes);
  pos_ = 0;
}

std::uint8_t XofStream::next_byte() {
  if (pos_ == block_.size()) refill();
  return block_[pos_++];
}

void XofStream::read(std::span<std::uint8_t> out) {
  for (auto& b : out) b = next_byte();
}

}  // namespace lsig
