#include "lsig/cli/keyfile.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>

#include "lsig/errors.hpp"
#include "lsig/id/codec.hpp"

namespace lsig::cli {

namespace {

constexpr std::uint8_t kMagic[4] = {'L', 'S', 'I', 'G'};

std::uint32_t crc32_of(ByteSpan b) {
  return static_cast<std::uint32_t>(::crc32(0L, b.data(), static_cast<uInt>(b.size())));
}

}  // namespace

std::string file_kind_name(FileKind k) {
  switch (k) {
    case FileKind::PublicKey:
      return "public key";
    case FileKind::SecretKey:
      return "secret key";
    case FileKind::AggregatedKey:
      return "aggregated key";
    case FileKind::Signature:
      return "signature";
  }
  return "unknown";
}

Bytes encode_file(const LsigFile& f) {
  ByteWriter w;
  w.put_bytes(kMagic);
  w.put_u8(kFormatVersion);
  w.put_u8(static_cast<std::uint8_t>(f.scheme));
  w.put_framed(f.params);
  Bytes payload{static_cast<std::uint8_t>(f.kind)};
  payload.insert(payload.end(), f.body.begin(), f.body.end());
  w.put_framed(payload);
  auto out = std::move(w).take();
  ByteWriter crc;
  crc.put_u32_le(crc32_of(out));
  out.insert(out.end(), crc.bytes().begin(), crc.bytes().end());
  return out;
}

LsigFile decode_file(ByteSpan in) {
  if (in.size() < 4 + 2 + 4 + 4 + 4) throw ParseError("file truncated");
  const auto body = in.first(in.size() - 4);
  ByteReader tail(in.last(4));
  if (tail.get_u32_le() != crc32_of(body)) throw ParseError("checksum mismatch");

  ByteReader rd(body);
  const auto magic = rd.get_bytes(4);
  if (!std::equal(magic.begin(), magic.end(), std::begin(kMagic))) throw ParseError("not an LSIG file");
  if (const auto v = rd.get_u8(); v != kFormatVersion) {
    throw ParseError("unsupported format version " + std::to_string(v));
  }
  LsigFile f;
  const auto tag = rd.get_u8();
  if (tag != static_cast<std::uint8_t>(SchemeId::Schnorr) && tag != static_cast<std::uint8_t>(SchemeId::Rlwe)) {
    throw ParseError("unknown scheme tag " + std::to_string(tag));
  }
  f.scheme = static_cast<SchemeId>(tag);
  const auto params = rd.get_framed();
  f.params.assign(params.begin(), params.end());
  const auto payload = rd.get_framed();
  rd.expect_end();
  if (payload.empty()) throw ParseError("empty payload");
  if (payload[0] < 1 || payload[0] > 4) throw ParseError("unknown payload kind " + std::to_string(payload[0]));
  f.kind = static_cast<FileKind>(payload[0]);
  f.body.assign(payload.begin() + 1, payload.end());
  return f;
}

Bytes read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_bytes(const std::filesystem::path& path, ByteSpan data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

LsigFile read_file(const std::filesystem::path& path, FileKind expected) {
  auto f = decode_file(read_bytes(path));
  if (f.kind != expected) {
    throw ParseError(path.string() + ": expected a " + file_kind_name(expected) + " file, found " +
                     file_kind_name(f.kind));
  }
  return f;
}

LsigFile make_public_key_file(const Scheme& scheme, const PublicKey& pk) {
  return {scheme.id(), encode_params(scheme), FileKind::PublicKey, encode_public_key(scheme, pk)};
}

LsigFile make_secret_key_file(const Scheme& scheme, const KeyPair& kp) {
  auto body = encode_secret_key(scheme, kp.sk);
  const auto pk = encode_public_key(scheme, kp.pk);
  body.insert(body.end(), pk.begin(), pk.end());
  return {scheme.id(), encode_params(scheme), FileKind::SecretKey, std::move(body)};
}

LsigFile make_aggregated_key_file(const Scheme& scheme, const AggregatedKey& key) {
  return {scheme.id(), encode_params(scheme), FileKind::AggregatedKey, encode_aggregated_key(scheme, key)};
}

LsigFile make_signature_file(const Scheme& scheme, const MultiSignature& sig) {
  return {scheme.id(), encode_params(scheme), FileKind::Signature, encode_signature(scheme, sig)};
}

Scheme scheme_of(const LsigFile& f) { return decode_params(f.scheme, f.params); }

PublicKey public_key_of(const Scheme& scheme, const LsigFile& f) { return decode_public_key(scheme, f.body); }

KeyPair key_pair_of(const Scheme& scheme, const LsigFile& f) {
  const auto pk_len = public_key_bytes(scheme);
  if (f.body.size() < pk_len) throw ParseError("secret key file truncated");
  const ByteSpan body(f.body);
  KeyPair kp{decode_secret_key(scheme, body.first(body.size() - pk_len)),
             decode_public_key(scheme, body.last(pk_len))};
  if (!(lsig::public_key_of(scheme, kp.sk) == kp.pk)) throw ParseError("secret and public key do not match");
  return kp;
}

AggregatedKey aggregated_key_of(const Scheme& scheme, const LsigFile& f) {
  return decode_aggregated_key(scheme, f.body);
}

MultiSignature signature_of(const Scheme& scheme, const LsigFile& f) { return decode_signature(scheme, f.body); }

}  // namespace lsig::cli
