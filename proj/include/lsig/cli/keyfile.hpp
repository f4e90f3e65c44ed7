#pragma once

#include <cstdint>
#include <filesystem>

#include "lsig/bytes.hpp"
#include "lsig/id/scheme.hpp"
#include "lsig/multisig/multisig.hpp"

namespace lsig::cli {

inline constexpr std::uint8_t kFormatVersion = 1;

enum class FileKind : std::uint8_t { PublicKey = 1, SecretKey = 2, AggregatedKey = 3, Signature = 4 };

std::string file_kind_name(FileKind k);

// "LSIG" | version u8 | scheme u8 | params (u32 LE length, bytes) |
// payload (u32 LE length, kind u8 || body) | crc32 of everything before, LE.
struct LsigFile {
  SchemeId scheme = SchemeId::Schnorr;
  Bytes params;
  FileKind kind = FileKind::PublicKey;
  Bytes body;

  friend bool operator==(const LsigFile&, const LsigFile&) = default;
};

Bytes encode_file(const LsigFile& f);
// Throws ParseError on bad magic, version, scheme tag, kind, framing or checksum.
LsigFile decode_file(ByteSpan in);

Bytes read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, ByteSpan data);
LsigFile read_file(const std::filesystem::path& path, FileKind expected);

// Typed views. The secret file body is sk || pk.
LsigFile make_public_key_file(const Scheme& scheme, const PublicKey& pk);
LsigFile make_secret_key_file(const Scheme& scheme, const KeyPair& kp);
LsigFile make_aggregated_key_file(const Scheme& scheme, const AggregatedKey& key);
LsigFile make_signature_file(const Scheme& scheme, const MultiSignature& sig);

Scheme scheme_of(const LsigFile& f);
PublicKey public_key_of(const Scheme& scheme, const LsigFile& f);
KeyPair key_pair_of(const Scheme& scheme, const LsigFile& f);
AggregatedKey aggregated_key_of(const Scheme& scheme, const LsigFile& f);
MultiSignature signature_of(const Scheme& scheme, const LsigFile& f);

}  // namespace lsig::cli
