#pragma once

#include "lsig/bytes.hpp"
#include "lsig/id/scheme.hpp"

namespace lsig {

// Fixed-width encodings. Schnorr group elements are big-endian at the width of
// p, scalars big-endian at the width of q. RLWE ring elements are n signed
// 64-bit little-endian coefficients. Decoders throw ParseError on wrong
// lengths, out-of-range values or non-subgroup elements.

Bytes encode_public_key(const Scheme& scheme, const PublicKey& pk);
PublicKey decode_public_key(const Scheme& scheme, ByteSpan in);

// Schnorr: s. RLWE: s1 || s2.
Bytes encode_secret_key(const Scheme& scheme, const SecretKey& sk);
SecretKey decode_secret_key(const Scheme& scheme, ByteSpan in);

// RLWE: mu elements, slot order.
Bytes encode_commitment(const Scheme& scheme, const Commitment& cmt);
Commitment decode_commitment(const Scheme& scheme, ByteSpan in);

// RLWE: z1 || z2.
Bytes encode_response(const Scheme& scheme, const Response& rsp);
Response decode_response(const Scheme& scheme, ByteSpan in);

Bytes encode_challenge(const Scheme& scheme, const Challenge& ch);
Challenge decode_challenge(const Scheme& scheme, ByteSpan in);

std::size_t public_key_bytes(const Scheme& scheme);
std::size_t commitment_bytes(const Scheme& scheme);
std::size_t response_bytes(const Scheme& scheme);
std::size_t challenge_bytes(const Scheme& scheme);

// Versioned little-endian parameter block.
//   Schnorr: [version=1][framed p LE][framed q LE][framed g LE]
//   RLWE:    [version=1][n u32][q u64][sigma f64 bits u64][mu u32][a: n x i64]
Bytes encode_params(const Scheme& scheme);
Scheme decode_params(SchemeId id, ByteSpan in);

}  // namespace lsig
