// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nnru/scheme.hpp"

namespace nnru {

// Binary object layout (all integers little-endian):
//   "NNRU" | version 0x01 | type | n u32 | k u32 | p u32 | q u32 | payload
// Public key payload: h, H. Private key payload: f, g, c, C_p, G_p.
// Ciphertext payload: block count u32, then the blocks.
// Matrices are row-major, polynomials ascending degree, each coefficient a
// u16 non-negative residue (mod p for C_p and G_p, mod q otherwise).
enum class ObjectType : std::uint8_t {
  kPublicKey = 0x01,
  kPrivateKey = 0x02,
  kCiphertext = 0x03,
};

inline constexpr std::uint8_t kFormatVersion = 0x01;
inline constexpr std::size_t kHeaderSize = 4 + 1 + 1 + 4 * 4;

struct CiphertextFile {
  Params params;
  std::vector<Ciphertext> blocks;
};

std::vector<std::uint8_t> serialize_public_key(const PublicKey& key);
std::vector<std::uint8_t> serialize_private_key(const PrivateKey& key);
std::vector<std::uint8_t> serialize_ciphertexts(
    const Params& params, std::span<const Ciphertext> blocks);

// Weights are not stored in the file. They are taken from `weights` when
// given, else from the preset with matching (n, k, p, q), else left zero.
// A `weights` with nonzero n must name the same ring (kMismatch otherwise).
PublicKey parse_public_key(std::span<const std::uint8_t> bytes,
                           const Params* weights = nullptr);
PrivateKey parse_private_key(std::span<const std::uint8_t> bytes,
                             const Params* weights = nullptr);
CiphertextFile parse_ciphertexts(std::span<const std::uint8_t> bytes);

ObjectType peek_object_type(std::span<const std::uint8_t> bytes);

}  // namespace nnru
