// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nnru/params.hpp"
#include "nnru/scheme.hpp"

namespace nnru {

// Byte <-> trit packing for p = 3. The stream is a 32-bit little-endian
// length followed by the message; each byte becomes six base-3 digits,
// least significant first, mapped 0 -> 0, 1 -> 1, 2 -> -1. Digits fill entries
// row-major, coefficients ascending; the last block is zero padded.
inline constexpr std::size_t kTritsPerByte = 6;

std::size_t block_capacity(const Params& params);

std::vector<Plaintext> encode_message(std::span<const std::uint8_t> bytes,
                                      const Params& params);
std::vector<std::uint8_t> decode_message(std::span<const Plaintext> blocks,
                                         const Params& params);

}  // namespace nnru
