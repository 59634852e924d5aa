// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include "nnru/encoding.hpp"

#include <string>

#include "nnru/error.hpp"

namespace nnru {
namespace {

constexpr std::size_t kLengthPrefix = 4;

void require_trit_params(const Params& params) {
  if (params.p != 3) {
    throw Error(ErrorCode::kEncoding,
                "byte encoding supports p=3 only, got p=" +
                    std::to_string(params.p));
  }
  if (block_capacity(params) == 0) {
    throw Error(ErrorCode::kEncoding,
                "block of n k^2 = " + std::to_string(params.coeff_count()) +
                    " trits cannot hold a byte");
  }
}

Coeff digit_to_trit(unsigned digit) {
  return digit == 2 ? -1 : static_cast<Coeff>(digit);
}

}  // namespace

std::size_t block_capacity(const Params& params) {
  return static_cast<std::size_t>(params.coeff_count() / kTritsPerByte);
}

std::vector<Plaintext> encode_message(std::span<const std::uint8_t> bytes,
                                      const Params& params) {
  require_trit_params(params);
  if (bytes.size() > 0xffffffffULL) {
    throw Error(ErrorCode::kEncoding, "message longer than 2^32 - 1 bytes");
  }
  std::vector<std::uint8_t> stream;
  stream.reserve(bytes.size() + kLengthPrefix);
  const auto len = static_cast<std::uint32_t>(bytes.size());
  for (int i = 0; i < 4; ++i) stream.push_back(static_cast<std::uint8_t>(len >> (8 * i)));
  stream.insert(stream.end(), bytes.begin(), bytes.end());

  const std::size_t capacity = block_capacity(params);
  std::vector<Plaintext> blocks;
  for (std::size_t start = 0; start < stream.size(); start += capacity) {
    std::vector<Coeff> flat(params.coeff_count(), 0);
    const std::size_t end = std::min(stream.size(), start + capacity);
    std::size_t pos = 0;
    for (std::size_t i = start; i < end; ++i) {
      unsigned v = stream[i];
      for (std::size_t t = 0; t < kTritsPerByte; ++t) {
        flat[pos++] = digit_to_trit(v % 3);
        v /= 3;
      }
    }
    blocks.push_back({MatrixElement::unflatten(params.k, params.n, flat)});
  }
  return blocks;
}

std::vector<std::uint8_t> decode_message(std::span<const Plaintext> blocks,
                                         const Params& params) {
  require_trit_params(params);
  const std::size_t capacity = block_capacity(params);
  std::vector<std::uint8_t> stream;
  stream.reserve(blocks.size() * capacity);
  for (const auto& block : blocks) {
    if (block.m.k() != params.k || block.m.n() != params.n) {
      throw Error(ErrorCode::kDecode, "block shape does not match parameters");
    }
    const std::vector<Coeff> flat = block.m.flatten();
    for (std::size_t b = 0; b < capacity; ++b) {
      unsigned value = 0;
      unsigned weight = 1;
      for (std::size_t t = 0; t < kTritsPerByte; ++t) {
        const Coeff trit = flat[b * kTritsPerByte + t];
        if (trit < -1 || trit > 1) {
          throw Error(ErrorCode::kDecode,
                      "digit " + std::to_string(trit) + " outside {-1, 0, 1}");
        }
        value += (trit == -1 ? 2u : static_cast<unsigned>(trit)) * weight;
        weight *= 3;
      }
      if (value > 0xff) {
        throw Error(ErrorCode::kDecode,
                    "digit group encodes " + std::to_string(value) +
                        ", not a byte");
      }
      stream.push_back(static_cast<std::uint8_t>(value));
    }
  }
  if (stream.size() < kLengthPrefix) {
    throw Error(ErrorCode::kDecode, "missing length prefix");
  }
  std::uint32_t len = 0;
  for (int i = 0; i < 4; ++i) len |= static_cast<std::uint32_t>(stream[i]) << (8 * i);
  if (len > stream.size() - kLengthPrefix) {
    throw Error(ErrorCode::kDecode,
                "length prefix " + std::to_string(len) + " exceeds " +
                    std::to_string(stream.size() - kLengthPrefix) +
                    " available bytes");
  }
  return {stream.begin() + kLengthPrefix,
          stream.begin() + kLengthPrefix + len};
}

}  // namespace nnru
