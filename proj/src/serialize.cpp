// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include "nnru/serialize.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "nnru/error.hpp"

namespace nnru {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic{0x4E, 0x4E, 0x52, 0x55};

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) {
    out_.push_back(static_cast<std::uint8_t>(v));
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void header(ObjectType type, const Params& params) {
    out_.insert(out_.end(), kMagic.begin(), kMagic.end());
    u8(kFormatVersion);
    u8(static_cast<std::uint8_t>(type));
    u32(params.n);
    u32(params.k);
    u32(params.p);
    u32(params.q);
  }
  void matrix(const MatrixElement& m, Coeff modulus) {
    for (const auto& e : m.entries()) {
      for (Coeff c : e.coeffs()) u16(static_cast<std::uint16_t>(mod_floor(c, modulus)));
    }
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8() {
    need(1);
    return in_[pos_++];
  }
  std::uint16_t u16() {
    need(2);
    const auto v = static_cast<std::uint16_t>(in_[pos_] | (in_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  MatrixElement matrix(const Params& params, Coeff modulus, bool centered) {
    need(params.coeff_count() * 2);
    MatrixElement m(params.k, params.n);
    for (auto& e : m.entries()) {
      for (auto& c : e.coeffs()) {
        const Coeff v = u16();
        if (v >= modulus) {
          throw Error(ErrorCode::kFormat,
                      "coefficient " + std::to_string(v) + " not reduced mod " +
                          std::to_string(modulus));
        }
        c = centered ? mod_centered(v, modulus) : v;
      }
    }
    return m;
  }
  void finish() const {
    if (pos_ != in_.size()) {
      throw Error(ErrorCode::kFormat, std::to_string(in_.size() - pos_) +
                                          " trailing bytes after object");
    }
  }

 private:
  void need(std::uint64_t count) const {
    if (pos_ + count > in_.size()) {
      throw Error(ErrorCode::kFormat, "truncated object");
    }
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

Params read_header(Reader& r, ObjectType expected, const Params* weights) {
  for (std::uint8_t m : kMagic) {
    if (r.u8() != m) throw Error(ErrorCode::kFormat, "bad magic bytes");
  }
  const std::uint8_t version = r.u8();
  if (version != kFormatVersion) {
    throw Error(ErrorCode::kFormat, "unsupported version " + std::to_string(version));
  }
  const std::uint8_t type = r.u8();
  if (type != static_cast<std::uint8_t>(expected)) {
    throw Error(ErrorCode::kFormat,
                "unexpected object type " + std::to_string(type) + ", wanted " +
                    std::to_string(static_cast<int>(expected)));
  }
  Params params;
  params.n = r.u32();
  params.k = r.u32();
  params.p = r.u32();
  params.q = r.u32();
  if (weights != nullptr) {
    // Callers may pass full parameters; the ring part must then agree.
    if (weights->n != 0 && !weights->same_ring(params)) {
      throw Error(ErrorCode::kMismatch, "object parameters (" + to_string(params) +
                                            ") do not match the requested (" +
                                            to_string(*weights) + ")");
    }
    params.d_f = weights->d_f;
    params.d_w = weights->d_w;
    params.d_c = weights->d_c;
    params.d_phi = weights->d_phi;
  } else if (auto preset = preset_for_ring(params.n, params.k, params.p, params.q)) {
    params = *preset;
  }
  try {
    validate_params(params);
  } catch (const Error& e) {
    throw Error(ErrorCode::kFormat, std::string("invalid header: ") + e.what());
  }
  // Guard the allocation below against absurd headers.
  if (params.coeff_count() > (1u << 24)) {
    throw Error(ErrorCode::kFormat, "object dimensions too large");
  }
  return params;
}

}  // namespace

std::vector<std::uint8_t> serialize_public_key(const PublicKey& key) {
  Writer w;
  w.header(ObjectType::kPublicKey, key.params);
  w.matrix(key.h, key.params.q);
  w.matrix(key.H, key.params.q);
  return w.take();
}

std::vector<std::uint8_t> serialize_private_key(const PrivateKey& key) {
  Writer w;
  w.header(ObjectType::kPrivateKey, key.params);
  w.matrix(key.f, key.params.q);
  w.matrix(key.g, key.params.q);
  w.matrix(key.c, key.params.q);
  w.matrix(key.c_p, key.params.p);
  w.matrix(key.g_p, key.params.p);
  return w.take();
}

std::vector<std::uint8_t> serialize_ciphertexts(
    const Params& params, std::span<const Ciphertext> blocks) {
  Writer w;
  w.header(ObjectType::kCiphertext, params);
  w.u32(static_cast<std::uint32_t>(blocks.size()));
  for (const auto& b : blocks) w.matrix(b.e, params.q);
  return w.take();
}

PublicKey parse_public_key(std::span<const std::uint8_t> bytes,
                           const Params* weights) {
  Reader r(bytes);
  PublicKey key;
  key.params = read_header(r, ObjectType::kPublicKey, weights);
  key.h = r.matrix(key.params, key.params.q, false);
  key.H = r.matrix(key.params, key.params.q, false);
  r.finish();
  return key;
}

PrivateKey parse_private_key(std::span<const std::uint8_t> bytes,
                             const Params* weights) {
  Reader r(bytes);
  PrivateKey key;
  key.params = read_header(r, ObjectType::kPrivateKey, weights);
  key.f = r.matrix(key.params, key.params.q, true);
  key.g = r.matrix(key.params, key.params.q, true);
  key.c = r.matrix(key.params, key.params.q, true);
  key.c_p = r.matrix(key.params, key.params.p, false);
  key.g_p = r.matrix(key.params, key.params.p, false);
  r.finish();
  return key;
}

CiphertextFile parse_ciphertexts(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  CiphertextFile file;
  file.params = read_header(r, ObjectType::kCiphertext, nullptr);
  const std::uint32_t count = r.u32();
  // Each block needs 2 n k^2 bytes; reject counts the input cannot hold.
  if (static_cast<std::uint64_t>(count) * file.params.coeff_count() * 2 >
      bytes.size()) {
    throw Error(ErrorCode::kFormat, "truncated object");
  }
  file.blocks.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    file.blocks.push_back({r.matrix(file.params, file.params.q, false)});
  }
  r.finish();
  return file;
}

ObjectType peek_object_type(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize ||
      !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(ErrorCode::kFormat, "not an NNRU object");
  }
  const std::uint8_t type = bytes[5];
  if (type < 1 || type > 3) {
    throw Error(ErrorCode::kFormat, "unknown object type " + std::to_string(type));
  }
  return static_cast<ObjectType>(type);
}

}  // namespace nnru
