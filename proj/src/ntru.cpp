// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include "nnru/ntru.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "nnru/error.hpp"
#include "nnru/scheme.hpp"

namespace nnru::ntru {

void validate(const NtruParams& params) {
  if (params.N == 0) throw Error(ErrorCode::kParameter, "N must be positive");
  if (!std::has_single_bit(params.q) || params.q < 4 || params.q > (1u << 16)) {
    throw Error(ErrorCode::kParameter, "q must be a power of two in [4, 2^16]");
  }
  if (!is_prime(params.p) || std::gcd(params.p, params.q) != 1) {
    throw Error(ErrorCode::kParameter, "p must be a prime coprime to q");
  }
  if (2 * params.d + 1 > params.N) {
    throw Error(ErrorCode::kParameter, "weight d too large for N");
  }
}

NtruKeyPair ntru_keygen(const NtruParams& params, Rng& rng, int retry_limit) {
  validate(params);
  if (params.d == 0) {
    throw Error(ErrorCode::kKeygenFailure, "weight d must be positive");
  }
  const auto e = static_cast<unsigned>(std::countr_zero(params.q));
  for (int attempt = 0; attempt < retry_limit; ++attempt) {
    RingElement f = sample_ternary(params.N, params.d + 1, params.d, rng);
    try {
      RingElement f_q = poly_inverse_mod_2e(f, e);
      RingElement f_p = poly_inverse_mod_prime(f, params.p);
      RingElement g = sample_ternary(params.N, params.d, params.d, rng);
      NtruKeyPair out;
      out.pub = {params, reduce_mod(ring_mul(f_q, g), params.q)};
      out.priv = {params, std::move(f), std::move(f_p)};
      out.g = std::move(g);
      return out;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kNotInvertible) throw;
    }
  }
  throw Error(ErrorCode::kKeygenFailure,
              "no invertible f after " + std::to_string(retry_limit) + " attempts");
}

RingElement ntru_encrypt_with_blinding(const NtruPublicKey& pub,
                                       const RingElement& m,
                                       const RingElement& phi) {
  const NtruParams& params = pub.params;
  if (m.size() != params.N || phi.size() != params.N) {
    throw Error(ErrorCode::kDimension, "message or blinding has wrong length");
  }
  const Coeff half = (static_cast<Coeff>(params.p) - 1) / 2;
  for (Coeff c : m.coeffs()) {
    if (c < -half || c > half) {
      throw Error(ErrorCode::kEncoding,
                  "message coefficient " + std::to_string(c) + " out of range");
    }
  }
  RingElement e = ring_scale(ring_mul(phi, pub.h), params.p);
  return reduce_mod(ring_add(e, m), params.q);
}

RingElement ntru_encrypt(const NtruPublicKey& pub, const RingElement& m,
                         Rng& rng) {
  const RingElement phi =
      sample_ternary(pub.params.N, pub.params.d, pub.params.d, rng);
  return ntru_encrypt_with_blinding(pub, m, phi);
}

RingElement ntru_decrypt(const NtruPrivateKey& priv, const RingElement& e) {
  const NtruParams& params = priv.params;
  if (e.size() != params.N) {
    throw Error(ErrorCode::kDimension, "ciphertext has wrong length");
  }
  const RingElement a = reduce_centered(ring_mul(priv.f, e), params.q);
  return reduce_centered(ring_mul(priv.f_p, a), params.p);
}

}  // namespace nnru::ntru
