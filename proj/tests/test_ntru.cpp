// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "nnru/error.hpp"
#include "nnru/ntru.hpp"
#include "nnru/scheme.hpp"
#include "oracles.hpp"

namespace nnru::ntru {
namespace {

const NtruParams kParams{107, 3, 64, 5};

RingElement sample_message(std::size_t n, Rng& rng) {
  RingElement m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Coeff>(rng.uniform_below(3)) - 1;
  return m;
}

TEST(NtruKeygen, PublicKeyRelation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const NtruKeyPair keys = ntru_keygen(kParams, rng);
    // f h = g (mod q), f F_p = 1 (mod p).
    const auto fh = oracle::convolve(oracle::to_poly(keys.priv.f), oracle::to_poly(keys.pub.h));
    for (std::size_t i = 0; i < kParams.N; ++i) {
      EXPECT_EQ(oracle::floor_mod(fh[i] - keys.g[i], kParams.q), 0);
    }
    const auto ffp = oracle::convolve(oracle::to_poly(keys.priv.f), oracle::to_poly(keys.priv.f_p));
    for (std::size_t i = 0; i < kParams.N; ++i) {
      EXPECT_EQ(oracle::floor_mod(ffp[i], 3), i == 0 ? 1 : 0);
    }
  }
}

TEST(NtruKeygen, Deterministic) {
  Rng a(9), b(9);
  EXPECT_EQ(ntru_keygen(kParams, a).pub.h, ntru_keygen(kParams, b).pub.h);
}

TEST(NtruKeygen, ZeroWeightFails) {
  Rng rng(1);
  try {
    ntru_keygen({107, 3, 64, 0}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKeygenFailure);
  }
}

TEST(NtruParams, Validation) {
  EXPECT_THROW(validate({107, 2, 64, 5}), Error);
  EXPECT_THROW(validate({107, 3, 100, 5}), Error);
  EXPECT_THROW(validate({7, 3, 64, 4}), Error);
  EXPECT_NO_THROW(validate(kParams));
}

TEST(NtruEncrypt, TrivialCases) {
  Rng rng(2);
  const NtruKeyPair keys = ntru_keygen(kParams, rng);
  const RingElement zero(kParams.N);
  EXPECT_EQ(ntru_encrypt_with_blinding(keys.pub, zero, zero), zero);
  const RingElement m = sample_message(kParams.N, rng);
  EXPECT_EQ(ntru_encrypt_with_blinding(keys.pub, m, zero), reduce_mod(m, kParams.q));
  EXPECT_EQ(ntru_decrypt(keys.priv, zero), zero);
}

TEST(NtruEncrypt, MatchesConvolutionOracle) {
  Rng rng(3);
  const NtruKeyPair keys = ntru_keygen(kParams, rng);
  const RingElement m = sample_message(kParams.N, rng);
  const RingElement phi = sample_ternary(kParams.N, kParams.d, kParams.d, rng);
  const auto conv = oracle::convolve(oracle::to_poly(phi), oracle::to_poly(keys.pub.h));
  RingElement expected(kParams.N);
  for (std::size_t i = 0; i < kParams.N; ++i) {
    expected[i] = oracle::floor_mod(3 * conv[i] + m[i], kParams.q);
  }
  EXPECT_EQ(ntru_encrypt_with_blinding(keys.pub, m, phi), expected);
}

TEST(NtruDecrypt, RoundTripRate) {
  int ok = 0, trials = 0;
  for (std::uint64_t key = 0; key < 10; ++key) {
    Rng rng = Rng::derive(4, "ntru-key", key);
    const NtruKeyPair keys = ntru_keygen(kParams, rng);
    for (int t = 0; t < 100; ++t, ++trials) {
      const RingElement m = sample_message(kParams.N, rng);
      const RingElement phi = sample_ternary(kParams.N, kParams.d, kParams.d, rng);
      const RingElement e = ntru_encrypt_with_blinding(keys.pub, m, phi);
      const bool success = ntru_decrypt(keys.priv, e) == m;
      ok += success;
      // Success exactly when p phi g + f m lies inside the centered window.
      const RingElement a =
          ring_add(ring_scale(ring_mul(phi, keys.g), 3), ring_mul(keys.priv.f, m));
      bool inside = true;
      for (Coeff c : a.coeffs()) inside = inside && c > -32 && c <= 32;
      EXPECT_EQ(success, inside);
    }
  }
  EXPECT_EQ(trials, 1000);
  EXPECT_GE(ok, 990);
}

TEST(NtruDecrypt, RejectsWrongLength) {
  Rng rng(5);
  const NtruKeyPair keys = ntru_keygen(kParams, rng);
  EXPECT_THROW(ntru_decrypt(keys.priv, RingElement(5)), Error);
}

}  // namespace
}  // namespace nnru::ntru
