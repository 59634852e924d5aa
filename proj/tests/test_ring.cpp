// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nnru/error.hpp"
#include "nnru/ring.hpp"
#include "nnru/rng.hpp"
#include "nnru/scheme.hpp"
#include "oracles.hpp"

namespace nnru {
namespace {

TEST(RingMul, SmallHandComputedProduct) {
  // (1 + X)(1 + X^2) in Z[X]/(X^3 - 1) = 1 + X + X^2 + X^3 = 2 + X + X^2.
  EXPECT_EQ(ring_mul({1, 1, 0}, {1, 0, 1}), (RingElement{2, 1, 1}));
  // X^2 * X^2 = X^4 = X.
  EXPECT_EQ(ring_mul({0, 0, 1}, {0, 0, 1}), (RingElement{0, 1, 0}));
}

TEST(RingMul, MatchesNaiveConvolution) {
  std::mt19937_64 gen(1);
  for (std::size_t n : {1u, 2u, 3u, 7u, 11u, 64u, 107u}) {
    for (int t = 0; t < 20; ++t) {
      const auto a = oracle::random_poly(n, -1000, 1000, gen);
      const auto b = oracle::random_poly(n, -1000, 1000, gen);
      EXPECT_EQ(oracle::to_poly(ring_mul(oracle::to_ring(a), oracle::to_ring(b))),
                oracle::convolve(a, b))
          << "n=" << n;
    }
  }
}

TEST(RingMul, MulAddAccumulates) {
  std::mt19937_64 gen(2);
  const auto a = oracle::random_poly(13, -5, 5, gen);
  const auto b = oracle::random_poly(13, -5, 5, gen);
  const auto c = oracle::random_poly(13, -5, 5, gen);
  RingElement acc = oracle::to_ring(c);
  ring_mul_add(acc, oracle::to_ring(a), oracle::to_ring(b));
  EXPECT_EQ(acc, ring_add(oracle::to_ring(c), ring_mul(oracle::to_ring(a), oracle::to_ring(b))));
}

TEST(RingMul, RejectsSizeMismatch) {
  try {
    ring_mul({1, 2, 3}, {1, 2});
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimension);
  }
}

TEST(RingProperties, CommutativeAssociativeDistributive) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + gen() % 40;
    const auto a = oracle::to_ring(oracle::random_poly(n, -50, 50, gen));
    const auto b = oracle::to_ring(oracle::random_poly(n, -50, 50, gen));
    const auto c = oracle::to_ring(oracle::random_poly(n, -50, 50, gen));
    EXPECT_EQ(ring_mul(a, b), ring_mul(b, a));
    EXPECT_EQ(ring_mul(ring_mul(a, b), c), ring_mul(a, ring_mul(b, c)));
    EXPECT_EQ(ring_mul(a, ring_add(b, c)), ring_add(ring_mul(a, b), ring_mul(a, c)));
    EXPECT_EQ(ring_mul(a, RingElement::one(n)), a);
    EXPECT_EQ(ring_add(a, ring_neg(a)), RingElement::zero(n));
    EXPECT_EQ(ring_sub(a, b), ring_add(a, ring_neg(b)));
    EXPECT_EQ(ring_scale(a, 3), ring_add(a, ring_add(a, a)));
  }
}

TEST(ModularReduction, CenteredRangeAndCongruence) {
  for (Coeff m : {2, 3, 4, 7, 64, 2048}) {
    for (Coeff v = -3 * m; v <= 3 * m; ++v) {
      const Coeff f = mod_floor(v, m);
      const Coeff c = mod_centered(v, m);
      EXPECT_GE(f, 0);
      EXPECT_LT(f, m);
      EXPECT_GT(c, -m / 2 - (m % 2 ? 1 : 0));
      EXPECT_LE(c, m / 2);
      EXPECT_EQ(oracle::floor_mod(v - f, m), 0);
      EXPECT_EQ(oracle::floor_mod(v - c, m), 0);
    }
  }
  EXPECT_EQ(mod_centered(2, 3), -1);
  EXPECT_EQ(mod_centered(1, 3), 1);
  EXPECT_EQ(mod_centered(32, 64), 32);
  EXPECT_EQ(mod_centered(33, 64), -31);
}

TEST(ModularReduction, ElementwiseOnPolynomials) {
  EXPECT_EQ(reduce_mod({-1, 5, 3}, 3), (RingElement{2, 2, 0}));
  EXPECT_EQ(reduce_centered({-1, 5, 3}, 3), (RingElement{-1, -1, 0}));
}

TEST(Scalars, InverseAndPrimality) {
  for (Coeff m : {3, 7, 257, 1024}) {
    for (Coeff a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      EXPECT_EQ(oracle::floor_mod(a * scalar_inverse_mod(a, m), m), 1);
    }
  }
  EXPECT_THROW(scalar_inverse_mod(4, 8), Error);
  auto trial_division = [](Coeff v) {
    if (v < 2) return false;
    for (Coeff d = 2; d * d <= v; ++d) {
      if (v % d == 0) return false;
    }
    return true;
  };
  for (Coeff v = -2; v < 2000; ++v) EXPECT_EQ(is_prime(v), trial_division(v)) << v;
}

TEST(Norms, WidthAndL2) {
  EXPECT_EQ(poly_width_inf({3, -2, 0, 1}), 5);
  EXPECT_EQ(poly_width_inf({4, 4, 4}), 0);
  EXPECT_DOUBLE_EQ(poly_l2_norm({3, 4, 0}), 5.0);
}

// Inverse modulo a prime: verified by multiplication, never trusted.
TEST(PolyInverse, ModPrimeVerifiedByMultiplication) {
  Rng rng(4);
  int found = 0;
  for (Coeff prime : {3, 5, 257}) {
    for (std::size_t n : {5u, 7u, 11u, 29u, 59u, 107u}) {
      for (int t = 0; t < 5; ++t) {
        const RingElement a = sample_ternary(n, n / 3 + 1, n / 3, rng);
        RingElement inv;
        try {
          inv = poly_inverse_mod_prime(a, prime);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kNotInvertible);
          continue;
        }
        ++found;
        EXPECT_EQ(reduce_mod(ring_mul(a, inv), prime), RingElement::one(n))
            << "prime=" << prime << " n=" << n;
      }
    }
  }
  EXPECT_GT(found, 60);
}

TEST(PolyInverse, ZeroAtOneIsNotInvertible) {
  // a(1) = 0 means (X - 1) divides a, so no inverse exists for any modulus.
  const RingElement a{1, -1, 1, -1, 0, 0, 0};
  for (Coeff prime : {3, 5, 7}) {
    try {
      poly_inverse_mod_prime(a, prime);
      FAIL() << "expected throw";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotInvertible);
    }
  }
  EXPECT_THROW(poly_inverse_mod_2e(a, 9), Error);
}

TEST(PolyInverse, RejectsCompositeModulus) {
  EXPECT_THROW(poly_inverse_mod_prime({1, 1, 0}, 4), Error);
}

TEST(PolyInverse, ModPowerOfTwoVerifiedByMultiplication) {
  Rng rng(5);
  int found = 0;
  for (unsigned e : {1u, 2u, 6u, 9u, 11u, 16u}) {
    const Coeff q = Coeff{1} << e;
    for (std::size_t n : {5u, 7u, 29u, 107u, 251u}) {
      for (int t = 0; t < 4; ++t) {
        const RingElement a = sample_ternary(n, n / 3 + 1, n / 3, rng);
        RingElement inv;
        try {
          inv = poly_inverse_mod_2e(a, e);
        } catch (const Error& err) {
          EXPECT_EQ(err.code(), ErrorCode::kNotInvertible);
          continue;
        }
        ++found;
        EXPECT_EQ(reduce_mod(ring_mul(a, inv), q), RingElement::one(n)) << "e=" << e;
        EXPECT_EQ(reduce_mod(inv, q), inv);
      }
    }
  }
  EXPECT_GT(found, 60);
}

TEST(PolyInverse, ExponentBounds) {
  EXPECT_THROW(poly_inverse_mod_2e({1, 1, 1}, 0), Error);
  EXPECT_THROW(poly_inverse_mod_2e({1, 1, 1}, 25), Error);
}

}  // namespace
}  // namespace nnru
