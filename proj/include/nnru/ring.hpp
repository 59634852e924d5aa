// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace nnru {

using Coeff = std::int64_t;

// Element of the convolution ring Z[X]/(X^n - 1). Coefficient i is the
// coefficient of X^i. Arithmetic is exact; reduction only happens when asked.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(std::size_t n) : coeffs_(n, 0) {}
  explicit RingElement(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}
  RingElement(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) {}

  static RingElement zero(std::size_t n) { return RingElement(n); }
  static RingElement one(std::size_t n);
  static RingElement constant(std::size_t n, Coeff c);

  std::size_t degree_bound() const noexcept { return coeffs_.size(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Coeff operator[](std::size_t i) const { return coeffs_[i]; }
  Coeff& operator[](std::size_t i) { return coeffs_[i]; }

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  std::span<Coeff> coeffs() noexcept { return coeffs_; }

  bool is_zero() const noexcept;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_scale(const RingElement& a, Coeff s);

// Circular convolution: result[t] = sum over i + j = t (mod n) of a[i] * b[j].
RingElement ring_mul(const RingElement& a, const RingElement& b);

// Accumulates a * b into acc (acc += a * b) without a temporary.
void ring_mul_add(RingElement& acc, const RingElement& a, const RingElement& b);

// Non-negative residues in [0, m).
RingElement reduce_mod(const RingElement& a, Coeff m);

// Residues in (-m/2, m/2] for even m, [-(m-1)/2, (m-1)/2] for odd m.
RingElement reduce_centered(const RingElement& a, Coeff m);

Coeff mod_floor(Coeff c, Coeff m);
Coeff mod_centered(Coeff c, Coeff m);

// Inverse in F_prime[X]/(X^n - 1) via extended Euclid against X^n - 1.
// Throws Error(kNotInvertible) when gcd(a, X^n - 1) is not a unit.
RingElement poly_inverse_mod_prime(const RingElement& a, Coeff prime);

// Inverse modulo 2^e: invert mod 2, then Newton-lift b <- b (2 - a b).
RingElement poly_inverse_mod_2e(const RingElement& a, unsigned e);

// Max coefficient minus min coefficient.
Coeff poly_width_inf(const RingElement& a);

// Uncentered Euclidean norm of the coefficient vector.
double poly_l2_norm(const RingElement& a);

// Modular inverse of a scalar; throws kNotInvertible when gcd(a, m) != 1.
Coeff scalar_inverse_mod(Coeff a, Coeff m);

bool is_prime(Coeff v);

}  // namespace nnru
