// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nnru/ring.hpp"

namespace nnru {

// Counts scalar (ring) multiplications performed by a matrix product.
struct OpCounter {
  std::uint64_t ring_muls = 0;
};

// k x k matrix over Z[X]/(X^n - 1), entries stored row-major.
class MatrixElement {
 public:
  MatrixElement() = default;
  MatrixElement(std::size_t k, std::size_t n);
  MatrixElement(std::size_t k, std::vector<RingElement> entries);

  static MatrixElement zero(std::size_t k, std::size_t n) { return {k, n}; }
  static MatrixElement identity(std::size_t k, std::size_t n);
  // Every coefficient of every entry equal to c.
  static MatrixElement filled(std::size_t k, std::size_t n, Coeff c);

  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t coeff_count() const noexcept { return k_ * k_ * n_; }

  const RingElement& at(std::size_t row, std::size_t col) const {
    return entries_[row * k_ + col];
  }
  RingElement& at(std::size_t row, std::size_t col) {
    return entries_[row * k_ + col];
  }

  const std::vector<RingElement>& entries() const noexcept { return entries_; }
  std::vector<RingElement>& entries() noexcept { return entries_; }

  // Flat view: entry-major, ascending coefficient order.
  std::vector<Coeff> flatten() const;
  static MatrixElement unflatten(std::size_t k, std::size_t n,
                                 const std::vector<Coeff>& flat);

  bool is_zero() const noexcept;

  friend bool operator==(const MatrixElement&, const MatrixElement&) = default;

 private:
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::vector<RingElement> entries_;
};

MatrixElement mat_add(const MatrixElement& a, const MatrixElement& b);
MatrixElement mat_sub(const MatrixElement& a, const MatrixElement& b);
MatrixElement mat_neg(const MatrixElement& a);
MatrixElement mat_scale(const MatrixElement& a, Coeff s);

// Schoolbook product: k^3 ring multiplications.
MatrixElement mat_mul(const MatrixElement& a, const MatrixElement& b,
                      OpCounter* counter = nullptr);

// Strassen recursion down to 1 x 1 blocks; odd sizes are padded with a zero
// row/column at each level. Value is identical to mat_mul.
MatrixElement mat_mul_strassen(const MatrixElement& a, const MatrixElement& b,
                               OpCounter* counter = nullptr);

MatrixElement mat_reduce(const MatrixElement& a, Coeff m, bool centered);

// Two-sided inverse over F_prime[X]/(X^n - 1) by Gauss-Jordan elimination
// with unit pivots. Throws kNotInvertible when some column has no unit pivot.
MatrixElement mat_inverse_mod_prime(const MatrixElement& a, Coeff prime);

// Two-sided inverse modulo 2^e: inverse mod 2, then Newton lifting.
MatrixElement mat_inverse_mod_2e(const MatrixElement& a, unsigned e);

Coeff mat_width_inf(const MatrixElement& a);
bool is_short(const MatrixElement& a, Coeff p);

// sqrt(sum (c - mu)^2) over all n k^2 coefficients, mu their mean.
double mat_centered_l2(const MatrixElement& a);
// Coefficient standard deviation: mat_centered_l2 / sqrt(n k^2).
double mat_coeff_sigma(const MatrixElement& a);

}  // namespace nnru
