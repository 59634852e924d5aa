// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include "nnru/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "nnru/error.hpp"

namespace nnru {
namespace {

void require_same_shape(const MatrixElement& a, const MatrixElement& b) {
  if (a.k() != b.k() || a.n() != b.n()) {
    throw Error(ErrorCode::kDimension,
                "matrix shapes differ: (k=" + std::to_string(a.k()) +
                    ", n=" + std::to_string(a.n()) + ") vs (k=" +
                    std::to_string(b.k()) + ", n=" + std::to_string(b.n()) +
                    ")");
  }
}

using Block = std::vector<RingElement>;  // s x s, row-major

Block block_add(const Block& a, const Block& b) {
  Block r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(ring_add(a[i], b[i]));
  return r;
}

Block block_sub(const Block& a, const Block& b) {
  Block r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(ring_sub(a[i], b[i]));
  return r;
}

Block quadrant(const Block& m, std::size_t s, std::size_t qr, std::size_t qc) {
  const std::size_t h = s / 2;
  Block r;
  r.reserve(h * h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      r.push_back(m[(qr * h + i) * s + qc * h + j]);
    }
  }
  return r;
}

Block strassen(const Block& a, const Block& b, std::size_t s, std::size_t n,
               OpCounter* counter) {
  if (s == 1) {
    if (counter) ++counter->ring_muls;
    return {ring_mul(a[0], b[0])};
  }
  if (s % 2 == 1) {
    const std::size_t t = s + 1;
    Block pa(t * t, RingElement(n)), pb(t * t, RingElement(n));
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        pa[i * t + j] = a[i * s + j];
        pb[i * t + j] = b[i * s + j];
      }
    }
    Block pr = strassen(pa, pb, t, n, counter);
    Block r;
    r.reserve(s * s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) r.push_back(std::move(pr[i * t + j]));
    }
    return r;
  }
  const std::size_t h = s / 2;
  const Block a11 = quadrant(a, s, 0, 0), a12 = quadrant(a, s, 0, 1);
  const Block a21 = quadrant(a, s, 1, 0), a22 = quadrant(a, s, 1, 1);
  const Block b11 = quadrant(b, s, 0, 0), b12 = quadrant(b, s, 0, 1);
  const Block b21 = quadrant(b, s, 1, 0), b22 = quadrant(b, s, 1, 1);

  const Block m1 = strassen(block_add(a11, a22), block_add(b11, b22), h, n, counter);
  const Block m2 = strassen(block_add(a21, a22), b11, h, n, counter);
  const Block m3 = strassen(a11, block_sub(b12, b22), h, n, counter);
  const Block m4 = strassen(a22, block_sub(b21, b11), h, n, counter);
  const Block m5 = strassen(block_add(a11, a12), b22, h, n, counter);
  const Block m6 = strassen(block_sub(a21, a11), block_add(b11, b12), h, n, counter);
  const Block m7 = strassen(block_sub(a12, a22), block_add(b21, b22), h, n, counter);

  const Block c11 = block_add(block_sub(block_add(m1, m4), m5), m7);
  const Block c12 = block_add(m3, m5);
  const Block c21 = block_add(m2, m4);
  const Block c22 = block_add(block_add(block_sub(m1, m2), m3), m6);

  Block r(s * s);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      r[i * s + j] = c11[i * h + j];
      r[i * s + h + j] = c12[i * h + j];
      r[(h + i) * s + j] = c21[i * h + j];
      r[(h + i) * s + h + j] = c22[i * h + j];
    }
  }
  return r;
}

RingElement mul_mod(const RingElement& a, const RingElement& b, Coeff m) {
  return reduce_mod(ring_mul(a, b), m);
}

std::optional<RingElement> try_unit_inverse(const RingElement& a, Coeff prime) {
  if (a.is_zero()) return std::nullopt;
  try {
    return poly_inverse_mod_prime(a, prime);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotInvertible) return std::nullopt;
    throw;
  }
}

bool is_identity_mod(const MatrixElement& a, Coeff m) {
  return mat_reduce(a, m, false) == MatrixElement::identity(a.k(), a.n());
}

}  // namespace

MatrixElement::MatrixElement(std::size_t k, std::size_t n)
    : k_(k), n_(n), entries_(k * k, RingElement(n)) {}

MatrixElement::MatrixElement(std::size_t k, std::vector<RingElement> entries)
    : k_(k), entries_(std::move(entries)) {
  if (entries_.size() != k * k) {
    throw Error(ErrorCode::kDimension,
                "expected " + std::to_string(k * k) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  n_ = entries_.empty() ? 0 : entries_[0].size();
  for (const auto& e : entries_) {
    if (e.size() != n_) {
      throw Error(ErrorCode::kDimension, "matrix entries of different length");
    }
  }
}

MatrixElement MatrixElement::identity(std::size_t k, std::size_t n) {
  MatrixElement r(k, n);
  for (std::size_t i = 0; i < k; ++i) r.at(i, i) = RingElement::one(n);
  return r;
}

MatrixElement MatrixElement::filled(std::size_t k, std::size_t n, Coeff c) {
  MatrixElement r(k, n);
  for (auto& e : r.entries_) {
    for (auto& v : e.coeffs()) v = c;
  }
  return r;
}

std::vector<Coeff> MatrixElement::flatten() const {
  std::vector<Coeff> flat;
  flat.reserve(coeff_count());
  for (const auto& e : entries_) {
    flat.insert(flat.end(), e.coeffs().begin(), e.coeffs().end());
  }
  return flat;
}

MatrixElement MatrixElement::unflatten(std::size_t k, std::size_t n,
                                       const std::vector<Coeff>& flat) {
  if (flat.size() != k * k * n) {
    throw Error(ErrorCode::kDimension, "flat coefficient vector has wrong length");
  }
  MatrixElement r(k, n);
  for (std::size_t e = 0; e < k * k; ++e) {
    std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(e * n), n,
                r.entries_[e].coeffs().begin());
  }
  return r;
}

bool MatrixElement::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const RingElement& e) { return e.is_zero(); });
}

MatrixElement mat_add(const MatrixElement& a, const MatrixElement& b) {
  require_same_shape(a, b);
  MatrixElement r(a.k(), a.n());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    r.entries()[i] = ring_add(a.entries()[i], b.entries()[i]);
  }
  return r;
}

MatrixElement mat_sub(const MatrixElement& a, const MatrixElement& b) {
  require_same_shape(a, b);
  MatrixElement r(a.k(), a.n());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    r.entries()[i] = ring_sub(a.entries()[i], b.entries()[i]);
  }
  return r;
}

MatrixElement mat_neg(const MatrixElement& a) { return mat_scale(a, -1); }

MatrixElement mat_scale(const MatrixElement& a, Coeff s) {
  MatrixElement r(a.k(), a.n());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    r.entries()[i] = ring_scale(a.entries()[i], s);
  }
  return r;
}

MatrixElement mat_mul(const MatrixElement& a, const MatrixElement& b,
                      OpCounter* counter) {
  require_same_shape(a, b);
  const std::size_t k = a.k();
  MatrixElement r(k, a.n());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      RingElement& acc = r.at(i, j);
      for (std::size_t l = 0; l < k; ++l) ring_mul_add(acc, a.at(i, l), b.at(l, j));
    }
  }
  if (counter) counter->ring_muls += k * k * k;
  return r;
}

MatrixElement mat_mul_strassen(const MatrixElement& a, const MatrixElement& b,
                               OpCounter* counter) {
  require_same_shape(a, b);
  if (a.k() == 0) return a;
  return MatrixElement(a.k(),
                       strassen(a.entries(), b.entries(), a.k(), a.n(), counter));
}

MatrixElement mat_reduce(const MatrixElement& a, Coeff m, bool centered) {
  MatrixElement r(a.k(), a.n());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    r.entries()[i] = centered ? reduce_centered(a.entries()[i], m)
                              : reduce_mod(a.entries()[i], m);
  }
  return r;
}

MatrixElement mat_inverse_mod_prime(const MatrixElement& a, Coeff prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::kParameter, std::to_string(prime) + " is not prime");
  }
  const std::size_t k = a.k();
  const std::size_t n = a.n();
  MatrixElement work = mat_reduce(a, prime, false);
  MatrixElement inv = MatrixElement::identity(k, n);

  for (std::size_t col = 0; col < k; ++col) {
    // First row at or below the diagonal whose entry is a unit.
    std::optional<RingElement> pivot_inv;
    std::size_t pivot = col;
    for (; pivot < k; ++pivot) {
      pivot_inv = try_unit_inverse(work.at(pivot, col), prime);
      if (pivot_inv) break;
    }
    if (!pivot_inv) {
      throw Error(ErrorCode::kNotInvertible,
                  "no unit pivot in column " + std::to_string(col) + " mod " +
                      std::to_string(prime));
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < k; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      work.at(col, j) = mul_mod(work.at(col, j), *pivot_inv, prime);
      inv.at(col, j) = mul_mod(inv.at(col, j), *pivot_inv, prime);
    }
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || work.at(row, col).is_zero()) continue;
      const RingElement factor = work.at(row, col);
      for (std::size_t j = 0; j < k; ++j) {
        work.at(row, j) = reduce_mod(
            ring_sub(work.at(row, j), ring_mul(factor, work.at(col, j))), prime);
        inv.at(row, j) = reduce_mod(
            ring_sub(inv.at(row, j), ring_mul(factor, inv.at(col, j))), prime);
      }
    }
  }

  if (!is_identity_mod(mat_mul(a, inv), prime) ||
      !is_identity_mod(mat_mul(inv, a), prime)) {
    throw Error(ErrorCode::kNotInvertible, "inverse failed two-sided check");
  }
  return inv;
}

MatrixElement mat_inverse_mod_2e(const MatrixElement& a, unsigned e) {
  if (e < 1 || e > 24) {
    throw Error(ErrorCode::kParameter,
                "exponent out of range: " + std::to_string(e));
  }
  const std::size_t k = a.k();
  const std::size_t n = a.n();
  MatrixElement b = mat_inverse_mod_prime(a, 2);
  const MatrixElement two = mat_scale(MatrixElement::identity(k, n), 2);
  unsigned bits = 1;
  while (bits < e) {
    bits = std::min(2 * bits, e);
    const Coeff m = Coeff{1} << bits;
    // b <- b (2I - a b) mod 2^bits
    const MatrixElement ab = mat_reduce(mat_mul(mat_reduce(a, m, false), b), m, false);
    b = mat_reduce(mat_mul(b, mat_reduce(mat_sub(two, ab), m, false)), m, false);
  }
  const Coeff q = Coeff{1} << e;
  b = mat_reduce(b, q, false);
  if (!is_identity_mod(mat_mul(a, b), q) || !is_identity_mod(mat_mul(b, a), q)) {
    throw Error(ErrorCode::kNotInvertible, "lifted inverse failed two-sided check");
  }
  return b;
}

Coeff mat_width_inf(const MatrixElement& a) {
  bool any = false;
  Coeff lo = 0, hi = 0;
  for (const auto& e : a.entries()) {
    for (Coeff c : e.coeffs()) {
      if (!any) {
        lo = hi = c;
        any = true;
      }
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  return hi - lo;
}

bool is_short(const MatrixElement& a, Coeff p) { return mat_width_inf(a) <= p; }

double mat_centered_l2(const MatrixElement& a) {
  const std::size_t count = a.coeff_count();
  if (count == 0) return 0;
  double sum = 0;
  for (const auto& e : a.entries()) {
    for (Coeff c : e.coeffs()) sum += static_cast<double>(c);
  }
  const double mean = sum / static_cast<double>(count);
  double ss = 0;
  for (const auto& e : a.entries()) {
    for (Coeff c : e.coeffs()) {
      const double d = static_cast<double>(c) - mean;
      ss += d * d;
    }
  }
  return std::sqrt(ss);
}

double mat_coeff_sigma(const MatrixElement& a) {
  const std::size_t count = a.coeff_count();
  return count == 0 ? 0.0 : mat_centered_l2(a) / std::sqrt(static_cast<double>(count));
}

}  // namespace nnru
