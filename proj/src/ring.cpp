// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include "nnru/ring.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nnru/error.hpp"

namespace nnru {
namespace {

void require_same_n(const RingElement& a, const RingElement& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimension,
                "ring elements of different degree bound: " +
                    std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
  }
}

void require_modulus(Coeff m) {
  if (m < 2) {
    throw Error(ErrorCode::kParameter,
                "modulus must be at least 2, got " + std::to_string(m));
  }
}

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using FpPoly = std::vector<Coeff>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, Coeff p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  trim(r);
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, Coeff p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_floor(r[i] - b[i], p);
  trim(r);
  return r;
}

// a = quot * b + rem over F_p; b nonzero.
void fp_divmod(const FpPoly& a, const FpPoly& b, Coeff p, FpPoly& quot,
               FpPoly& rem) {
  rem = a;
  quot.clear();
  if (degree(a) < degree(b)) return;
  quot.assign(a.size() - b.size() + 1, 0);
  const Coeff lead_inv = scalar_inverse_mod(b.back(), p);
  while (!rem.empty() && degree(rem) >= degree(b)) {
    const int shift = degree(rem) - degree(b);
    const Coeff factor = rem.back() * lead_inv % p;
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rem[shift + i] = mod_floor(rem[shift + i] - factor * b[i], p);
    }
    trim(rem);
  }
}

}  // namespace

RingElement RingElement::one(std::size_t n) { return constant(n, 1); }

RingElement RingElement::constant(std::size_t n, Coeff c) {
  RingElement r(n);
  if (n > 0) r[0] = c;
  return r;
}

bool RingElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Coeff c) { return c == 0; });
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  require_same_n(a, b);
  RingElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
  require_same_n(a, b);
  RingElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RingElement ring_neg(const RingElement& a) { return ring_scale(a, -1); }

RingElement ring_scale(const RingElement& a, Coeff s) {
  RingElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

void ring_mul_add(RingElement& acc, const RingElement& a,
                  const RingElement& b) {
  require_same_n(a, b);
  require_same_n(acc, a);
  const std::size_t n = a.size();
  const Coeff* bp = b.coeffs().data();
  Coeff* out = acc.coeffs().data();
  // Split the wrap-around so the inner loops carry no modulo.
  for (std::size_t i = 0; i < n; ++i) {
    const Coeff ai = a[i];
    const std::size_t head = n - i;
    for (std::size_t j = 0; j < head; ++j) out[i + j] += ai * bp[j];
    for (std::size_t j = head; j < n; ++j) out[i + j - n] += ai * bp[j];
  }
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  require_same_n(a, b);
  RingElement r(a.size());
  ring_mul_add(r, a, b);
  return r;
}

Coeff mod_floor(Coeff c, Coeff m) {
  Coeff r = c % m;
  return r < 0 ? r + m : r;
}

Coeff mod_centered(Coeff c, Coeff m) {
  Coeff r = mod_floor(c, m);
  // Upper half moves down; for even m the value m/2 stays.
  return r > m / 2 ? r - m : r;
}

RingElement reduce_mod(const RingElement& a, Coeff m) {
  require_modulus(m);
  RingElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i], m);
  return r;
}

RingElement reduce_centered(const RingElement& a, Coeff m) {
  require_modulus(m);
  RingElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_centered(a[i], m);
  return r;
}

Coeff scalar_inverse_mod(Coeff a, Coeff m) {
  Coeff old_r = mod_floor(a, m), r = m;
  Coeff old_s = 1, s = 0;
  while (r != 0) {
    const Coeff quotient = old_r / r;
    Coeff t = old_r - quotient * r;
    old_r = r;
    r = t;
    t = old_s - quotient * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::kNotInvertible,
                std::to_string(a) + " has no inverse mod " + std::to_string(m));
  }
  return mod_floor(old_s, m);
}

bool is_prime(Coeff v) {
  if (v < 2) return false;
  for (Coeff d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

RingElement poly_inverse_mod_prime(const RingElement& a, Coeff prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::kParameter,
                std::to_string(prime) + " is not prime");
  }
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorCode::kDimension, "empty ring element");

  FpPoly modulus(n + 1, 0);
  modulus[0] = prime - 1;  // X^n - 1
  modulus[n] = 1;
  FpPoly value(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : value) c = mod_floor(c, prime);
  trim(value);

  // Invariant: s_i * a = r_i (mod X^n - 1).
  FpPoly r0 = modulus, r1 = value;
  FpPoly s0, s1{1};
  FpPoly quot, rem;
  while (!r1.empty()) {
    fp_divmod(r0, r1, prime, quot, rem);
    FpPoly s2 = fp_sub(s0, fp_mul(quot, s1, prime), prime);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) {
    throw Error(ErrorCode::kNotInvertible,
                "polynomial shares a factor with X^" + std::to_string(n) +
                    " - 1 mod " + std::to_string(prime));
  }
  const Coeff scale = scalar_inverse_mod(r0[0], prime);
  // s0 may have degree >= n only transiently; reduce by X^n = 1.
  RingElement result(n);
  for (std::size_t i = 0; i < s0.size(); ++i) {
    result[i % n] = (result[i % n] + s0[i] * scale) % prime;
  }
  return result;
}

RingElement poly_inverse_mod_2e(const RingElement& a, unsigned e) {
  // Coefficient products stay below n * 2^(2e); 24 bits leaves ample room.
  if (e < 1 || e > 24) {
    throw Error(ErrorCode::kParameter,
                "exponent out of range: " + std::to_string(e));
  }
  RingElement b = poly_inverse_mod_prime(a, 2);
  unsigned bits = 1;
  while (bits < e) {
    bits = std::min(2 * bits, e);
    const Coeff m = Coeff{1} << bits;
    // b <- b (2 - a b) mod 2^bits
    RingElement ab = reduce_mod(ring_mul(reduce_mod(a, m), b), m);
    RingElement correction = ring_neg(ab);
    correction[0] += 2;
    b = reduce_mod(ring_mul(b, reduce_mod(correction, m)), m);
  }
  return reduce_mod(b, Coeff{1} << e);
}

Coeff poly_width_inf(const RingElement& a) {
  if (a.size() == 0) return 0;
  const auto [lo, hi] = std::minmax_element(a.coeffs().begin(), a.coeffs().end());
  return *hi - *lo;
}

double poly_l2_norm(const RingElement& a) {
  double sum = 0;
  for (Coeff c : a.coeffs()) sum += static_cast<double>(c) * static_cast<double>(c);
  return std::sqrt(sum);
}

}  // namespace nnru
