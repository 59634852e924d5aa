// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nnru {

// Scheme parameters. q must be a power of two; d_* are ternary weights for
// the sample spaces of f and g (d_f), w (d_w), c (d_c) and phi (d_phi).
struct Params {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::uint32_t d_f = 0;
  std::uint32_t d_w = 0;
  std::uint32_t d_c = 0;
  std::uint32_t d_phi = 0;

  // log2(q); meaningful only when q is a power of two.
  unsigned q_bits() const;
  std::uint64_t coeff_count() const {
    return static_cast<std::uint64_t>(n) * k * k;
  }
  // Same ring and moduli; weights are not part of the identity of a key.
  bool same_ring(const Params& other) const {
    return n == other.n && k == other.k && p == other.p && q == other.q;
  }

  friend bool operator==(const Params&, const Params&) = default;
};

// Named presets: "toy-micro", "toy", "small", "reference".
std::optional<Params> find_preset(std::string_view name);
std::vector<std::string> preset_names();
// Preset whose (n, k, p, q) matches, used to recover weights for parsed keys.
std::optional<Params> preset_for_ring(std::uint32_t n, std::uint32_t k,
                                      std::uint32_t p, std::uint32_t q);

// Width estimate for B = p f phi w + c m g from expected norms of the
// sampled matrices: ||X|| = sqrt(2 d_X k^2) for ternary X and
// ||m||^2 = n k^2 (p^2 - 1) / 12 for a uniform message, combined as
//   ||B||^2 ~ p^2 ||f||^2 ||phi||^2 ||w||^2 + ||c||^2 ||m||^2 ||g||^2.
struct BNormPrediction {
  double norm_f = 0;
  double norm_g = 0;
  double norm_w = 0;
  double norm_c = 0;
  double norm_phi = 0;
  double norm_m = 0;
  double blinding_term = 0;  // p^2 ||f||^2 ||phi||^2 ||w||^2
  double message_term = 0;   // ||c||^2 ||m||^2 ||g||^2
  double b_norm = 0;
  double sigma = 0;  // b_norm / sqrt(n k^2)
  // Same estimate with each k x k product contributing ||X|| ||Y|| / sqrt(k)
  // (every entry of a product sums k ring products of entries carrying
  // 1/k^2 of the matrix norm each).
  double sigma_product_corrected = 0;
};

BNormPrediction predict_b_norm(const Params& params);

struct ValidationReport {
  Params params;
  std::vector<std::string> warnings;
  BNormPrediction prediction;
  double margin = 0;  // q / (2 sigma)
  bool failure_prone = false;  // margin < kMinMargin

  static constexpr double kMinMargin = 5.0;

  std::string to_text() const;
};

// Throws Error(kParameter) on hard violations: q not a power of two in
// [2^2, 2^16], p not an odd prime, gcd(p, q) != 1, weights too large for n,
// n or k zero.
ValidationReport validate_params(const Params& params);

std::string to_string(const Params& params);

}  // namespace nnru
