// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include "nnru/params.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "nnru/error.hpp"
#include "nnru/ring.hpp"

namespace nnru {
namespace {

struct NamedPreset {
  const char* name;
  Params params;
};

// Weights are kept well below n/p so that q / (2 sigma) stays workable.
constexpr std::array<NamedPreset, 4> kPresets{{
    {"toy-micro", {5, 2, 3, 64, 1, 1, 1, 1}},
    {"toy", {7, 2, 3, 512, 2, 2, 2, 2}},
    {"small", {29, 3, 3, 1024, 4, 4, 4, 4}},
    {"reference", {59, 3, 3, 2048, 6, 6, 6, 6}},
}};

double ternary_matrix_norm(std::uint32_t d, std::uint32_t k) {
  return std::sqrt(2.0 * d * k * k);
}

void check_weight(const char* name, std::uint32_t d, std::uint32_t slots,
                  std::uint32_t n) {
  if (slots > n) {
    throw Error(ErrorCode::kParameter,
                std::string(name) + "=" + std::to_string(d) +
                    " needs " + std::to_string(slots) +
                    " nonzero positions but n=" + std::to_string(n));
  }
}

}  // namespace

unsigned Params::q_bits() const {
  return q == 0 ? 0 : static_cast<unsigned>(std::countr_zero(q));
}

std::optional<Params> find_preset(std::string_view name) {
  for (const auto& preset : kPresets) {
    if (name == preset.name) return preset.params;
  }
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& preset : kPresets) names.emplace_back(preset.name);
  return names;
}

std::optional<Params> preset_for_ring(std::uint32_t n, std::uint32_t k,
                                      std::uint32_t p, std::uint32_t q) {
  for (const auto& preset : kPresets) {
    const Params& pr = preset.params;
    if (pr.n == n && pr.k == k && pr.p == p && pr.q == q) return pr;
  }
  return std::nullopt;
}

BNormPrediction predict_b_norm(const Params& params) {
  BNormPrediction out;
  const double p = params.p;
  const double count = static_cast<double>(params.coeff_count());
  out.norm_f = ternary_matrix_norm(params.d_f, params.k);
  out.norm_g = out.norm_f;
  out.norm_w = ternary_matrix_norm(params.d_w, params.k);
  out.norm_c = ternary_matrix_norm(params.d_c, params.k);
  out.norm_phi = ternary_matrix_norm(params.d_phi, params.k);
  out.norm_m = std::sqrt(count * (p * p - 1.0) / 12.0);

  const auto sq = [](double v) { return v * v; };
  out.blinding_term = p * p * sq(out.norm_f) * sq(out.norm_phi) * sq(out.norm_w);
  out.message_term = sq(out.norm_c) * sq(out.norm_m) * sq(out.norm_g);
  out.b_norm = std::sqrt(out.blinding_term + out.message_term);
  out.sigma = count > 0 ? out.b_norm / std::sqrt(count) : 0.0;
  out.sigma_product_corrected = params.k > 0 ? out.sigma / params.k : 0.0;
  return out;
}

ValidationReport validate_params(const Params& params) {
  if (params.n == 0 || params.k == 0) {
    throw Error(ErrorCode::kParameter, "n and k must be positive");
  }
  if (params.q < 4 || !std::has_single_bit(params.q) || params.q > (1u << 16)) {
    throw Error(ErrorCode::kParameter,
                "q must be a power of two between 2^2 and 2^16, got " +
                    std::to_string(params.q));
  }
  if (std::gcd(params.p, params.q) != 1) {
    throw Error(ErrorCode::kParameter,
                "p and q must be coprime: gcd(" + std::to_string(params.p) +
                    ", " + std::to_string(params.q) + ") = " +
                    std::to_string(std::gcd(params.p, params.q)));
  }
  if (!is_prime(params.p)) {
    throw Error(ErrorCode::kParameter,
                "p must be prime, got " + std::to_string(params.p));
  }
  if (params.p >= params.q) {
    throw Error(ErrorCode::kParameter, "p must be smaller than q");
  }
  // Private-shape matrices put L(d + 1, d) on the diagonal.
  check_weight("d_f", params.d_f, 2 * params.d_f + 1, params.n);
  check_weight("d_w", params.d_w, 2 * params.d_w + 1, params.n);
  check_weight("d_c", params.d_c, 2 * params.d_c + 1, params.n);
  check_weight("d_phi", params.d_phi, 2 * params.d_phi, params.n);

  ValidationReport report;
  report.params = params;
  if (params.p != 3) {
    report.warnings.push_back("p=" + std::to_string(params.p) +
                              ": message byte encoding requires p=3");
  }
  const unsigned bits = params.q_bits();
  if (bits < 8 || bits > 11) {
    report.warnings.push_back("q=2^" + std::to_string(bits) +
                              " is outside the usual 2^8..2^11 range");
  }
  report.prediction = predict_b_norm(params);
  report.margin = report.prediction.sigma > 0
                      ? params.q / (2.0 * report.prediction.sigma)
                      : std::numeric_limits<double>::infinity();
  report.failure_prone = report.margin < ValidationReport::kMinMargin;
  if (report.failure_prone) {
    std::ostringstream os;
    os << "margin q/(2 sigma) = " << report.margin << " is below "
       << ValidationReport::kMinMargin << "; decryption failures likely";
    report.warnings.push_back(os.str());
  }
  return report;
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  os << "params: " << to_string(params) << "\n";
  os << "predicted ||B||: " << prediction.b_norm << "\n";
  os << "predicted sigma: " << prediction.sigma << "\n";
  os << "margin q/(2 sigma): " << margin
     << (failure_prone ? "  [failure-prone]" : "  [ok]") << "\n";
  os << "product-corrected sigma: " << prediction.sigma_product_corrected
     << " (margin " << params.q / (2.0 * prediction.sigma_product_corrected)
     << ")\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string to_string(const Params& params) {
  std::ostringstream os;
  os << "n=" << params.n << " k=" << params.k << " p=" << params.p
     << " q=" << params.q << " d_f=" << params.d_f << " d_w=" << params.d_w
     << " d_c=" << params.d_c << " d_phi=" << params.d_phi;
  return os.str();
}

}  // namespace nnru
