// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nnru/matrix.hpp"
#include "nnru/params.hpp"
#include "nnru/scheme.hpp"

namespace nnru::analysis {

using BigInt = boost::multiprecision::cpp_int;

// Runs body(i) for i in [0, count) on up to `jobs` threads. Each trial must
// derive its own randomness from its index.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body);

// ---------------------------------------------------------------------------
// Norm products

struct GammaReport {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t d = 0;
  std::uint32_t trials = 0;
  // gamma-hat = width(M1 M2) / (||M1|| ||M2||), one per trial.
  std::vector<double> samples;
  double min = 0;
  double median = 0;
  double max = 0;
  double gamma1 = 0;  // 1st percentile
  double gamma2 = 0;  // 99th percentile

  std::string to_text() const;
  std::string to_csv() const;
};

// Linear-interpolated percentile (pct in [0, 100]) of unsorted data.
double percentile(std::vector<double> data, double pct);

GammaReport estimate_gamma(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                           std::uint32_t trials, std::uint64_t seed,
                           unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Decryption failures

struct FailureTrial {
  std::uint32_t index = 0;
  Coeff width = 0;            // width of the exact p f phi w + c m g
  bool out_of_window = false;  // some coefficient outside (-q/2, q/2]
  bool decrypted = false;      // decrypt(encrypt(m)) == m
  double sigma = 0;            // coefficient standard deviation of B
};

struct FailureReport {
  Params params;
  BNormPrediction predicted;
  double measured_sigma = 0;  // sqrt of the mean per-trial variance
  std::uint32_t trials = 0;
  std::uint32_t failures = 0;
  // Failures whose width does not exceed q (expected zero).
  std::uint32_t failures_with_small_width = 0;
  // failure <=> out_of_window held on every trial.
  bool equivalence_holds = true;
  std::vector<FailureTrial> per_trial;

  double failure_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(failures) / trials;
  }
  std::string to_text() const;
  std::string to_csv() const;
};

// Exact B = p f phi w + c m g from private values.
MatrixElement exact_decryption_matrix(const Params& params,
                                      const KeyMaterial& material,
                                      const MatrixElement& phi,
                                      const Plaintext& m);

FailureReport measure_failure_rate(const Params& params, std::uint32_t trials,
                                   std::uint64_t seed, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Brute-force search space

// n! / ((n - 2d)! (d!)^2): the size of L(d, d).
BigInt ternary_count(std::uint32_t n, std::uint32_t d);
// n! / ((n - d1 - d2)! d1! d2!): the size of L(d1, d2).
BigInt ternary_count(std::uint32_t n, std::uint32_t d1, std::uint32_t d2);

// [n! / ((n - 2 d_f)! (d_f!)^2)]^(2 k^2)
BigInt key_security(const Params& params);
// [n! / ((n - 2 d_phi)! (d_phi!)^2)]^(2 k^2)
BigInt message_security(const Params& params);

struct SecurityReport {
  Params params;
  BigInt key_count;
  BigInt message_count;
  // floor(sqrt(count)): cost of a meet-in-the-middle search.
  BigInt key_mitm;
  BigInt message_mitm;

  std::string to_text() const;
  std::string to_csv() const;
};

SecurityReport security_report(const Params& params);

// Size of the space the private matrices f and g are drawn from.
BigInt key_matrix_space(const Params& params);

struct BruteForceResult {
  // Candidates g with h g mod q short, and f with f H mod q short.
  std::vector<MatrixElement> g_candidates;
  std::vector<MatrixElement> f_candidates;
  std::uint64_t searched = 0;
};

// Enumerates every candidate of the private-key shape. Throws
// kSearchSpaceTooLarge when the space exceeds `budget`.
BruteForceResult brute_force_attack(const PublicKey& pub, std::uint64_t budget);

// ---------------------------------------------------------------------------
// Multiple transmission

struct MtaResult {
  // deltas[i] = phi_{i+1} - phi_0 recovered from (e_{i+1} - e_0) h^-1 p^-1.
  std::vector<MatrixElement> deltas;
  // Delta coefficients all within [-2, 2], i.e. a plausible difference of
  // two ternary matrices.
  std::vector<bool> clean;

  bool all_clean() const;
};

// Throws kAttackInapplicable when h is not invertible mod q, kParameter when
// fewer than two ciphertexts are supplied.
MtaResult multiple_transmission_attack(std::span<const Ciphertext> ciphertexts,
                                       const MatrixElement& h,
                                       const Params& params);

// ---------------------------------------------------------------------------
// Shift-module experiment

struct ShiftModuleResult {
  bool solvable = false;
  std::size_t kernel_dimension = 0;
  std::optional<MatrixElement> solution;  // centered mod prime
  double centered_l2 = 0;
  double sigma = 0;             // centered_l2 / sqrt(n k^2)
  double uniform_baseline = 0;  // prime / sqrt(12)
  bool is_short = false;        // sigma <= 0.3 * baseline
  bool near_uniform = false;    // |sigma - baseline| <= 0.2 * baseline

  static constexpr double kShortFraction = 0.3;
  static constexpr double kUniformTolerance = 0.2;
};

// Solves S h = target over F_prime[X]/(X^n - 1) through the n k^2 x n k^2
// matrix whose rows are the images of the coefficient-shift basis of S. When
// the solution is not unique and the kernel has dimension <= 2, the shortest
// member of the solution coset is returned.
ShiftModuleResult shift_module_solution(const MatrixElement& h,
                                        const MatrixElement& target,
                                        std::uint32_t prime);

struct MembershipReport {
  Params params;
  std::uint32_t prime = 0;
  std::uint32_t trials = 0;
  std::uint32_t solvable = 0;
  std::uint32_t short_count = 0;
  std::uint32_t near_uniform_count = 0;
  double uniform_baseline = 0;
  std::vector<double> sigmas;  // NaN for unsolvable trials

  std::string to_text() const;
  std::string to_csv() const;
};

// Per trial: fresh keys, target = f h g, solve S h = target mod prime.
MembershipReport membership_experiment(const Params& params,
                                       std::uint32_t prime,
                                       std::uint32_t trials,
                                       std::uint64_t seed, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Performance comparison

struct SizeTable {
  double plaintext_bits = 0;
  double ciphertext_bits = 0;
  double message_expansion = 0;  // log_p q
  double private_key_bits = 0;
  double public_key_bits = 0;
};

SizeTable nnru_sizes(const Params& params);
SizeTable ntru_sizes(std::uint32_t N, std::uint32_t p, std::uint32_t q);

struct BenchmarkReport {
  Params params;
  std::uint32_t ntru_N = 0;
  std::uint32_t ntru_d = 0;
  std::uint32_t trials = 0;
  SizeTable nnru;
  SizeTable ntru;
  // Ring multiplications per k x k product.
  std::uint64_t schoolbook_ring_muls = 0;
  std::uint64_t strassen_ring_muls = 0;
  // Coefficient multiplications per encryption.
  std::uint64_t nnru_encrypt_coeff_muls = 0;
  std::uint64_t ntru_encrypt_coeff_muls = 0;
  // Median seconds per operation.
  double nnru_keygen_s = 0;
  double nnru_encrypt_s = 0;
  double nnru_encrypt_strassen_s = 0;
  double nnru_decrypt_s = 0;
  double ntru_keygen_s = 0;
  double ntru_encrypt_s = 0;
  double ntru_decrypt_s = 0;

  double encrypt_speedup() const {
    return nnru_encrypt_s > 0 ? ntru_encrypt_s / nnru_encrypt_s : 0.0;
  }
  std::string to_text() const;
  std::string to_csv() const;
};

BenchmarkReport benchmark_compare(const Params& params, std::uint32_t trials,
                                  std::uint64_t seed);

}  // namespace nnru::analysis

#include "nnru/parallel.inl"
