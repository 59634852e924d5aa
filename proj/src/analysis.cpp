// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include "nnru/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>

#include "nnru/error.hpp"
#include "nnru/ntru.hpp"

namespace nnru::analysis {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kParameter, what);
}

bool in_centered_window(const MatrixElement& m, Coeff q) {
  for (const auto& e : m.entries()) {
    for (Coeff c : e.coeffs()) {
      if (mod_centered(c, q) != c) return false;
    }
  }
  return true;
}

// Every element of L(d1, d2) in Z[X]/(X^n - 1).
std::vector<RingElement> enumerate_ternary(std::size_t n, std::size_t d1,
                                           std::size_t d2) {
  std::vector<RingElement> out;
  RingElement current(n);
  auto place = [&](auto&& self, std::size_t pos, std::size_t ones,
                   std::size_t minus) -> void {
    if (ones == 0 && minus == 0) {
      out.push_back(current);
      return;
    }
    if (pos == n || n - pos < ones + minus) return;
    if (ones > 0) {
      current[pos] = 1;
      self(self, pos + 1, ones - 1, minus);
    }
    if (minus > 0) {
      current[pos] = -1;
      self(self, pos + 1, ones, minus - 1);
    }
    current[pos] = 0;
    self(self, pos + 1, ones, minus);
  };
  place(place, 0, d1, d2);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

double median_of(std::vector<double> v) { return percentile(std::move(v), 50.0); }

// Gaussian elimination over F_prime on an augmented system [A | b]; returns
// false when inconsistent. On success fills a particular solution (free
// variables zero) and a basis of the kernel of A.
bool solve_mod_prime(std::vector<std::vector<Coeff>> a, std::vector<Coeff> b,
                     Coeff prime, std::vector<Coeff>& solution,
                     std::vector<std::vector<Coeff>>& kernel) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    std::swap(b[sel], b[r]);
    const Coeff inv = scalar_inverse_mod(a[r][c], prime);
    for (auto& v : a[r]) v = v * inv % prime;
    b[r] = b[r] * inv % prime;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Coeff factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = mod_floor(a[i][j] - factor * a[r][j], prime);
      }
      b[i] = mod_floor(b[i] - factor * b[r], prime);
    }
    pivot_col_of_row.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return false;
  }
  solution.assign(cols, 0);
  for (std::size_t i = 0; i < r; ++i) solution[pivot_col_of_row[i]] = b[i];
  kernel.clear();
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Coeff> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) {
      v[pivot_col_of_row[i]] = mod_floor(-a[i][f], prime);
    }
    kernel.push_back(std::move(v));
  }
  return true;
}

double centered_sum_squares(const std::vector<Coeff>& v, Coeff prime) {
  double sum = 0, sq = 0;
  for (Coeff c : v) {
    const double x = static_cast<double>(mod_centered(c, prime));
    sum += x;
    sq += x * x;
  }
  return sq - sum * sum / static_cast<double>(v.size());
}

std::string csv_header(const char* kind) {
  return std::string("# nnru-") + kind + "-v1\n";
}

}  // namespace

// ---------------------------------------------------------------------------

double percentile(std::vector<double> data, double pct) {
  if (data.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(data.begin(), data.end());
  const double pos = pct / 100.0 * static_cast<double>(data.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double frac = pos - static_cast<double>(lo);
  return data[lo] + (data[hi] - data[lo]) * frac;
}

GammaReport estimate_gamma(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                           std::uint32_t trials, std::uint64_t seed,
                           unsigned jobs) {
  require(trials >= 100, "estimate_gamma needs at least 100 trials");
  require(n > 0 && k > 0, "n and k must be positive");
  require(d >= 1 && 2 * d <= n, "weight d must satisfy 1 <= d <= n/2");
  GammaReport report;
  report.n = n;
  report.k = k;
  report.d = d;
  report.trials = trials;
  report.samples.assign(trials, 0.0);
  parallel_for(trials, jobs, [&](std::size_t i) {
    Rng rng = Rng::derive(seed, "gamma", i);
    const MatrixElement m1 = sample_matrix(k, n, d, rng);
    const MatrixElement m2 = sample_matrix(k, n, d, rng);
    const double width = static_cast<double>(mat_width_inf(mat_mul(m1, m2)));
    report.samples[i] = width / (mat_centered_l2(m1) * mat_centered_l2(m2));
  });
  const auto [lo, hi] = std::minmax_element(report.samples.begin(), report.samples.end());
  report.min = *lo;
  report.max = *hi;
  report.median = percentile(report.samples, 50.0);
  report.gamma1 = percentile(report.samples, 1.0);
  report.gamma2 = percentile(report.samples, 99.0);
  return report;
}

std::string GammaReport::to_text() const {
  std::ostringstream os;
  os << "gamma experiment: n=" << n << " k=" << k << " d=" << d
     << " trials=" << trials << "\n";
  os << "  min=" << min << " median=" << median << " max=" << max << "\n";
  os << "  gamma1 (p1)=" << gamma1 << " gamma2 (p99)=" << gamma2 << "\n";
  return os.str();
}

std::string GammaReport::to_csv() const {
  std::ostringstream os;
  os << csv_header("gamma") << "trial,n,k,d,gamma\n";
  os << std::setprecision(10);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    os << i << ',' << n << ',' << k << ',' << d << ',' << samples[i] << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

MatrixElement exact_decryption_matrix(const Params& params,
                                      const KeyMaterial& material,
                                      const MatrixElement& phi,
                                      const Plaintext& m) {
  const PrivateKey& priv = material.keys.priv;
  const MatrixElement blind =
      mat_scale(mat_mul(mat_mul(priv.f, phi), material.w), params.p);
  const MatrixElement message = mat_mul(mat_mul(priv.c, m.m), priv.g);
  return mat_add(blind, message);
}

FailureReport measure_failure_rate(const Params& params, std::uint32_t trials,
                                   std::uint64_t seed, unsigned jobs) {
  require(trials >= 1, "measure_failure_rate needs at least one trial");
  validate_params(params);
  FailureReport report;
  report.params = params;
  report.predicted = predict_b_norm(params);
  report.trials = trials;
  report.per_trial.resize(trials);

  parallel_for(trials, jobs, [&](std::size_t i) {
    Rng rng = Rng::derive(seed, "failure", i);
    const KeyMaterial material = keygen_material(params, rng);
    const Plaintext m = sample_plaintext(params, rng);
    const MatrixElement phi = sample_matrix(params.k, params.n, params.d_phi, rng);
    const Ciphertext ct = encrypt_with_blinding(material.keys.pub, m, phi);
    const Plaintext recovered = decrypt(material.keys.priv, ct);
    const MatrixElement b = exact_decryption_matrix(params, material, phi, m);

    FailureTrial& t = report.per_trial[i];
    t.index = static_cast<std::uint32_t>(i);
    t.width = mat_width_inf(b);
    t.out_of_window = !in_centered_window(b, params.q);
    t.decrypted = recovered == m;
    t.sigma = mat_coeff_sigma(b);
  });

  double variance_sum = 0;
  for (const auto& t : report.per_trial) {
    variance_sum += t.sigma * t.sigma;
    if (!t.decrypted) {
      ++report.failures;
      if (t.width <= static_cast<Coeff>(params.q)) ++report.failures_with_small_width;
    }
    if (t.out_of_window == t.decrypted) report.equivalence_holds = false;
  }
  report.measured_sigma = std::sqrt(variance_sum / trials);
  return report;
}

std::string FailureReport::to_text() const {
  std::ostringstream os;
  os << "failure experiment: " << to_string(params) << " trials=" << trials << "\n";
  os << "  predicted sigma=" << predicted.sigma
     << " (product-corrected " << predicted.sigma_product_corrected << ")"
     << " measured sigma=" << measured_sigma << "\n";
  os << "  failures=" << failures << " rate=" << failure_rate()
     << " failures with width<=q=" << failures_with_small_width << "\n";
  os << "  failure <=> coefficient outside (-q/2, q/2]: "
     << (equivalence_holds ? "holds" : "VIOLATED") << "\n";
  return os.str();
}

std::string FailureReport::to_csv() const {
  std::ostringstream os;
  os << csv_header("failure") << "trial,width,out_of_window,decrypted,sigma\n";
  os << std::setprecision(10);
  for (const auto& t : per_trial) {
    os << t.index << ',' << t.width << ',' << int(t.out_of_window) << ','
       << int(t.decrypted) << ',' << t.sigma << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

BigInt ternary_count(std::uint32_t n, std::uint32_t d1, std::uint32_t d2) {
  require(static_cast<std::uint64_t>(d1) + d2 <= n,
          "weights exceed n in ternary_count");
  // C(n, d1) * C(n - d1, d2), built incrementally to stay exact.
  BigInt result = 1;
  for (std::uint32_t i = 0; i < d1; ++i) result = result * (n - i) / (i + 1);
  for (std::uint32_t i = 0; i < d2; ++i) result = result * (n - d1 - i) / (i + 1);
  return result;
}

BigInt ternary_count(std::uint32_t n, std::uint32_t d) {
  return ternary_count(n, d, d);
}

BigInt key_security(const Params& params) {
  require(2 * params.d_f <= params.n, "key_security needs 2 d_f <= n");
  return boost::multiprecision::pow(ternary_count(params.n, params.d_f),
                                    2 * params.k * params.k);
}

BigInt message_security(const Params& params) {
  require(2 * params.d_phi <= params.n, "message_security needs 2 d_phi <= n");
  return boost::multiprecision::pow(ternary_count(params.n, params.d_phi),
                                    2 * params.k * params.k);
}

SecurityReport security_report(const Params& params) {
  SecurityReport r;
  r.params = params;
  r.key_count = key_security(params);
  r.message_count = message_security(params);
  r.key_mitm = boost::multiprecision::sqrt(r.key_count);
  r.message_mitm = boost::multiprecision::sqrt(r.message_count);
  return r;
}

std::string SecurityReport::to_text() const {
  std::ostringstream os;
  os << "security counts: " << to_string(params) << "\n";
  os << "  key security: " << key_count << "\n";
  os << "  message security: " << message_count << "\n";
  os << "  meet-in-the-middle (key): " << key_mitm << "\n";
  os << "  meet-in-the-middle (message): " << message_mitm << "\n";
  return os.str();
}

std::string SecurityReport::to_csv() const {
  std::ostringstream os;
  os << csv_header("security") << "n,k,d_f,d_phi,key_count,message_count,key_mitm,message_mitm\n";
  os << params.n << ',' << params.k << ',' << params.d_f << ',' << params.d_phi
     << ',' << key_count << ',' << message_count << ',' << key_mitm << ','
     << message_mitm << '\n';
  return os.str();
}

BigInt key_matrix_space(const Params& params) {
  const BigInt diag = ternary_count(params.n, params.d_f + 1, params.d_f);
  const BigInt off = ternary_count(params.n, params.d_f, params.d_f);
  return boost::multiprecision::pow(diag, params.k) *
         boost::multiprecision::pow(off, params.k * params.k - params.k);
}

BruteForceResult brute_force_attack(const PublicKey& pub, std::uint64_t budget) {
  const Params& params = pub.params;
  require(2 * params.d_f + 1 <= params.n, "d_f too large for n");
  const BigInt space = key_matrix_space(params);
  if (space > budget) {
    std::ostringstream os;
    os << "search space " << space << " exceeds budget " << budget;
    throw Error(ErrorCode::kSearchSpaceTooLarge, os.str());
  }
  const std::size_t k = params.k;
  const std::size_t n = params.n;
  const std::vector<RingElement> diag = enumerate_ternary(n, params.d_f + 1, params.d_f);
  const std::vector<RingElement> off = enumerate_ternary(n, params.d_f, params.d_f);

  BruteForceResult result;
  std::vector<std::size_t> digits(k * k, 0);
  MatrixElement candidate(k, n);
  const auto pool = [&](std::size_t slot) -> const std::vector<RingElement>& {
    return slot / k == slot % k ? diag : off;
  };
  while (true) {
    for (std::size_t s = 0; s < k * k; ++s) candidate.entries()[s] = pool(s)[digits[s]];
    ++result.searched;
    if (is_short(mat_reduce(mat_mul(pub.h, candidate), params.q, true), params.p)) {
      result.g_candidates.push_back(candidate);
    }
    if (is_short(mat_reduce(mat_mul(candidate, pub.H), params.q, true), params.p)) {
      result.f_candidates.push_back(candidate);
    }
    std::size_t s = 0;
    while (s < k * k && ++digits[s] == pool(s).size()) digits[s++] = 0;
    if (s == k * k) break;
  }
  return result;
}

// ---------------------------------------------------------------------------

bool MtaResult::all_clean() const {
  return std::all_of(clean.begin(), clean.end(), [](bool b) { return b; });
}

MtaResult multiple_transmission_attack(std::span<const Ciphertext> ciphertexts,
                                       const MatrixElement& h,
                                       const Params& params) {
  require(ciphertexts.size() >= 2, "the attack needs at least two ciphertexts");
  const Coeff q = params.q;
  MatrixElement h_inv;
  try {
    h_inv = mat_inverse_mod_2e(h, params.q_bits());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotInvertible) throw;
    throw Error(ErrorCode::kAttackInapplicable,
                std::string("h is not invertible mod q: ") + e.what());
  }
  const Coeff p_inv = scalar_inverse_mod(params.p, q);
  MtaResult result;
  for (std::size_t i = 1; i < ciphertexts.size(); ++i) {
    const MatrixElement diff = mat_sub(ciphertexts[i].e, ciphertexts[0].e);
    const MatrixElement delta =
        mat_reduce(mat_scale(mat_reduce(mat_mul(diff, h_inv), q, false), p_inv),
                   q, true);
    bool clean = true;
    for (const auto& e : delta.entries()) {
      for (Coeff c : e.coeffs()) clean = clean && c >= -2 && c <= 2;
    }
    result.deltas.push_back(delta);
    result.clean.push_back(clean);
  }
  return result;
}

// ---------------------------------------------------------------------------

ShiftModuleResult shift_module_solution(const MatrixElement& h,
                                        const MatrixElement& target,
                                        std::uint32_t prime) {
  require(is_prime(prime), "shift_module_solution needs a prime modulus");
  if (h.k() != target.k() || h.n() != target.n()) {
    throw Error(ErrorCode::kDimension, "h and target shapes differ");
  }
  const std::size_t k = h.k();
  const std::size_t n = h.n();
  const std::size_t dim = k * k * n;
  const MatrixElement hp = mat_reduce(h, prime, false);

  // Row (i, l, t) is flatten(E_il X^t h): row i of the product holds
  // X^t h_lj in column j.
  std::vector<std::vector<Coeff>> system(dim, std::vector<Coeff>(dim, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t basis = (i * k + l) * n + t;
        for (std::size_t j = 0; j < k; ++j) {
          const RingElement& entry = hp.at(l, j);
          for (std::size_t s = 0; s < n; ++s) {
            const std::size_t out = (i * k + j) * n + (s + t) % n;
            // Transposed: equations are indexed by output coefficient.
            system[out][basis] = (system[out][basis] + entry[s]) % prime;
          }
        }
      }
    }
  }
  std::vector<Coeff> rhs = mat_reduce(target, prime, false).flatten();

  ShiftModuleResult result;
  result.uniform_baseline = prime / std::sqrt(12.0);
  std::vector<Coeff> solution;
  std::vector<std::vector<Coeff>> kernel;
  if (!solve_mod_prime(std::move(system), std::move(rhs), prime, solution, kernel)) {
    return result;
  }
  result.solvable = true;
  result.kernel_dimension = kernel.size();

  if (!kernel.empty() && kernel.size() <= 2) {
    std::vector<Coeff> best = solution;
    double best_ss = centered_sum_squares(best, prime);
    std::vector<Coeff> trial(dim);
    const Coeff outer = kernel.size() == 2 ? prime : 1;
    for (Coeff a = 0; a < prime; ++a) {
      for (Coeff b = 0; b < outer; ++b) {
        for (std::size_t x = 0; x < dim; ++x) {
          Coeff v = solution[x] + a * kernel[0][x];
          if (kernel.size() == 2) v += b * kernel[1][x];
          trial[x] = v % prime;
        }
        const double ss = centered_sum_squares(trial, prime);
        if (ss < best_ss) {
          best_ss = ss;
          best = trial;
        }
      }
    }
    solution = std::move(best);
  }
  for (auto& c : solution) c = mod_centered(c, prime);
  MatrixElement s = MatrixElement::unflatten(k, n, solution);
  result.centered_l2 = mat_centered_l2(s);
  result.sigma = mat_coeff_sigma(s);
  result.is_short = result.sigma <= ShiftModuleResult::kShortFraction * result.uniform_baseline;
  result.near_uniform = std::abs(result.sigma - result.uniform_baseline) <=
                        ShiftModuleResult::kUniformTolerance * result.uniform_baseline;
  result.solution = std::move(s);
  return result;
}

MembershipReport membership_experiment(const Params& params,
                                       std::uint32_t prime,
                                       std::uint32_t trials,
                                       std::uint64_t seed, unsigned jobs) {
  require(trials >= 1, "membership_experiment needs at least one trial");
  MembershipReport report;
  report.params = params;
  report.prime = prime;
  report.trials = trials;
  report.uniform_baseline = prime / std::sqrt(12.0);
  std::vector<ShiftModuleResult> results(trials);
  parallel_for(trials, jobs, [&](std::size_t i) {
    Rng rng = Rng::derive(seed, "membership", i);
    const KeyMaterial material = keygen_material(params, rng);
    const PrivateKey& priv = material.keys.priv;
    const MatrixElement& h = material.keys.pub.h;
    const MatrixElement target = mat_mul(mat_mul(priv.f, h), priv.g);
    results[i] = shift_module_solution(h, target, prime);
  });
  for (const auto& r : results) {
    report.sigmas.push_back(r.solvable ? r.sigma : std::numeric_limits<double>::quiet_NaN());
    report.solvable += r.solvable;
    report.short_count += r.solvable && r.is_short;
    report.near_uniform_count += r.solvable && r.near_uniform;
  }
  return report;
}

std::string MembershipReport::to_text() const {
  std::ostringstream os;
  os << "shift-module experiment: " << to_string(params) << " prime=" << prime
     << " trials=" << trials << "\n";
  os << "  uniform baseline sigma=" << uniform_baseline << "\n";
  os << "  solvable=" << solvable << " short=" << short_count
     << " near-uniform=" << near_uniform_count << "\n";
  const char* verdict = short_count == trials         ? "SHORT solutions (f g reachable)"
                        : near_uniform_count * 10 >= trials * 9 ? "NON-SHORT solutions"
                                                        : "mixed";
  os << "  verdict k=" << params.k << ": " << verdict << "\n";
  return os.str();
}

std::string MembershipReport::to_csv() const {
  std::ostringstream os;
  os << csv_header("membership") << "trial,k,n,prime,sigma,baseline\n";
  os << std::setprecision(10);
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    os << i << ',' << params.k << ',' << params.n << ',' << prime << ','
       << sigmas[i] << ',' << uniform_baseline << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

SizeTable nnru_sizes(const Params& params) {
  const double count = static_cast<double>(params.coeff_count());
  const double lp = std::log2(static_cast<double>(params.p));
  const double lq = std::log2(static_cast<double>(params.q));
  return {count * lp, count * lq, lq / lp, 2 * count * lp, 2 * count * lq};
}

SizeTable ntru_sizes(std::uint32_t N, std::uint32_t p, std::uint32_t q) {
  const double lp = std::log2(static_cast<double>(p));
  const double lq = std::log2(static_cast<double>(q));
  return {N * lp, N * lq, lq / lp, 2 * N * lp, N * lq};
}

BenchmarkReport benchmark_compare(const Params& params, std::uint32_t trials,
                                  std::uint64_t seed) {
  require(trials >= 10, "benchmark_compare needs at least 10 trials");
  validate_params(params);
  using clock = std::chrono::steady_clock;
  BenchmarkReport report;
  report.params = params;
  report.trials = trials;
  report.ntru_N = static_cast<std::uint32_t>(params.coeff_count());
  report.ntru_d = std::min<std::uint32_t>(params.k * params.k * params.d_f,
                                          (report.ntru_N - 1) / 2);
  report.nnru = nnru_sizes(params);
  report.ntru = ntru_sizes(report.ntru_N, params.p, params.q);

  {
    Rng rng = Rng::derive(seed, "bench-count");
    const MatrixElement a = sample_matrix(params.k, params.n, params.d_f, rng);
    const MatrixElement b = sample_matrix(params.k, params.n, params.d_f, rng);
    OpCounter school, strass;
    mat_mul(a, b, &school);
    mat_mul_strassen(a, b, &strass);
    report.schoolbook_ring_muls = school.ring_muls;
    report.strassen_ring_muls = strass.ring_muls;
  }
  const std::uint64_t n = params.n;
  report.nnru_encrypt_coeff_muls = 2 * report.schoolbook_ring_muls * n * n;
  report.ntru_encrypt_coeff_muls =
      static_cast<std::uint64_t>(report.ntru_N) * report.ntru_N;

  // Repeat the cheap operations so each timed sample is well above clock noise.
  constexpr int kReps = 16;
  std::vector<double> nk, ne, ns, nd, tk, te, td;
  const ntru::NtruParams ntru_params{report.ntru_N, params.p, params.q, report.ntru_d};
  for (std::uint32_t t = 0; t < trials; ++t) {
    Rng rng = Rng::derive(seed, "bench", t);

    auto start = clock::now();
    const KeyPair keys = keygen(params, rng);
    nk.push_back(seconds_since(start));

    std::vector<Plaintext> messages;
    std::vector<MatrixElement> blinds;
    for (int r = 0; r < kReps; ++r) {
      messages.push_back(sample_plaintext(params, rng));
      blinds.push_back(sample_matrix(params.k, params.n, params.d_phi, rng));
    }
    std::vector<Ciphertext> cts;
    start = clock::now();
    for (int r = 0; r < kReps; ++r) {
      cts.push_back(encrypt_with_blinding(keys.pub, messages[r], blinds[r]));
    }
    ne.push_back(seconds_since(start) / kReps);

    start = clock::now();
    for (int r = 0; r < kReps; ++r) {
      MatrixElement e = mat_add(
          mat_scale(mat_mul_strassen(blinds[r], keys.pub.h), params.p),
          mat_mul_strassen(keys.pub.H, messages[r].m));
      cts[r].e = mat_reduce(e, params.q, false);
    }
    ns.push_back(seconds_since(start) / kReps);

    start = clock::now();
    for (int r = 0; r < kReps; ++r) (void)decrypt(keys.priv, cts[r]);
    nd.push_back(seconds_since(start) / kReps);

    start = clock::now();
    const ntru::NtruKeyPair ntru_keys = ntru::ntru_keygen(ntru_params, rng);
    tk.push_back(seconds_since(start));

    std::vector<RingElement> ntru_messages, ntru_blinds, ntru_cts;
    for (int r = 0; r < kReps; ++r) {
      ntru_messages.push_back(
          MatrixElement::unflatten(1, report.ntru_N,
                                   messages[r].m.flatten()).at(0, 0));
      ntru_blinds.push_back(
          sample_ternary(report.ntru_N, report.ntru_d, report.ntru_d, rng));
    }
    start = clock::now();
    for (int r = 0; r < kReps; ++r) {
      ntru_cts.push_back(ntru::ntru_encrypt_with_blinding(
          ntru_keys.pub, ntru_messages[r], ntru_blinds[r]));
    }
    te.push_back(seconds_since(start) / kReps);

    start = clock::now();
    for (int r = 0; r < kReps; ++r) (void)ntru::ntru_decrypt(ntru_keys.priv, ntru_cts[r]);
    td.push_back(seconds_since(start) / kReps);
  }
  report.nnru_keygen_s = median_of(nk);
  report.nnru_encrypt_s = median_of(ne);
  report.nnru_encrypt_strassen_s = median_of(ns);
  report.nnru_decrypt_s = median_of(nd);
  report.ntru_keygen_s = median_of(tk);
  report.ntru_encrypt_s = median_of(te);
  report.ntru_decrypt_s = median_of(td);
  return report;
}

std::string BenchmarkReport::to_text() const {
  std::ostringstream os;
  os << std::fixed;
  os << "NNRU " << to_string(params) << " vs NTRU N=" << ntru_N << " d=" << ntru_d
     << " (" << trials << " trials)\n";
  os << std::setprecision(2);
  os << "  " << std::left << std::setw(24) << "characteristic" << std::setw(22)
     << "NTRU" << "NNRU\n";
  const auto cell = [](double v, const char* unit) {
    std::ostringstream c;
    c << std::fixed << std::setprecision(2) << v << unit;
    return c.str();
  };
  const auto row = [&](const char* name, double a, double b, const char* unit) {
    os << "  " << std::setw(24) << name << std::setw(22) << cell(a, unit)
       << cell(b, unit) << "\n";
  };
  row("plaintext block", ntru.plaintext_bits, nnru.plaintext_bits, " bits");
  row("ciphertext block", ntru.ciphertext_bits, nnru.ciphertext_bits, " bits");
  row("message expansion", ntru.message_expansion, nnru.message_expansion, " to 1");
  row("private key", ntru.private_key_bits, nnru.private_key_bits, " bits");
  row("public key", ntru.public_key_bits, nnru.public_key_bits, " bits");
  os << "  " << std::setw(24) << "encrypt coeff muls" << std::setw(22)
     << ntru_encrypt_coeff_muls << nnru_encrypt_coeff_muls << "\n";
  os << "  ring muls per k x k product: schoolbook=" << schoolbook_ring_muls
     << " strassen=" << strassen_ring_muls << "\n";
  os << std::setprecision(1);
  os << "  timings (median, microseconds):\n";
  os << "    keygen   NTRU " << ntru_keygen_s * 1e6 << "  NNRU " << nnru_keygen_s * 1e6 << "\n";
  os << "    encrypt  NTRU " << ntru_encrypt_s * 1e6 << "  NNRU " << nnru_encrypt_s * 1e6
     << "  NNRU/strassen " << nnru_encrypt_strassen_s * 1e6 << "\n";
  os << "    decrypt  NTRU " << ntru_decrypt_s * 1e6 << "  NNRU " << nnru_decrypt_s * 1e6 << "\n";
  os << std::setprecision(3);
  os << "  encryption speedup NTRU/NNRU: " << encrypt_speedup() << "\n";
  return os.str();
}

std::string BenchmarkReport::to_csv() const {
  std::ostringstream os;
  os << csv_header("bench")
     << "n,k,p,q,N,plaintext_bits,ciphertext_bits,message_expansion,"
        "private_key_bits,public_key_bits,ntru_public_key_bits,"
        "schoolbook_ring_muls,strassen_ring_muls,nnru_keygen_s,nnru_encrypt_s,"
        "nnru_encrypt_strassen_s,nnru_decrypt_s,ntru_keygen_s,ntru_encrypt_s,"
        "ntru_decrypt_s,encrypt_speedup\n";
  os << std::setprecision(10);
  os << params.n << ',' << params.k << ',' << params.p << ',' << params.q << ','
     << ntru_N << ',' << nnru.plaintext_bits << ',' << nnru.ciphertext_bits << ','
     << nnru.message_expansion << ',' << nnru.private_key_bits << ','
     << nnru.public_key_bits << ',' << ntru.public_key_bits << ','
     << schoolbook_ring_muls << ',' << strassen_ring_muls << ',' << nnru_keygen_s
     << ',' << nnru_encrypt_s << ',' << nnru_encrypt_strassen_s << ','
     << nnru_decrypt_s << ',' << ntru_keygen_s << ',' << ntru_encrypt_s << ','
     << ntru_decrypt_s << ',' << encrypt_speedup() << '\n';
  return os.str();
}

}  // namespace nnru::analysis
