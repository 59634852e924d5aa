// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include "nnru/scheme.hpp"

#include <numeric>
#include <tuple>
#include <utility>
#include <string>

#include "nnru/error.hpp"

namespace nnru {
namespace {

template <typename Fn>
auto retry_until_invertible(const char* what, int retry_limit, Fn&& attempt) {
  for (int i = 0; i < retry_limit; ++i) {
    try {
      return attempt();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotInvertible) throw;
    }
  }
  throw Error(ErrorCode::kKeygenFailure,
              std::string("no invertible ") + what + " after " +
                  std::to_string(retry_limit) + " attempts");
}

void require_matching_shape(const Params& params, const MatrixElement& m,
                            const char* what) {
  if (m.k() != params.k || m.n() != params.n) {
    throw Error(ErrorCode::kMismatch,
                std::string(what) + " shape does not match parameters");
  }
}

}  // namespace

RingElement sample_ternary(std::size_t n, std::size_t d1, std::size_t d2,
                           Rng& rng) {
  if (d1 + d2 > n) {
    throw Error(ErrorCode::kParameter,
                "cannot place " + std::to_string(d1 + d2) +
                    " nonzero coefficients in n=" + std::to_string(n));
  }
  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  RingElement r(n);
  // Partial Fisher-Yates: the first d1 + d2 slots are a uniform sample.
  for (std::size_t i = 0; i < d1 + d2; ++i) {
    const std::size_t j = i + rng.uniform_below(n - i);
    std::swap(positions[i], positions[j]);
    r[positions[i]] = i < d1 ? 1 : -1;
  }
  return r;
}

MatrixElement sample_matrix(std::size_t k, std::size_t n, std::size_t d,
                            Rng& rng) {
  MatrixElement m(k, n);
  for (auto& e : m.entries()) e = sample_ternary(n, d, d, rng);
  return m;
}

MatrixElement sample_key_matrix(std::size_t k, std::size_t n, std::size_t d,
                                Rng& rng) {
  MatrixElement m(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m.at(i, j) = sample_ternary(n, i == j ? d + 1 : d, d, rng);
    }
  }
  return m;
}

Plaintext sample_plaintext(const Params& params, Rng& rng) {
  const Coeff half = (static_cast<Coeff>(params.p) - 1) / 2;
  MatrixElement m(params.k, params.n);
  for (auto& e : m.entries()) {
    for (auto& c : e.coeffs()) {
      c = static_cast<Coeff>(rng.uniform_below(params.p)) - half;
    }
  }
  return {std::move(m)};
}

KeyMaterial keygen_material(const Params& params, Rng& rng, int retry_limit) {
  validate_params(params);
  if (params.d_f == 0 || params.d_c == 0) {
    // Weight zero leaves a diagonal of monomials: a trivially guessable key.
    throw Error(ErrorCode::kKeygenFailure,
                "private weights d_f and d_c must be positive");
  }
  const std::size_t k = params.k;
  const std::size_t n = params.n;
  const Coeff p = params.p;
  const Coeff q = params.q;
  const unsigned e = params.q_bits();

  KeyMaterial out;
  PrivateKey& priv = out.keys.priv;
  priv.params = params;

  std::tie(priv.f, out.f_q) = retry_until_invertible("f", retry_limit, [&] {
    MatrixElement f = sample_key_matrix(k, n, params.d_f, rng);
    MatrixElement f_q = mat_inverse_mod_2e(f, e);
    return std::pair{std::move(f), std::move(f_q)};
  });
  std::tie(priv.g, out.g_q, priv.g_p) =
      retry_until_invertible("g", retry_limit, [&] {
        MatrixElement g = sample_key_matrix(k, n, params.d_f, rng);
        MatrixElement g_p = mat_inverse_mod_prime(g, p);
        MatrixElement g_q = mat_inverse_mod_2e(g, e);
        return std::tuple{std::move(g), std::move(g_q), std::move(g_p)};
      });
  std::tie(priv.c, priv.c_p) = retry_until_invertible("c", retry_limit, [&] {
    MatrixElement c = sample_key_matrix(k, n, params.d_c, rng);
    MatrixElement c_p = mat_inverse_mod_prime(c, p);
    return std::pair{std::move(c), std::move(c_p)};
  });
  out.w = sample_key_matrix(k, n, params.d_w, rng);

  PublicKey& pub = out.keys.pub;
  pub.params = params;
  pub.h = mat_reduce(mat_mul(out.w, out.g_q), q, false);
  pub.H = mat_reduce(mat_mul(out.f_q, priv.c), q, false);
  return out;
}

KeyPair keygen(const Params& params, Rng& rng) {
  return keygen_material(params, rng).keys;
}

void check_plaintext(const Params& params, const Plaintext& m) {
  if (m.m.k() != params.k || m.m.n() != params.n) {
    throw Error(ErrorCode::kEncoding, "plaintext shape does not match parameters");
  }
  const Coeff half = (static_cast<Coeff>(params.p) - 1) / 2;
  for (const auto& e : m.m.entries()) {
    for (Coeff c : e.coeffs()) {
      if (c < -half || c > half) {
        throw Error(ErrorCode::kEncoding,
                    "plaintext coefficient " + std::to_string(c) +
                        " outside [" + std::to_string(-half) + ", " +
                        std::to_string(half) + "]");
      }
    }
  }
}

Ciphertext encrypt_with_blinding(const PublicKey& pub, const Plaintext& m,
                                 const MatrixElement& phi) {
  const Params& params = pub.params;
  check_plaintext(params, m);
  require_matching_shape(params, phi, "blinding matrix");
  const Coeff q = params.q;
  MatrixElement blind = mat_scale(mat_mul(phi, pub.h), params.p);
  MatrixElement e = mat_add(blind, mat_mul(pub.H, m.m));
  return {mat_reduce(e, q, false)};
}

Ciphertext encrypt(const PublicKey& pub, const Plaintext& m, Rng& rng) {
  check_plaintext(pub.params, m);
  const MatrixElement phi =
      sample_matrix(pub.params.k, pub.params.n, pub.params.d_phi, rng);
  return encrypt_with_blinding(pub, m, phi);
}

Plaintext decrypt(const PrivateKey& priv, const Ciphertext& ct) {
  const Params& params = priv.params;
  require_matching_shape(params, ct.e, "ciphertext");
  const Coeff p = params.p;
  const Coeff q = params.q;
  const MatrixElement a =
      mat_reduce(mat_mul(mat_mul(priv.f, ct.e), priv.g), q, true);
  const MatrixElement b = mat_reduce(a, p, false);
  return {mat_reduce(mat_mul(mat_mul(priv.c_p, b), priv.g_p), p, true)};
}

}  // namespace nnru
