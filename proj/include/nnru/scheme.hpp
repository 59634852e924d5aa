// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

#include "nnru/matrix.hpp"
#include "nnru/params.hpp"
#include "nnru/rng.hpp"

namespace nnru {

struct PublicKey {
  Params params;
  MatrixElement h;  // w G_q mod q
  MatrixElement H;  // F_q c mod q

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct PrivateKey {
  Params params;
  MatrixElement f;
  MatrixElement g;
  MatrixElement c;
  MatrixElement c_p;  // C_p c = I mod p
  MatrixElement g_p;  // g G_p = I mod p

  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

// Everything produced during key generation, including values that are
// discarded in normal use (w, F_q, G_q). Analysis code needs them.
struct KeyMaterial {
  KeyPair keys;
  MatrixElement w;
  MatrixElement f_q;
  MatrixElement g_q;
};

// Coefficients centered mod p.
struct Plaintext {
  MatrixElement m;

  friend bool operator==(const Plaintext&, const Plaintext&) = default;
};

// Coefficients in [0, q).
struct Ciphertext {
  MatrixElement e;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

inline constexpr int kKeygenRetryLimit = 100;

// Exactly d1 coefficients +1 and d2 coefficients -1 at uniformly chosen
// distinct positions.
RingElement sample_ternary(std::size_t n, std::size_t d1, std::size_t d2,
                           Rng& rng);

// k^2 independent entries from L(d, d).
MatrixElement sample_matrix(std::size_t k, std::size_t n, std::size_t d,
                            Rng& rng);

// Private-key shape: diagonal entries from L(d + 1, d), off-diagonal from
// L(d, d). A matrix with every entry in L(d, d) is the zero matrix at X = 1
// and therefore never invertible mod p or mod 2; this shape evaluates to I.
MatrixElement sample_key_matrix(std::size_t k, std::size_t n, std::size_t d,
                                Rng& rng);

// Uniform message with coefficients in [-(p-1)/2, (p-1)/2].
Plaintext sample_plaintext(const Params& params, Rng& rng);

KeyMaterial keygen_material(const Params& params, Rng& rng,
                            int retry_limit = kKeygenRetryLimit);
KeyPair keygen(const Params& params, Rng& rng);

// e = p phi h + H m mod q with a fresh phi from L(d_phi, d_phi).
Ciphertext encrypt(const PublicKey& pub, const Plaintext& m, Rng& rng);
// Same with the blinding matrix supplied by the caller.
Ciphertext encrypt_with_blinding(const PublicKey& pub, const Plaintext& m,
                                 const MatrixElement& phi);

// A = f e g centered mod q; B = A mod p; C = C_p B G_p centered mod p.
// There is no integrity check: a ciphertext whose A wrapped mod q decrypts
// to an unrelated, in-range plaintext.
Plaintext decrypt(const PrivateKey& priv, const Ciphertext& ct);

void check_plaintext(const Params& params, const Plaintext& m);

}  // namespace nnru
