// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "nnru/ring.hpp"
#include "nnru/rng.hpp"

// Classic NTRU over Z[X]/(X^N - 1), used as the comparison baseline. Shares
// the convolution and inversion code with the matrix scheme.
namespace nnru::ntru {

struct NtruParams {
  std::uint32_t N = 0;
  std::uint32_t p = 3;
  std::uint32_t q = 0;
  std::uint32_t d = 0;
};

void validate(const NtruParams& params);

struct NtruPublicKey {
  NtruParams params;
  RingElement h;  // F_q g mod q
};

struct NtruPrivateKey {
  NtruParams params;
  RingElement f;    // L(d + 1, d)
  RingElement f_p;  // f F_p = 1 mod p
};

struct NtruKeyPair {
  NtruPublicKey pub;
  NtruPrivateKey priv;
  RingElement g;  // kept for verification only
};

NtruKeyPair ntru_keygen(const NtruParams& params, Rng& rng,
                        int retry_limit = 100);

// e = p phi h + m mod q.
RingElement ntru_encrypt(const NtruPublicKey& pub, const RingElement& m,
                         Rng& rng);
RingElement ntru_encrypt_with_blinding(const NtruPublicKey& pub,
                                       const RingElement& m,
                                       const RingElement& phi);

// a = f e centered mod q; m = F_p a centered mod p.
RingElement ntru_decrypt(const NtruPrivateKey& priv, const RingElement& e);

}  // namespace nnru::ntru
