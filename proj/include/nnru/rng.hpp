// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nnru {

// Deterministic random stream. Streams for distinct purposes are derived from
// (master seed, label, counter) so that independent objects never share state
// and results do not depend on the order in which streams are consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng derive(std::uint64_t master, std::string_view label,
                    std::uint64_t counter = 0);

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). Rejection sampling keeps the result exact
  // and independent of the standard library's distribution implementation.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace nnru
