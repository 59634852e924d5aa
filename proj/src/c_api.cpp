// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include "nnru/nnru.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nnru/analysis.hpp"
#include "nnru/encoding.hpp"
#include "nnru/error.hpp"
#include "nnru/serialize.hpp"

struct nnru_public_key {
  nnru::PublicKey key;
};

struct nnru_private_key {
  nnru::PrivateKey key;
};

namespace {

thread_local std::string g_last_error;

nnru_status to_status(nnru::ErrorCode code) {
  using nnru::ErrorCode;
  switch (code) {
    case ErrorCode::kDimension: return NNRU_ERR_DIMENSION;
    case ErrorCode::kParameter: return NNRU_ERR_PARAMETER;
    case ErrorCode::kNotInvertible: return NNRU_ERR_NOT_INVERTIBLE;
    case ErrorCode::kKeygenFailure: return NNRU_ERR_KEYGEN_FAILURE;
    case ErrorCode::kEncoding: return NNRU_ERR_ENCODING;
    case ErrorCode::kDecode: return NNRU_ERR_DECODE;
    case ErrorCode::kFormat: return NNRU_ERR_FORMAT;
    case ErrorCode::kMismatch: return NNRU_ERR_MISMATCH;
    case ErrorCode::kSearchSpaceTooLarge: return NNRU_ERR_SEARCH_SPACE;
    case ErrorCode::kAttackInapplicable: return NNRU_ERR_ATTACK_INAPPLICABLE;
    case ErrorCode::kIo: return NNRU_ERR_IO;
  }
  return NNRU_ERR_INTERNAL;
}

template <typename Fn>
nnru_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return NNRU_OK;
  } catch (const nnru::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return NNRU_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NNRU_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NNRU_ERR_INTERNAL;
  }
}

void require_arg(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

nnru::Params from_c(const nnru_params_values* v) {
  require_arg(v != nullptr, "params must not be NULL");
  return {v->n, v->k, v->p, v->q, v->d_f, v->d_w, v->d_c, v->d_phi};
}

nnru_params_values to_c(const nnru::Params& p) {
  return {p.n, p.k, p.p, p.q, p.d_f, p.d_w, p.d_c, p.d_phi};
}

void fill(nnru_buffer* out, const void* data, std::size_t size) {
  if (out == nullptr) return;
  out->data = nullptr;
  out->size = 0;
  if (size == 0) return;
  out->data = static_cast<std::uint8_t*>(std::malloc(size));
  if (out->data == nullptr) throw std::bad_alloc();
  std::memcpy(out->data, data, size);
  out->size = size;
}

void fill(nnru_buffer* out, const std::string& s) { fill(out, s.data(), s.size()); }
void fill(nnru_buffer* out, const std::vector<std::uint8_t>& v) {
  fill(out, v.data(), v.size());
}

std::string fingerprint_hex(const std::vector<std::uint8_t>& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (int i = 0; i < 8; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

bool contains(const std::vector<nnru::MatrixElement>& list,
              const nnru::MatrixElement& m) {
  for (const auto& x : list) {
    if (x == m) return true;
  }
  return false;
}

bool h_invertible(const nnru::PublicKey& pub) {
  try {
    nnru::mat_inverse_mod_2e(pub.h, pub.params.q_bits());
    return true;
  } catch (const nnru::Error& e) {
    if (e.code() != nnru::ErrorCode::kNotInvertible) throw;
    return false;
  }
}

}  // namespace

extern "C" {

const char* nnru_last_error(void) { return g_last_error.c_str(); }

const char* nnru_status_name(nnru_status status) {
  switch (status) {
    case NNRU_OK: return "ok";
    case NNRU_ERR_DIMENSION: return "dimension error";
    case NNRU_ERR_PARAMETER: return "parameter error";
    case NNRU_ERR_NOT_INVERTIBLE: return "not invertible";
    case NNRU_ERR_KEYGEN_FAILURE: return "keygen failure";
    case NNRU_ERR_ENCODING: return "encoding error";
    case NNRU_ERR_DECODE: return "decode error";
    case NNRU_ERR_FORMAT: return "format error";
    case NNRU_ERR_MISMATCH: return "parameter mismatch";
    case NNRU_ERR_SEARCH_SPACE: return "search space too large";
    case NNRU_ERR_ATTACK_INAPPLICABLE: return "attack inapplicable";
    case NNRU_ERR_IO: return "I/O error";
    case NNRU_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NNRU_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void nnru_buffer_free(nnru_buffer* buffer) {
  if (buffer == nullptr) return;
  std::free(buffer->data);
  buffer->data = nullptr;
  buffer->size = 0;
}

nnru_status nnru_preset(const char* name, nnru_params_values* out) {
  if (name == nullptr || out == nullptr) {
    g_last_error = "name and out must not be NULL";
    return NNRU_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    auto preset = nnru::find_preset(name);
    if (!preset) {
      throw nnru::Error(nnru::ErrorCode::kParameter,
                        std::string("unknown preset '") + name + "'");
    }
    *out = to_c(*preset);
  });
}

nnru_status nnru_validate_params(const nnru_params_values* params,
                                 nnru_buffer* report_text, double* margin,
                                 int* failure_prone) {
  if (params == nullptr) {
    g_last_error = "params must not be NULL";
    return NNRU_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const nnru::ValidationReport report = nnru::validate_params(from_c(params));
    fill(report_text, report.to_text());
    if (margin) *margin = report.margin;
    if (failure_prone) *failure_prone = report.failure_prone ? 1 : 0;
  });
}

nnru_status nnru_keygen(const nnru_params_values* params, uint64_t seed,
                        nnru_public_key** pub, nnru_private_key** priv) {
  if (params == nullptr || pub == nullptr || priv == nullptr) {
    g_last_error = "params, pub and priv must not be NULL";
    return NNRU_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    nnru::Rng rng = nnru::Rng::derive(seed, "keygen");
    nnru::KeyPair keys = nnru::keygen(from_c(params), rng);
    *pub = new nnru_public_key{std::move(keys.pub)};
    *priv = new nnru_private_key{std::move(keys.priv)};
  });
}

void nnru_public_key_free(nnru_public_key* key) { delete key; }
void nnru_private_key_free(nnru_private_key* key) { delete key; }

nnru_status nnru_public_key_params(const nnru_public_key* key,
                                   nnru_params_values* out) {
  if (key == nullptr || out == nullptr) {
    g_last_error = "key and out must not be NULL";
    return NNRU_ERR_INVALID_ARGUMENT;
  }
  *out = to_c(key->key.params);
  return NNRU_OK;
}

nnru_status nnru_private_key_params(const nnru_private_key* key,
                                    nnru_params_values* out) {
  if (key == nullptr || out == nullptr) {
    g_last_error = "key and out must not be NULL";
    return NNRU_ERR_INVALID_ARGUMENT;
  }
  *out = to_c(key->key.params);
  return NNRU_OK;
}

nnru_status nnru_public_key_serialize(const nnru_public_key* key, nnru_buffer* out) {
  return guarded([&] {
    require_arg(key != nullptr && out != nullptr, "key and out must not be NULL");
    fill(out, nnru::serialize_public_key(key->key));
  });
}

nnru_status nnru_private_key_serialize(const nnru_private_key* key,
                                       nnru_buffer* out) {
  return guarded([&] {
    require_arg(key != nullptr && out != nullptr, "key and out must not be NULL");
    fill(out, nnru::serialize_private_key(key->key));
  });
}

nnru_status nnru_public_key_parse(const uint8_t* data, size_t size,
                                  const nnru_params_values* weights,
                                  nnru_public_key** out) {
  return guarded([&] {
    require_arg(out != nullptr && (data != nullptr || size == 0),
                "data and out must not be NULL");
    const nnru::Params w = weights ? from_c(weights) : nnru::Params{};
    *out = new nnru_public_key{
        nnru::parse_public_key({data, size}, weights ? &w : nullptr)};
  });
}

nnru_status nnru_private_key_parse(const uint8_t* data, size_t size,
                                   const nnru_params_values* weights,
                                   nnru_private_key** out) {
  return guarded([&] {
    require_arg(out != nullptr && (data != nullptr || size == 0),
                "data and out must not be NULL");
    const nnru::Params w = weights ? from_c(weights) : nnru::Params{};
    *out = new nnru_private_key{
        nnru::parse_private_key({data, size}, weights ? &w : nullptr)};
  });
}

nnru_status nnru_public_key_fingerprint(const nnru_public_key* key, char out[17]) {
  return guarded([&] {
    require_arg(key != nullptr && out != nullptr, "key and out must not be NULL");
    const std::string hex = fingerprint_hex(nnru::serialize_public_key(key->key));
    std::memcpy(out, hex.c_str(), 17);
  });
}

nnru_status nnru_encrypt_message(const nnru_public_key* key,
                                 const uint8_t* message, size_t size,
                                 uint64_t seed, nnru_buffer* ciphertext) {
  return guarded([&] {
    require_arg(key != nullptr && ciphertext != nullptr &&
                    (message != nullptr || size == 0),
                "key, message and ciphertext must not be NULL");
    const nnru::Params& params = key->key.params;
    if (params.d_phi == 0) {
      throw nnru::Error(nnru::ErrorCode::kParameter,
                        "blinding weight d_phi is zero; supply weights");
    }
    const std::vector<nnru::Plaintext> blocks =
        nnru::encode_message({message, size}, params);
    std::vector<nnru::Ciphertext> cts;
    cts.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      nnru::Rng rng = nnru::Rng::derive(seed, "encrypt", i);
      cts.push_back(nnru::encrypt(key->key, blocks[i], rng));
    }
    fill(ciphertext, nnru::serialize_ciphertexts(params, cts));
  });
}

nnru_status nnru_decrypt_message(const nnru_private_key* key,
                                 const uint8_t* ciphertext, size_t size,
                                 nnru_buffer* message) {
  return guarded([&] {
    require_arg(key != nullptr && message != nullptr &&
                    (ciphertext != nullptr || size == 0),
                "key, ciphertext and message must not be NULL");
    const nnru::CiphertextFile file = nnru::parse_ciphertexts({ciphertext, size});
    if (!file.params.same_ring(key->key.params)) {
      throw nnru::Error(nnru::ErrorCode::kMismatch,
                        "ciphertext parameters (" + nnru::to_string(file.params) +
                            ") do not match the private key (" +
                            nnru::to_string(key->key.params) + ")");
    }
    std::vector<nnru::Plaintext> blocks;
    blocks.reserve(file.blocks.size());
    for (const auto& ct : file.blocks) blocks.push_back(nnru::decrypt(key->key, ct));
    fill(message, nnru::decode_message(blocks, key->key.params));
  });
}

nnru_status nnru_analyze_gamma(uint32_t n, uint32_t k, uint32_t d,
                               uint32_t trials, uint64_t seed, uint32_t jobs,
                               nnru_buffer* text, nnru_buffer* csv) {
  return guarded([&] {
    const auto report = nnru::analysis::estimate_gamma(n, k, d, trials, seed, jobs);
    fill(text, report.to_text());
    fill(csv, report.to_csv());
  });
}

nnru_status nnru_analyze_failure(const nnru_params_values* params,
                                 uint32_t trials, uint64_t seed, uint32_t jobs,
                                 nnru_buffer* text, nnru_buffer* csv) {
  return guarded([&] {
    const auto report =
        nnru::analysis::measure_failure_rate(from_c(params), trials, seed, jobs);
    fill(text, report.to_text());
    fill(csv, report.to_csv());
  });
}

nnru_status nnru_analyze_security(const nnru_params_values* params,
                                  nnru_buffer* text, nnru_buffer* csv) {
  return guarded([&] {
    const auto report = nnru::analysis::security_report(from_c(params));
    fill(text, report.to_text());
    fill(csv, report.to_csv());
  });
}

nnru_status nnru_analyze_membership(const nnru_params_values* params,
                                    uint32_t prime, uint32_t trials,
                                    uint64_t seed, uint32_t jobs,
                                    nnru_buffer* text, nnru_buffer* csv) {
  return guarded([&] {
    const auto report = nnru::analysis::membership_experiment(
        from_c(params), prime, trials, seed, jobs);
    fill(text, report.to_text());
    fill(csv, report.to_csv());
  });
}

nnru_status nnru_bench(const nnru_params_values* params, uint32_t trials,
                       uint64_t seed, nnru_buffer* text, nnru_buffer* csv) {
  return guarded([&] {
    const auto report = nnru::analysis::benchmark_compare(from_c(params), trials, seed);
    fill(text, report.to_text());
    fill(csv, report.to_csv());
  });
}

nnru_status nnru_attack_brute(const nnru_params_values* params,
                              const nnru_public_key* key, uint64_t budget,
                              uint64_t seed, nnru_buffer* text) {
  return guarded([&] {
    std::ostringstream os;
    if (key != nullptr) {
      const auto result = nnru::analysis::brute_force_attack(key->key, budget);
      os << "brute force over " << result.searched << " candidates\n";
      os << "  g candidates (h g short): " << result.g_candidates.size() << "\n";
      os << "  f candidates (f H short): " << result.f_candidates.size() << "\n";
    } else {
      nnru::Rng rng = nnru::Rng::derive(seed, "attack-brute");
      const nnru::KeyPair keys = nnru::keygen(from_c(params), rng);
      const auto result = nnru::analysis::brute_force_attack(keys.pub, budget);
      const bool g_found = contains(result.g_candidates, keys.priv.g);
      const bool f_found = contains(result.f_candidates, keys.priv.f);
      os << "brute force over " << result.searched << " candidates ("
         << nnru::to_string(keys.pub.params) << ")\n";
      os << "  g candidates (h g short): " << result.g_candidates.size()
         << ", planted g recovered: " << (g_found ? "yes" : "no") << "\n";
      os << "  f candidates (f H short): " << result.f_candidates.size()
         << ", planted f recovered: " << (f_found ? "yes" : "no") << "\n";
    }
    fill(text, os.str());
  });
}

nnru_status nnru_attack_mta(const nnru_params_values* params,
                            const nnru_public_key* key, uint32_t count,
                            uint64_t seed, nnru_buffer* text) {
  return guarded([&] {
    require_arg(count >= 2, "count must be at least 2");
    std::ostringstream os;
    nnru::PublicKey pub;
    if (key != nullptr) {
      pub = key->key;
    } else {
      // Planted keys are redrawn until h is invertible mod q.
      const nnru::Params p = from_c(params);
      int attempt = 0;
      for (;; ++attempt) {
        if (attempt == nnru::kKeygenRetryLimit) {
          throw nnru::Error(nnru::ErrorCode::kAttackInapplicable,
                            "no key with invertible h found");
        }
        nnru::Rng rng = nnru::Rng::derive(seed, "attack-mta-key", attempt);
        pub = nnru::keygen(p, rng).pub;
        if (h_invertible(pub)) break;
      }
      os << "planted key after " << attempt << " skipped non-invertible h\n";
    }
    const nnru::Params& p = pub.params;
    nnru::Rng rng = nnru::Rng::derive(seed, "attack-mta");
    const nnru::Plaintext m = nnru::sample_plaintext(p, rng);
    std::vector<nnru::MatrixElement> phis;
    std::vector<nnru::Ciphertext> cts;
    for (uint32_t i = 0; i < count; ++i) {
      phis.push_back(nnru::sample_matrix(p.k, p.n, p.d_phi, rng));
      cts.push_back(nnru::encrypt_with_blinding(pub, m, phis.back()));
    }
    const auto result = nnru::analysis::multiple_transmission_attack(cts, pub.h, p);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < result.deltas.size(); ++i) {
      matched += result.deltas[i] == nnru::mat_sub(phis[i + 1], phis[0]);
    }
    os << "multiple transmission: " << count << " ciphertexts of one message\n";
    os << "  clean differences: "
       << std::count(result.clean.begin(), result.clean.end(), true) << "/"
       << result.deltas.size() << "\n";
    os << "  phi_i - phi_1 matching ground truth: " << matched << "/"
       << result.deltas.size() << "\n";
    fill(text, os.str());
  });
}

}  // extern "C"
