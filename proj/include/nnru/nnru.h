/* Copyright (C) 2026 The nnru authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the NNRU matrix-ring cryptosystem and its analysis suite.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns an nnru_status; on failure nnru_last_error() describes
 * the problem (the message is per thread and valid until the next call).
 * Output buffers are allocated by the library and released with
 * nnru_buffer_free().
 */
#ifndef NNRU_NNRU_H_
#define NNRU_NNRU_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NNRU_API __declspec(dllexport)
#else
#define NNRU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nnru_status {
  NNRU_OK = 0,
  NNRU_ERR_DIMENSION = 1,
  NNRU_ERR_PARAMETER = 2,
  NNRU_ERR_NOT_INVERTIBLE = 3,
  NNRU_ERR_KEYGEN_FAILURE = 4,
  NNRU_ERR_ENCODING = 5,
  NNRU_ERR_DECODE = 6,
  NNRU_ERR_FORMAT = 7,
  NNRU_ERR_MISMATCH = 8,
  NNRU_ERR_SEARCH_SPACE = 9,
  NNRU_ERR_ATTACK_INAPPLICABLE = 10,
  NNRU_ERR_IO = 11,
  NNRU_ERR_INVALID_ARGUMENT = 12,
  NNRU_ERR_INTERNAL = 13
} nnru_status;

typedef struct nnru_params_values {
  uint32_t n;
  uint32_t k;
  uint32_t p;
  uint32_t q;
  uint32_t d_f;
  uint32_t d_w;
  uint32_t d_c;
  uint32_t d_phi;
} nnru_params_values;

typedef struct nnru_buffer {
  uint8_t* data;
  size_t size;
} nnru_buffer;

typedef struct nnru_public_key nnru_public_key;
typedef struct nnru_private_key nnru_private_key;

NNRU_API const char* nnru_last_error(void);
NNRU_API const char* nnru_status_name(nnru_status status);
NNRU_API void nnru_buffer_free(nnru_buffer* buffer);

/* Parameters -------------------------------------------------------------- */

/* Named presets: "toy-micro", "toy", "small", "reference". */
NNRU_API nnru_status nnru_preset(const char* name, nnru_params_values* out);

/* Hard violations return NNRU_ERR_PARAMETER. report_text may be NULL. */
NNRU_API nnru_status nnru_validate_params(const nnru_params_values* params,
                                          nnru_buffer* report_text,
                                          double* margin, int* failure_prone);

/* Keys -------------------------------------------------------------------- */

NNRU_API nnru_status nnru_keygen(const nnru_params_values* params,
                                 uint64_t seed, nnru_public_key** pub,
                                 nnru_private_key** priv);
NNRU_API void nnru_public_key_free(nnru_public_key* key);
NNRU_API void nnru_private_key_free(nnru_private_key* key);

NNRU_API nnru_status nnru_public_key_params(const nnru_public_key* key,
                                            nnru_params_values* out);
NNRU_API nnru_status nnru_private_key_params(const nnru_private_key* key,
                                             nnru_params_values* out);

NNRU_API nnru_status nnru_public_key_serialize(const nnru_public_key* key,
                                               nnru_buffer* out);
NNRU_API nnru_status nnru_private_key_serialize(const nnru_private_key* key,
                                                nnru_buffer* out);

/* Key files carry only (n, k, p, q). Weights come from `weights` when
 * non-NULL, otherwise from the preset with the same ring, otherwise zero. */
NNRU_API nnru_status nnru_public_key_parse(const uint8_t* data, size_t size,
                                           const nnru_params_values* weights,
                                           nnru_public_key** out);
NNRU_API nnru_status nnru_private_key_parse(const uint8_t* data, size_t size,
                                            const nnru_params_values* weights,
                                            nnru_private_key** out);

/* First 8 bytes of SHA-256 over the serialized key, as 16 hex digits. */
NNRU_API nnru_status nnru_public_key_fingerprint(const nnru_public_key* key,
                                                 char out[17]);

/* Messages ---------------------------------------------------------------- */

/* Encodes bytes as trits (p = 3), encrypts every block and returns a
 * serialized ciphertext object. Block i draws its blinding from a stream
 * derived from (seed, i). */
NNRU_API nnru_status nnru_encrypt_message(const nnru_public_key* key,
                                          const uint8_t* message, size_t size,
                                          uint64_t seed,
                                          nnru_buffer* ciphertext);
NNRU_API nnru_status nnru_decrypt_message(const nnru_private_key* key,
                                          const uint8_t* ciphertext,
                                          size_t size, nnru_buffer* message);

/* Analysis ---------------------------------------------------------------- */
/* Each runner writes a plain-text report and a CSV document (either buffer
 * may be NULL). `jobs` is the number of worker threads for trials. */

NNRU_API nnru_status nnru_analyze_gamma(uint32_t n, uint32_t k, uint32_t d,
                                        uint32_t trials, uint64_t seed,
                                        uint32_t jobs, nnru_buffer* text,
                                        nnru_buffer* csv);
NNRU_API nnru_status nnru_analyze_failure(const nnru_params_values* params,
                                          uint32_t trials, uint64_t seed,
                                          uint32_t jobs, nnru_buffer* text,
                                          nnru_buffer* csv);
NNRU_API nnru_status nnru_analyze_security(const nnru_params_values* params,
                                           nnru_buffer* text, nnru_buffer* csv);
NNRU_API nnru_status nnru_analyze_membership(const nnru_params_values* params,
                                             uint32_t prime, uint32_t trials,
                                             uint64_t seed, uint32_t jobs,
                                             nnru_buffer* text,
                                             nnru_buffer* csv);
NNRU_API nnru_status nnru_bench(const nnru_params_values* params,
                                uint32_t trials, uint64_t seed,
                                nnru_buffer* text, nnru_buffer* csv);

/* Attacks. With key == NULL a key pair is generated from (params, seed) and
 * the result is checked against the planted private values; otherwise the
 * supplied public key is attacked. */
NNRU_API nnru_status nnru_attack_brute(const nnru_params_values* params,
                                       const nnru_public_key* key,
                                       uint64_t budget, uint64_t seed,
                                       nnru_buffer* text);
NNRU_API nnru_status nnru_attack_mta(const nnru_params_values* params,
                                     const nnru_public_key* key,
                                     uint32_t count, uint64_t seed,
                                     nnru_buffer* text);

#ifdef __cplusplus
}
#endif

#endif /* NNRU_NNRU_H_ */
