// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nnru/nnru.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitCrypto = 3;

int exit_code_for(nnru_status status) {
  switch (status) {
    case NNRU_OK:
      return kExitOk;
    case NNRU_ERR_IO:
    case NNRU_ERR_FORMAT:
    case NNRU_ERR_MISMATCH:
      return kExitIo;
    case NNRU_ERR_KEYGEN_FAILURE:
    case NNRU_ERR_ATTACK_INAPPLICABLE:
    case NNRU_ERR_NOT_INVERTIBLE:
    case NNRU_ERR_DECODE:
      return kExitCrypto;
    default:
      return kExitUsage;
  }
}

// Carries a C API failure up to main.
struct Failure {
  nnru_status status;
  std::string message;
};

void check(nnru_status status, const std::string& context) {
  if (status == NNRU_OK) return;
  std::string detail = nnru_last_error();
  if (detail.empty()) detail = nnru_status_name(status);
  throw Failure{status, context + ": " + detail};
}

// Owns an nnru_buffer.
class Buffer {
 public:
  Buffer() = default;
  Buffer(const Buffer&) = delete;
  Buffer& operator=(const Buffer&) = delete;
  ~Buffer() { nnru_buffer_free(&buf_); }

  nnru_buffer* get() { return &buf_; }
  const std::uint8_t* data() const { return buf_.data; }
  std::size_t size() const { return buf_.size; }
  std::string str() const {
    return buf_.size ? std::string(reinterpret_cast<const char*>(buf_.data), buf_.size)
                     : std::string();
  }

 private:
  nnru_buffer buf_{nullptr, 0};
};

struct PublicKey {
  nnru_public_key* ptr = nullptr;
  ~PublicKey() { nnru_public_key_free(ptr); }
};

struct PrivateKey {
  nnru_private_key* ptr = nullptr;
  ~PrivateKey() { nnru_private_key_free(ptr); }
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{NNRU_ERR_IO, "cannot open '" + path + "' for reading"};
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Failure{NNRU_ERR_IO, "error reading '" + path + "'"};
  return bytes;
}

void write_file(const std::string& path, const std::uint8_t* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{NNRU_ERR_IO, "cannot open '" + path + "' for writing"};
  if (size) out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(size));
  out.flush();
  if (!out) throw Failure{NNRU_ERR_IO, "error writing '" + path + "'"};
}

void write_file(const std::string& path, const std::string& text) {
  write_file(path, reinterpret_cast<const std::uint8_t*>(text.data()), text.size());
}

struct ParamFlags {
  std::string preset;
  std::uint32_t n = 0, k = 0, p = 0, q = 0, d_f = 0, d_w = 0, d_c = 0, d_phi = 0;
  // One group per subcommand; only the parsed subcommand has counted options.
  std::vector<CLI::Option*> presets;
  std::vector<std::vector<CLI::Option*>> groups;

  void attach(CLI::App* app) {
    presets.push_back(app->add_option("--preset", preset,
                                      "toy-micro | toy | small | reference (default toy)"));
    groups.push_back({
        app->add_option("--n", n, "ring degree"),
        app->add_option("--k", k, "matrix dimension"),
        app->add_option("--p", p, "small modulus"),
        app->add_option("--q", q, "large modulus"),
        app->add_option("--d-f", d_f, "weight of f and g"),
        app->add_option("--d-w", d_w, "weight of w"),
        app->add_option("--d-c", d_c, "weight of c"),
        app->add_option("--d-phi", d_phi, "weight of phi"),
    });
  }

  bool given(std::size_t field) const {
    for (const auto& g : groups) {
      if (g[field]->count()) return true;
    }
    return false;
  }

  bool explicit_given() const {
    for (auto* o : presets) {
      if (o->count()) return true;
    }
    for (std::size_t i = 0; i < 8; ++i) {
      if (given(i)) return true;
    }
    return false;
  }

  nnru_params_values resolve() const {
    nnru_params_values v{};
    const std::string name = preset.empty() ? "toy" : preset;
    check(nnru_preset(name.c_str(), &v), "preset");
    std::uint32_t* fields[] = {&v.n, &v.k, &v.p, &v.q, &v.d_f, &v.d_w, &v.d_c, &v.d_phi};
    const std::uint32_t values[] = {n, k, p, q, d_f, d_w, d_c, d_phi};
    for (std::size_t i = 0; i < 8; ++i) {
      if (given(i)) *fields[i] = values[i];
    }
    return v;
  }
};

struct SeedFlag {
  std::uint64_t value = 0;
  std::vector<CLI::Option*> opts;

  void attach(CLI::App* app) {
    opts.push_back(app->add_option("--seed", value, "64-bit seed (default: $NNRU_SEED, else random)"));
  }

  std::uint64_t resolve() const {
    std::uint64_t seed = value;
    bool given = false;
    for (auto* o : opts) given = given || o->count() > 0;
    if (!given) {
      if (const char* env = std::getenv("NNRU_SEED"); env && *env) {
        try {
          std::size_t used = 0;
          seed = std::stoull(env, &used, 0);
          if (env[used] != '\0') throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
          throw Failure{NNRU_ERR_INVALID_ARGUMENT,
                        std::string("NNRU_SEED is not an unsigned integer: ") + env};
        }
      } else {
        std::random_device rd;
        seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
      }
    }
    std::cout << "seed: " << seed << "\n";
    return seed;
  }
};

void emit_report(const Buffer& text, const Buffer& csv, const std::string& out_path) {
  std::cout << text.str();
  if (!out_path.empty()) {
    write_file(out_path, csv.str());
    std::cout << "csv written to " << out_path << "\n";
  }
}

void print_validation(const nnru_params_values& params) {
  Buffer report;
  double margin = 0;
  int prone = 0;
  check(nnru_validate_params(&params, report.get(), &margin, &prone), "invalid parameters");
  std::cout << report.str();
}

std::string fingerprint(const nnru_public_key* key) {
  char fp[17] = {};
  check(nnru_public_key_fingerprint(key, fp), "fingerprint");
  return fp;
}

void load_public(const std::string& path, const ParamFlags& pf, PublicKey& key) {
  const auto bytes = read_file(path);
  std::optional<nnru_params_values> weights;
  if (pf.explicit_given()) weights = pf.resolve();
  check(nnru_public_key_parse(bytes.data(), bytes.size(),
                              weights ? &*weights : nullptr, &key.ptr),
        "public key '" + path + "'");
}

void load_private(const std::string& path, const ParamFlags& pf, PrivateKey& key) {
  const auto bytes = read_file(path);
  std::optional<nnru_params_values> weights;
  if (pf.explicit_given()) weights = pf.resolve();
  check(nnru_private_key_parse(bytes.data(), bytes.size(),
                               weights ? &*weights : nullptr, &key.ptr),
        "private key '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NNRU matrix-ring public-key cryptosystem: keys, files and experiments"};
  app.require_subcommand(1);

  ParamFlags pf;
  SeedFlag seed;
  std::string pub_path = "nnru.pub";
  std::string priv_path = "nnru.priv";
  std::string in_path;
  std::string output_path;
  std::string csv_path;
  std::uint32_t trials = 0;
  std::uint32_t jobs = 1;
  std::uint32_t prime = 257;
  std::uint32_t count = 5;
  std::uint32_t gamma_d = 0;
  std::uint64_t budget = 10'000'000;

  auto* keygen = app.add_subcommand("keygen", "generate a key pair");
  pf.attach(keygen);
  seed.attach(keygen);
  keygen->add_option("--pub", pub_path, "public key output path");
  keygen->add_option("--priv", priv_path, "private key output path");

  auto* encrypt = app.add_subcommand("encrypt", "encrypt a file");
  pf.attach(encrypt);
  seed.attach(encrypt);
  encrypt->add_option("--pub", pub_path, "public key path");
  encrypt->add_option("--in", in_path, "plaintext file")->required();
  encrypt->add_option("--output", output_path, "ciphertext file")->required();

  auto* decrypt = app.add_subcommand("decrypt", "decrypt a file");
  pf.attach(decrypt);
  decrypt->add_option("--priv", priv_path, "private key path");
  decrypt->add_option("--in", in_path, "ciphertext file")->required();
  decrypt->add_option("--output", output_path, "plaintext file")->required();

  auto* analyze = app.add_subcommand("analyze", "run an analysis experiment");
  analyze->require_subcommand(1);
  auto* gamma = analyze->add_subcommand("gamma", "estimate the norm-product constant");
  auto* failure = analyze->add_subcommand("failure", "measure the decryption failure rate");
  auto* security = analyze->add_subcommand("security", "count key and message spaces");
  auto* membership = analyze->add_subcommand("membership", "shift-module membership test");
  for (auto* sub : {gamma, failure, security, membership}) {
    pf.attach(sub);
    sub->add_option("--out", csv_path, "CSV report path");
  }
  for (auto* sub : {gamma, failure, membership}) {
    seed.attach(sub);
    sub->add_option("--trials", trials, "number of trials");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  }
  gamma->add_option("--d", gamma_d, "ternary weight (default n/3)");
  membership->add_option("--prime", prime, "prime modulus for the linear solve");

  auto* bench = app.add_subcommand("bench", "compare NNRU with NTRU at N = n k^2");
  pf.attach(bench);
  seed.attach(bench);
  bench->add_option("--trials", trials, "timing samples");
  bench->add_option("--out", csv_path, "CSV report path");

  auto* attack = app.add_subcommand("attack", "run an attack");
  attack->require_subcommand(1);
  auto* brute = attack->add_subcommand("brute", "exhaustive key search (toy sizes)");
  auto* mta = attack->add_subcommand("mta", "multiple-transmission attack");
  for (auto* sub : {brute, mta}) {
    pf.attach(sub);
    seed.attach(sub);
    sub->add_option("--pub", pub_path, "attack this public key instead of a fresh one");
  }
  brute->add_option("--budget", budget, "maximum candidates per search");
  mta->add_option("--count", count, "ciphertexts of the same message")
      ->check(CLI::Range(2u, 1000u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  auto pick_trials = [&](std::uint32_t fallback) { return trials ? trials : fallback; };

  try {
    if (keygen->parsed()) {
      const nnru_params_values params = pf.resolve();
      print_validation(params);
      const std::uint64_t s = seed.resolve();
      PublicKey pub;
      PrivateKey priv;
      check(nnru_keygen(&params, s, &pub.ptr, &priv.ptr), "keygen");
      Buffer pub_bytes, priv_bytes;
      check(nnru_public_key_serialize(pub.ptr, pub_bytes.get()), "serialize");
      check(nnru_private_key_serialize(priv.ptr, priv_bytes.get()), "serialize");
      write_file(pub_path, pub_bytes.data(), pub_bytes.size());
      write_file(priv_path, priv_bytes.data(), priv_bytes.size());
      std::cout << "public key:  " << pub_path << "\n"
                << "private key: " << priv_path << "\n"
                << "fingerprint: " << fingerprint(pub.ptr) << "\n";
    } else if (encrypt->parsed()) {
      PublicKey pub;
      load_public(pub_path, pf, pub);
      const std::uint64_t s = seed.resolve();
      const auto message = read_file(in_path);
      Buffer ct;
      check(nnru_encrypt_message(pub.ptr, message.data(), message.size(), s, ct.get()),
            "encrypt");
      write_file(output_path, ct.data(), ct.size());
      std::cout << "encrypted " << message.size() << " bytes with key "
                << fingerprint(pub.ptr) << " to " << output_path << "\n";
    } else if (decrypt->parsed()) {
      PrivateKey priv;
      load_private(priv_path, pf, priv);
      const auto ct = read_file(in_path);
      Buffer message;
      check(nnru_decrypt_message(priv.ptr, ct.data(), ct.size(), message.get()), "decrypt");
      write_file(output_path, message.data(), message.size());
      std::cout << "decrypted " << message.size() << " bytes to " << output_path << "\n";
    } else if (gamma->parsed()) {
      const nnru_params_values params = pf.resolve();
      const std::uint32_t k = pf.given(1) ? params.k : 1;
      const std::uint32_t d = gamma_d ? gamma_d : params.n / 3;
      const std::uint64_t s = seed.resolve();
      Buffer text, csv;
      check(nnru_analyze_gamma(params.n, k, d, pick_trials(1000), s, jobs, text.get(),
                               csv.get()),
            "analyze gamma");
      emit_report(text, csv, csv_path);
    } else if (failure->parsed()) {
      const nnru_params_values params = pf.resolve();
      const std::uint64_t s = seed.resolve();
      Buffer text, csv;
      check(nnru_analyze_failure(&params, pick_trials(1000), s, jobs, text.get(), csv.get()),
            "analyze failure");
      emit_report(text, csv, csv_path);
    } else if (security->parsed()) {
      const nnru_params_values params = pf.resolve();
      Buffer text, csv;
      check(nnru_analyze_security(&params, text.get(), csv.get()), "analyze security");
      emit_report(text, csv, csv_path);
    } else if (membership->parsed()) {
      const nnru_params_values params = pf.resolve();
      const std::uint64_t s = seed.resolve();
      Buffer text, csv;
      check(nnru_analyze_membership(&params, prime, pick_trials(5), s, jobs, text.get(),
                                    csv.get()),
            "analyze membership");
      emit_report(text, csv, csv_path);
    } else if (bench->parsed()) {
      const nnru_params_values params = pf.resolve();
      const std::uint64_t s = seed.resolve();
      Buffer text, csv;
      check(nnru_bench(&params, pick_trials(20), s, text.get(), csv.get()), "bench");
      emit_report(text, csv, csv_path);
    } else if (brute->parsed() || mta->parsed()) {
      const bool is_brute = brute->parsed();
      CLI::App* sub = is_brute ? brute : mta;
      const nnru_params_values params = pf.resolve();
      const std::uint64_t s = seed.resolve();
      PublicKey pub;
      if (sub->get_option("--pub")->count()) load_public(pub_path, pf, pub);
      Buffer text;
      if (is_brute) {
        check(nnru_attack_brute(&params, pub.ptr, budget, s, text.get()), "attack brute");
      } else {
        check(nnru_attack_mta(&params, pub.ptr, count, s, text.get()), "attack mta");
      }
      std::cout << text.str();
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return exit_code_for(f.status);
  }
  return kExitOk;
}
