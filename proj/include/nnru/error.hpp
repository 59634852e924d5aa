// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace nnru {

enum class ErrorCode {
  kDimension,
  kParameter,
  kNotInvertible,
  kKeygenFailure,
  kEncoding,
  kDecode,
  kFormat,
  kMismatch,
  kSearchSpaceTooLarge,
  kAttackInapplicable,
  kIo,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nnru
