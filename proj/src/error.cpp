// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0

#include "nnru/error.hpp"

namespace nnru {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimension: return "dimension error";
    case ErrorCode::kParameter: return "parameter error";
    case ErrorCode::kNotInvertible: return "not invertible";
    case ErrorCode::kKeygenFailure: return "keygen failure";
    case ErrorCode::kEncoding: return "encoding error";
    case ErrorCode::kDecode: return "decode error";
    case ErrorCode::kFormat: return "format error";
    case ErrorCode::kMismatch: return "parameter mismatch";
    case ErrorCode::kSearchSpaceTooLarge: return "search space too large";
    case ErrorCode::kAttackInapplicable: return "attack inapplicable";
    case ErrorCode::kIo: return "I/O error";
  }
  return "unknown error";
}

}  // namespace nnru
