// Copyright 2026 The bsf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace bsf {

/// Error categories, doubling as the CLI process exit codes.
enum class ErrorKind : int {
  invalid_input = 2,   // malformed input, bad dimensions, parse failures
  size_limit = 3,      // basis / matrix / group size guards
  inapplicable = 4,    // the stabilizer formalism does not apply here
  inconsistent = 5,    // an internal cross-check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

#define BSF_DEFINE_ERROR(NAME, KIND)                          \
  struct NAME : Error {                                       \
    explicit NAME(const std::string& msg)                     \
        : Error(ErrorKind::KIND, std::string(#NAME ": ") + msg) {} \
  }

BSF_DEFINE_ERROR(ParseError, invalid_input);
BSF_DEFINE_ERROR(NonSquareMatrix, invalid_input);
BSF_DEFINE_ERROR(NotUnitary, invalid_input);
BSF_DEFINE_ERROR(IndexOutOfRange, invalid_input);
BSF_DEFINE_ERROR(DuplicateMode, invalid_input);
BSF_DEFINE_ERROR(PhotonNumberMismatch, invalid_input);
BSF_DEFINE_ERROR(InvalidPhotonCount, invalid_input);

BSF_DEFINE_ERROR(SizeLimit, size_limit);
BSF_DEFINE_ERROR(GroupTooLarge, size_limit);

BSF_DEFINE_ERROR(NotMonomial, inapplicable);
BSF_DEFINE_ERROR(NotDiagonalGroup, inapplicable);
BSF_DEFINE_ERROR(NonAbelianGroup, inapplicable);
BSF_DEFINE_ERROR(InexactPhase, inapplicable);
BSF_DEFINE_ERROR(InconsistentCharacter, inapplicable);
BSF_DEFINE_ERROR(NotRankOne, inapplicable);

BSF_DEFINE_ERROR(InternalCheck, inconsistent);

#undef BSF_DEFINE_ERROR

}  // namespace bsf
