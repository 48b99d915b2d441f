// Copyright 2026 The wittext Authors
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

#ifndef WITTEXT_ERRORS_HPP
#define WITTEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wittext {

enum class ErrorKind {
  DivisionByZero,
  RadicandMismatch,
  PochhammerPole,
  TauZero,
  NotNilpotent,
  ShapeMismatch,
  ParseError,
  NotStrictlyUpper,
  IntegerLambda,
  WindowMismatch,
  EmptyInterior,
  DepthExceedsWindow,
  RootNotInField,
  BranchUnavailable,
  NotASquareRoot,
  SingularPochhammerBlock,
  ModuleMismatch,
  OverlapDisagreement,
  ParameterDegenerate,
  WindowTooSmall,
  DegreeTooLow,
  DegreeMismatch,
  BadFlag,
  Io,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wittext

#endif  // WITTEXT_ERRORS_HPP
