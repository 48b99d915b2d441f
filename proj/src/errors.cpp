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

#include "wittext/errors.hpp"

namespace wittext {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::RadicandMismatch: return "RadicandMismatch";
    case ErrorKind::PochhammerPole: return "PochhammerPole";
    case ErrorKind::TauZero: return "TauZero";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotStrictlyUpper: return "NotStrictlyUpper";
    case ErrorKind::IntegerLambda: return "IntegerLambda";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::EmptyInterior: return "EmptyInterior";
    case ErrorKind::DepthExceedsWindow: return "DepthExceedsWindow";
    case ErrorKind::RootNotInField: return "RootNotInField";
    case ErrorKind::BranchUnavailable: return "BranchUnavailable";
    case ErrorKind::NotASquareRoot: return "NotASquareRoot";
    case ErrorKind::SingularPochhammerBlock: return "SingularPochhammerBlock";
    case ErrorKind::ModuleMismatch: return "ModuleMismatch";
    case ErrorKind::OverlapDisagreement: return "OverlapDisagreement";
    case ErrorKind::ParameterDegenerate: return "ParameterDegenerate";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::BadFlag: return "BadFlag";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace wittext
