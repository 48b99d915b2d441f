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

#ifndef WITTEXT_RATIONAL_HPP
#define WITTEXT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wittext {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// "p" or "p/q" in lowest terms
std::string to_string(const Rational& x);

// accepts "p", "p/q", "-p/q" and plain decimals such as "0.25"
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);

// exact square root when x is the square of a rational
bool rational_sqrt(const Rational& x, Rational& out);

}  // namespace wittext

#endif  // WITTEXT_RATIONAL_HPP
