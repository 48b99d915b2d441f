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

#include "wittext/poly.hpp"

namespace wittext {

RatFunc::RatFunc(const P& num, const P& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = P();
    den_ = P(Rational(1));
    return;
  }
  P g = poly_gcd(num, den);
  P n = P::divmod(num, g).first;
  P d = P::divmod(den, g).first;
  Rational lead = d.lead();
  Rational inv = 1 / lead;
  num_ = n * P(inv);
  den_ = d * P(inv);
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (sgn(d) == 0) throw Error(ErrorKind::DivisionByZero, "pole of " + str() + " at " + to_string(x));
  return num_.eval(x) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.degree() == 0 && den_.lead() == 1) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace wittext
