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

#ifndef WITTEXT_QUAD_HPP
#define WITTEXT_QUAD_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "wittext/rational.hpp"

namespace wittext {

// a + b*sqrt(d); d square-free and nonzero, d == 1 iff b == 0
class QuadScalar {
 public:
  QuadScalar() : a_(0), b_(0), d_(1) {}
  QuadScalar(int v) : a_(v), b_(0), d_(1) {}  // NOLINT
  QuadScalar(long v) : a_(v), b_(0), d_(1) {}  // NOLINT
  QuadScalar(const Rational& a) : a_(a), b_(0), d_(1) { a_.canonicalize(); }  // NOLINT
  QuadScalar(const Rational& a, const Rational& b, std::int64_t d);

  // sqrt(r) in canonical form
  static QuadScalar sqrt_of(const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadScalar conj() const;
  Rational norm() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& y);
  QuadScalar& operator-=(const QuadScalar& y);
  QuadScalar& operator*=(const QuadScalar& y);
  QuadScalar& operator/=(const QuadScalar& y);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

  std::string str() const;

 private:
  std::int64_t common_radicand(const QuadScalar& y) const;

  Rational a_;
  Rational b_;
  std::int64_t d_;
};

inline bool is_zero(const QuadScalar& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

// square-free part s of n with n = s * k^2, returns k through `root`
std::int64_t square_free_part(std::int64_t n, std::int64_t& root);

// a square root of x lying in Q(sqrt d) for x's d (or a new quadratic field
// when x is rational); nullopt when no such root exists
std::optional<QuadScalar> sqrt_in_field(const QuadScalar& x);

// P(z, n)
QuadScalar pochhammer(const QuadScalar& z, long n);

// (2n-3)!! with (-3)!! = -1, (-1)!! = 1
Rational odd_double_factorial(long n);

// binom(1/2, n)
Rational half_binomial(long n);

QuadScalar parse_quad(std::string_view text);

}  // namespace wittext

#endif  // WITTEXT_QUAD_HPP
