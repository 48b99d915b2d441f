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

#include "wittext/quad.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "wittext/errors.hpp"

namespace wittext {

std::int64_t square_free_part(std::int64_t n, std::int64_t& root) {
  if (n == 0) throw Error(ErrorKind::ParseError, "zero radicand");
  std::int64_t sign = n < 0 ? -1 : 1;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  std::uint64_t k = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      k *= p;
    }
  }
  root = static_cast<std::int64_t>(k);
  return sign * static_cast<std::int64_t>(m);
}

QuadScalar::QuadScalar(const Rational& a, const Rational& b, std::int64_t d)
    : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 0) throw Error(ErrorKind::ParseError, "zero radicand");
  if (sgn(b_) == 0) {
    d_ = 1;
    return;
  }
  std::int64_t root = 1;
  d_ = square_free_part(d_, root);
  b_ *= root;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

QuadScalar QuadScalar::sqrt_of(const Rational& r) {
  if (sgn(r) == 0) return QuadScalar();
  Rational s;
  if (rational_sqrt(r, s)) return QuadScalar(s);
  if (sgn(r) < 0 && rational_sqrt(-r, s)) return QuadScalar(0, s, -1);
  // sqrt(p/q) = (1/q) sqrt(p q)
  Integer pq = r.get_num() * r.get_den();
  if (!pq.fits_slong_p())
    throw Error(ErrorKind::RootNotInField, "radicand too large: " + to_string(r));
  Rational coeff(Integer(1), r.get_den());
  return QuadScalar(0, coeff, pq.get_si());
}

std::int64_t QuadScalar::common_radicand(const QuadScalar& y) const {
  if (d_ == y.d_) return d_;
  if (is_rational()) return y.d_;
  if (y.is_rational()) return d_;
  throw Error(ErrorKind::RadicandMismatch,
              "sqrt(" + std::to_string(d_) + ") vs sqrt(" + std::to_string(y.d_) + ")");
}

QuadScalar QuadScalar::conj() const { return QuadScalar(a_, -b_, d_); }

Rational QuadScalar::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

QuadScalar QuadScalar::operator-() const { return QuadScalar(-a_, -b_, d_); }

QuadScalar& QuadScalar::operator+=(const QuadScalar& y) {
  std::int64_t d = common_radicand(y);
  *this = QuadScalar(a_ + y.a_, b_ + y.b_, d);
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& y) {
  std::int64_t d = common_radicand(y);
  *this = QuadScalar(a_ - y.a_, b_ - y.b_, d);
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& y) {
  std::int64_t d = common_radicand(y);
  Rational a = a_ * y.a_ + Rational(d) * b_ * y.b_;
  Rational b = a_ * y.b_ + b_ * y.a_;
  *this = QuadScalar(a, b, d);
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& y) {
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by " + y.str());
  std::int64_t d = common_radicand(y);
  (void)d;
  Rational n = y.norm();
  QuadScalar num = *this * y.conj();
  *this = QuadScalar(num.a_ / n, num.b_ / n, num.d_);
  return *this;
}

std::string QuadScalar::str() const {
  if (is_rational()) return to_string(a_);
  std::ostringstream os;
  if (sgn(a_) != 0) os << to_string(a_) << (sgn(b_) > 0 ? "+" : "-");
  else if (sgn(b_) < 0) os << "-";
  Rational ab = abs(b_);
  if (ab != 1) os << to_string(ab) << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.str(); }

std::optional<QuadScalar> sqrt_in_field(const QuadScalar& x) {
  if (x.is_zero()) return QuadScalar();
  if (x.is_rational()) return QuadScalar::sqrt_of(x.a());
  // (p + q sqrt d)^2 = p^2 + d q^2 + 2pq sqrt d
  Rational disc;
  if (!rational_sqrt(x.norm(), disc)) return std::nullopt;
  for (int s : {1, -1}) {
    Rational p2 = (x.a() + s * disc) / 2;
    Rational p;
    if (sgn(p2) != 0 && rational_sqrt(p2, p)) {
      Rational q = x.b() / (2 * p);
      return QuadScalar(p, q, x.d());
    }
  }
  // pure q sqrt d: q^2 d = a, b = 0 excluded above
  return std::nullopt;
}

QuadScalar pochhammer(const QuadScalar& z, long n) {
  QuadScalar r(1);
  if (n >= 0) {
    for (long t = 0; t < n; ++t) r *= z + QuadScalar(t);
    return r;
  }
  QuadScalar den(1);
  for (long t = n; t < 0; ++t) {
    QuadScalar factor = z + QuadScalar(t);
    if (factor.is_zero())
      throw Error(ErrorKind::PochhammerPole,
                  "P(" + z.str() + ", " + std::to_string(n) + ") has a zero factor");
    den *= factor;
  }
  return r / den;
}

Rational odd_double_factorial(long n) {
  if (n < 0) throw Error(ErrorKind::ParseError, "odd_double_factorial needs n >= 0");
  if (n == 0) return Rational(-1);
  Rational r(1);
  for (long k = 2 * n - 3; k > 1; k -= 2) r *= k;
  return r;
}

Rational half_binomial(long n) {
  Integer fact(1), pow2(1);
  for (long k = 2; k <= n; ++k) fact *= k;
  for (long k = 0; k < n; ++k) pow2 *= 2;
  Rational r = odd_double_factorial(n) / Rational(pow2 * fact);
  if (n % 2 == 0) r = -r;
  return r;
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// "", "+", "-", "3", "-3/2", "3*" -> coefficient of sqrt
Rational sqrt_coefficient(std::string t, std::string_view whole) {
  if (!t.empty() && t.back() == '*') t.pop_back();
  if (t.empty() || t == "+") return Rational(1);
  if (t == "-") return Rational(-1);
  try {
    return parse_rational(t);
  } catch (const Error&) {
    throw Error(ErrorKind::ParseError, std::string(whole));
  }
}

}  // namespace

QuadScalar parse_quad(std::string_view text) {
  std::string s = strip(text);
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return QuadScalar(parse_rational(s));
  auto close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size())
    throw Error(ErrorKind::ParseError, std::string(text));
  Rational radicand = parse_rational(s.substr(pos + 5, close - pos - 5));
  std::string head = s.substr(0, pos);
  // split head into rational part and sqrt coefficient at the last sign
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '*') {
      split = i;
      break;
    }
  }
  Rational a(0);
  std::string coeff = head;
  if (split != std::string::npos) {
    a = parse_rational(head.substr(0, split));
    coeff = head.substr(split);
  }
  Rational b = sqrt_coefficient(coeff, text);
  QuadScalar root = QuadScalar::sqrt_of(radicand);
  return QuadScalar(a) + QuadScalar(b) * root;
}

}  // namespace wittext
