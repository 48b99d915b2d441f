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

#ifndef WITTEXT_POLY_HPP
#define WITTEXT_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "wittext/errors.hpp"
#include "wittext/quad.hpp"
#include "wittext/rational.hpp"

namespace wittext {

// univariate polynomial, coefficients low degree first, no trailing zeros
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(const K& c) {  // NOLINT
    if (!wittext::is_zero(c)) c_.push_back(c);
  }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : K(0); }
  K lead() const { return c_.empty() ? K(0) : c_.back(); }

  K eval(const K& x) const {
    K r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r(*this);
    for (K& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // a = q b + r
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    Poly r = a;
    std::vector<K> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, K(0));
    K lb = b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      K f = r.lead() / lb;
      q[shift] = f;
      std::vector<K> sub(shift + b.c_.size(), K(0));
      for (std::size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = f * b.c_[i];
      r -= Poly(std::move(sub));
    }
    return {Poly(std::move(q)), r};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly r(*this);
    K inv = K(1) / lead();
    for (K& x : r.c_) x *= inv;
    return r;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const K& c = c_[k];
      if (wittext::is_zero(c)) continue;
      std::string cs = coeff_string(c);
      bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      if (neg) cs = cs.substr(1);
      bool paren = cs.find_first_of("+-", 1) != std::string::npos;
      if (k == 0) {
        out += paren ? "(" + cs + ")" : cs;
        continue;
      }
      if (cs != "1") out += (paren ? "(" + cs + ")" : cs) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  static std::string coeff_string(const Rational& c) { return to_string(c); }
  static std::string coeff_string(const QuadScalar& c) { return c.str(); }
  template <class T>
  static std::string coeff_string(const T& c) { return c.str(); }

  void trim() {
    while (!c_.empty() && wittext::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
bool is_zero(const Poly<K>& p) { return p.is_zero(); }

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = Poly<K>::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// determinant over a commutative ring by cofactor expansion (small sizes)
template <class R>
R small_determinant(const std::vector<std::vector<R>>& m) {
  std::size_t n = m.size();
  if (n == 0) return R(1);
  if (n == 1) return m[0][0];
  R det(0);
  for (std::size_t col = 0; col < n; ++col) {
    if (wittext::is_zero(m[0][col])) continue;
    std::vector<std::vector<R>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<R> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    R term = m[0][col] * small_determinant(minor);
    if (col % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

// rational functions over Q in one variable; den monic, gcd(num, den) = 1
class RatFunc {
 public:
  using P = Poly<Rational>;

  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(int v) : RatFunc(Rational(v)) {}  // NOLINT
  RatFunc(long v) : RatFunc(Rational(v)) {}  // NOLINT
  RatFunc(const Rational& v) : num_(v), den_(Rational(1)) {}  // NOLINT
  RatFunc(const P& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RatFunc(const P& num, const P& den);

  static RatFunc var() { return RatFunc(P::x()); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational eval(const Rational& x) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str(const std::string& var = "lambda") const;

 private:
  RatFunc(P num, P den, bool) : num_(std::move(num)), den_(std::move(den)) {}

  P num_;
  P den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

}  // namespace wittext

#endif  // WITTEXT_POLY_HPP
