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

#include "wittext/rational.hpp"

#include <cctype>

#include "wittext/errors.hpp"

namespace wittext {

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw Error(ErrorKind::ParseError, std::string(whole));
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw Error(ErrorKind::ParseError, std::string(whole));
  std::string t(s);
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    Integer p = parse_integer(s.substr(0, slash), text);
    Integer q = parse_integer(s.substr(slash + 1), text);
    if (q == 0) throw Error(ErrorKind::DivisionByZero, std::string(text));
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    bool neg = s[0] == '-';
    std::string_view body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
    dot = body.find('.');
    std::string digits = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
    if (digits.empty()) throw Error(ErrorKind::ParseError, std::string(text));
    Integer num = parse_integer(digits, text);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dot - 1);
    Rational r(neg ? Integer(-num) : num, den);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(s, text));
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

bool rational_sqrt(const Rational& x, Rational& out) {
  if (sgn(x) < 0) return false;
  if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(x.get_den().get_mpz_t()))
    return false;
  Integer p, q;
  mpz_sqrt(p.get_mpz_t(), x.get_num().get_mpz_t());
  mpz_sqrt(q.get_mpz_t(), x.get_den().get_mpz_t());
  out = Rational(p, q);
  out.canonicalize();
  return true;
}

}  // namespace wittext
