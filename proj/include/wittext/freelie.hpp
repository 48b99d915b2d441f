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

#ifndef WITTEXT_FREELIE_HPP
#define WITTEXT_FREELIE_HPP

#include <map>
#include <string>
#include <vector>

#include "wittext/matrix.hpp"
#include "wittext/rational.hpp"
#include "wittext/serialize.hpp"

namespace wittext::freelie {

// letters 1 and 2 stand for x_1 and x_2; a letter's value is its degree
using Word = std::vector<int>;

int word_degree(const Word& w);
std::string word_name(const Word& w);
bool is_lyndon(const Word& w);

// element of the free Lie algebra, stored through its image in the free associative algebra
struct LieElement {
  std::map<Word, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  // -1 for zero, -2 when not homogeneous
  int degree() const;
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms == b.terms; }
  friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }
};

LieElement letter(int x);
LieElement lie_bracket(const LieElement& u, const LieElement& v);

struct LyndonBasis {
  int degree = 0;
  std::vector<Word> words;
  std::vector<std::string> brackets;
  std::vector<LieElement> elements;
};

const LyndonBasis& lyndon_basis(int degree);
// coordinates over lyndon_basis(degree); throws ParseError if u is not a Lie element of that degree
std::vector<Rational> coordinates(const LieElement& u, int degree);
LieElement from_coordinates(const std::vector<Rational>& c, int degree);

// x_{2+i} = (1/i!) ad(-x_1)^i x_2; x(1) = x_1
LieElement gen_x(int i);
LieElement x(int k);

// r_{2+i,2+j} = [x_{2+i}, x_{2+j}] - (i-j) x_{i+j+4}; i, j >= -1 allowed
LieElement relation(int i, int j);
LieElement standard_relation(int i, int j);
LieElement reduced_relation(int k);
// r_i^(n) = r_{2+i, 2+n-4-i}
LieElement relation_n(int i, int n);

struct Subspace {
  int degree = 0;
  std::vector<std::vector<Rational>> basis;  // reduced echelon rows
  std::size_t dim() const { return basis.size(); }
};

Subspace span(const std::vector<LieElement>& elems, int degree);
Subspace relation_space(int n);
bool membership(const LieElement& u, const Subspace& s);

enum class Sl2 { E, F, H };
LieElement sl2_act(Sl2 g, const LieElement& u);
// constant in h.w = c * deg(w) * w
constexpr int kHScale = 2;

struct IdealResult {
  Subspace component;
  bool stable = true;
  std::map<int, std::size_t> dims;
};

IdealResult ideal_closure(const std::vector<LieElement>& gens, int degree, int max_degree);
// throws WindowTooSmall when the closure at degree still grows past max_degree
Subspace ideal_component(const std::vector<LieElement>& gens, int degree, int max_degree);

// "r3" -> reduced_relation(3), "r_{2,4}" not supported
LieElement parse_relation(const std::string& name);

json subspace_to_json(const Subspace& s);
json element_to_json(const LieElement& u);

// matrix of e: R_n -> R_{n+1} (or f: R_n -> R_{n-1}) in the spanning sets {r_i^(n)}, i < n-4-i
struct MapCheck {
  int n = 0;
  bool matches = true;
  std::vector<std::string> mismatches;
};
MapCheck check_e_formula(int n);
MapCheck check_f_formula(int n);

}  // namespace wittext::freelie

#endif  // WITTEXT_FREELIE_HPP
