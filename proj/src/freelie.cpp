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

#include "wittext/freelie.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace wittext::freelie {

int word_degree(const Word& w) {
  int d = 0;
  for (int x : w) d += x;
  return d;
}

std::string word_name(const Word& w) {
  std::string s;
  for (int x : w) s += "x" + std::to_string(x);
  return s;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  return true;
}

int LieElement::degree() const {
  if (terms.empty()) return -1;
  int d = word_degree(terms.begin()->first);
  for (const auto& [w, c] : terms)
    if (word_degree(w) != d) return -2;
  return d;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [w, c] : o.terms) {
    auto& slot = terms[w];
    slot += c;
    if (sgn(slot) == 0) terms.erase(w);
  }
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [w, c] : o.terms) {
    auto& slot = terms[w];
    slot -= c;
    if (sgn(slot) == 0) terms.erase(w);
  }
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [w, c] : terms) c *= s;
  return *this;
}

LieElement letter(int x) {
  if (x != 1 && x != 2) throw Error(ErrorKind::ParseError, "alphabet is {x1, x2}");
  LieElement u;
  u.terms[{x}] = 1;
  return u;
}

namespace {

LieElement product(const LieElement& u, const LieElement& v) {
  LieElement r;
  for (const auto& [a, ca] : u.terms)
    for (const auto& [b, cb] : v.terms) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      auto& slot = r.terms[w];
      slot += ca * cb;
      if (sgn(slot) == 0) r.terms.erase(w);
    }
  return r;
}

void words_of_degree(int n, Word& prefix, std::vector<Word>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int x : {1, 2}) {
    if (x > n) continue;
    prefix.push_back(x);
    words_of_degree(n - x, prefix, out);
    prefix.pop_back();
  }
}

// split w = uv with v the longest proper Lyndon suffix
std::pair<Word, Word> standard_factorization(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + i), v};
  }
  throw Error(ErrorKind::ParseError, "no standard factorization for " + word_name(w));
}

std::string bracket_string(const Word& w) {
  if (w.size() == 1) return "x" + std::to_string(w[0]);
  auto [u, v] = standard_factorization(w);
  return "[" + bracket_string(u) + ", " + bracket_string(v) + "]";
}

std::mutex cache_mutex;
std::map<int, LyndonBasis> basis_cache;
std::map<Word, LieElement> f_cache;

LieElement bracketing(const Word& w) {
  if (w.size() == 1) return letter(w[0]);
  auto [u, v] = standard_factorization(w);
  return lie_bracket(bracketing(u), bracketing(v));
}

LieElement f_on_lyndon(const Word& w);

// [c x_0, P(w)] = -c deg(w) P(w)
LieElement f_on_lyndon(const Word& w) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = f_cache.find(w);
    if (it != f_cache.end()) return it->second;
  }
  LieElement r;
  if (w == Word{2}) {
    r = Rational(-3) * letter(1);
  } else if (w == Word{1}) {
    throw Error(ErrorKind::DegreeTooLow, "f(x1) leaves the free part");
  } else {
    auto [u, v] = standard_factorization(w);
    LieElement pu = bracketing(u);
    LieElement pv = bracketing(v);
    // f(x1) = -2 x0
    if (u == Word{1}) r += Rational(2 * word_degree(v)) * pv;
    else r += lie_bracket(f_on_lyndon(u), pv);
    if (v == Word{1}) r -= Rational(2 * word_degree(u)) * pu;
    else r += lie_bracket(pu, f_on_lyndon(v));
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  f_cache[w] = r;
  return r;
}

std::vector<Rational> reduce(const Subspace& s, std::vector<Rational> v) {
  for (const auto& row : s.basis) {
    std::size_t p = 0;
    while (sgn(row[p]) == 0) ++p;
    if (sgn(v[p]) != 0) {
      Rational c = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * row[j];
    }
  }
  return v;
}

bool insert(Subspace& s, std::vector<Rational> v) {
  v = reduce(s, std::move(v));
  std::size_t p = 0;
  while (p < v.size() && sgn(v[p]) == 0) ++p;
  if (p == v.size()) return false;
  Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  for (auto& row : s.basis)
    if (sgn(row[p]) != 0) {
      Rational c = row[p];
      for (std::size_t j = 0; j < v.size(); ++j) row[j] -= c * v[j];
    }
  s.basis.push_back(std::move(v));
  return true;
}

void sort_rows(Subspace& s) {
  auto pivot = [](const std::vector<Rational>& r) {
    std::size_t p = 0;
    while (p < r.size() && sgn(r[p]) == 0) ++p;
    return p;
  };
  std::sort(s.basis.begin(), s.basis.end(),
            [&](const auto& a, const auto& b) { return pivot(a) < pivot(b); });
}

}  // namespace

LieElement lie_bracket(const LieElement& u, const LieElement& v) { return product(u, v) - product(v, u); }

const LyndonBasis& lyndon_basis(int degree) {
  if (degree < 1) throw Error(ErrorKind::DegreeTooLow, "degree must be >= 1");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = basis_cache.find(degree);
    if (it != basis_cache.end()) return it->second;
  }
  LyndonBasis b;
  b.degree = degree;
  std::vector<Word> all;
  Word prefix;
  words_of_degree(degree, prefix, all);
  std::sort(all.begin(), all.end());
  for (const auto& w : all)
    if (is_lyndon(w)) {
      b.words.push_back(w);
      b.brackets.push_back(bracket_string(w));
      b.elements.push_back(bracketing(w));
    }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return basis_cache.emplace(degree, std::move(b)).first->second;
}

std::vector<Rational> coordinates(const LieElement& u, int degree) {
  const LyndonBasis& b = lyndon_basis(degree);
  std::vector<Rational> c(b.words.size(), Rational(0));
  LieElement rest = u;
  while (!rest.is_zero()) {
    const auto& [w, coef] = *rest.terms.begin();
    if (word_degree(w) != degree) throw Error(ErrorKind::DegreeMismatch, "term " + word_name(w) + " off degree");
    auto it = std::lower_bound(b.words.begin(), b.words.end(), w);
    if (it == b.words.end() || *it != w)
      throw Error(ErrorKind::ParseError, "not a Lie element: leading word " + word_name(w) + " is not Lyndon");
    std::size_t idx = it - b.words.begin();
    Rational k = coef;
    c[idx] = k;
    rest -= k * b.elements[idx];
  }
  return c;
}

LieElement from_coordinates(const std::vector<Rational>& c, int degree) {
  const LyndonBasis& b = lyndon_basis(degree);
  LieElement r;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) r += c[i] * b.elements[i];
  return r;
}

LieElement x(int k) {
  if (k == 1) return letter(1);
  return gen_x(k - 2);
}

LieElement gen_x(int i) {
  if (i < 0) throw Error(ErrorKind::DegreeTooLow, "gen_x needs i >= 0");
  LieElement r = letter(2);
  LieElement neg_x1 = Rational(-1) * letter(1);
  for (int t = 1; t <= i; ++t) r = Rational(1, t) * lie_bracket(neg_x1, r);
  return r;
}

LieElement relation(int i, int j) {
  if (i < -1 || j < -1) throw Error(ErrorKind::DegreeTooLow, "relation indices must be >= -1");
  return lie_bracket(x(2 + i), x(2 + j)) - Rational(i - j) * x(i + j + 4);
}

LieElement standard_relation(int i, int j) {
  if (i < 0 || j <= i) throw Error(ErrorKind::DegreeMismatch, "standard_relation needs 0 <= i < j");
  return relation(i, j);
}

LieElement reduced_relation(int k) {
  if (k < 1) throw Error(ErrorKind::DegreeTooLow, "reduced relations start at k = 1");
  return relation(0, 2 * k - 1);
}

LieElement relation_n(int i, int n) { return relation(i, n - 4 - i); }

Subspace span(const std::vector<LieElement>& elems, int degree) {
  Subspace s;
  s.degree = degree;
  for (const auto& u : elems)
    if (!u.is_zero()) insert(s, coordinates(u, degree));
  sort_rows(s);
  return s;
}

Subspace relation_space(int n) {
  if (n < 5) throw Error(ErrorKind::DegreeTooLow, "relation spaces start at degree 5");
  std::vector<LieElement> gens;
  for (int i = 0; i < n - 4 - i; ++i) gens.push_back(relation_n(i, n));
  return span(gens, n);
}

bool membership(const LieElement& u, const Subspace& s) {
  int d = u.degree();
  if (d == -1) return true;
  if (d != s.degree) throw Error(ErrorKind::DegreeMismatch, "element of degree " + std::to_string(d) +
                                                              " tested against degree " + std::to_string(s.degree));
  auto v = reduce(s, coordinates(u, d));
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

LieElement sl2_act(Sl2 g, const LieElement& u) {
  if (u.is_zero()) return u;
  switch (g) {
    case Sl2::E: return lie_bracket(Rational(-1) * letter(1), u);
    case Sl2::H: {
      LieElement r = u;
      for (auto& [w, c] : r.terms) c *= kHScale * word_degree(w);
      return r;
    }
    case Sl2::F: break;
  }
  std::map<int, LieElement> parts;
  for (const auto& [w, c] : u.terms) parts[word_degree(w)].terms[w] = c;
  LieElement r;
  for (const auto& [d, part] : parts) {
    if (d < 2) throw Error(ErrorKind::DegreeTooLow, "f on degree-1 elements leaves the free part");
    auto c = coordinates(part, d);
    const LyndonBasis& b = lyndon_basis(d);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(c[i]) != 0) r += c[i] * f_on_lyndon(b.words[i]);
  }
  return r;
}

IdealResult ideal_closure(const std::vector<LieElement>& gens, int degree, int max_degree) {
  constexpr int lowest = 5;
  if (degree < lowest || degree > max_degree)
    throw Error(ErrorKind::DegreeMismatch, "degree outside [5, max_degree]");
  auto run = [&](int top) {
    std::map<int, Subspace> spaces;
    for (int d = lowest; d <= top; ++d) spaces[d].degree = d;
    std::deque<std::pair<int, std::vector<Rational>>> work;
    auto push = [&](const LieElement& u, int d) {
      if (u.is_zero() || d < lowest || d > top) return;
      auto c = coordinates(u, d);
      if (insert(spaces[d], c)) work.emplace_back(d, c);
    };
    for (const auto& g : gens) {
      int d = g.degree();
      if (d < lowest) throw Error(ErrorKind::DegreeTooLow, "generators must have degree >= 5");
      push(g, d);
    }
    LieElement x1 = letter(1), x2 = letter(2);
    while (!work.empty()) {
      auto [d, c] = work.front();
      work.pop_front();
      LieElement s = from_coordinates(c, d);
      push(lie_bracket(x1, s), d + 1);
      push(lie_bracket(x2, s), d + 2);
      if (d >= lowest + 1) push(sl2_act(Sl2::F, s), d - 1);
    }
    for (auto& [d, s] : spaces) sort_rows(s);
    return spaces;
  };
  auto base = run(max_degree);
  auto wider = run(max_degree + 2);
  IdealResult out;
  out.component = base.at(degree);
  for (const auto& [d, s] : base) out.dims[d] = s.dim();
  out.stable = wider.at(degree).dim() == base.at(degree).dim();
  return out;
}

Subspace ideal_component(const std::vector<LieElement>& gens, int degree, int max_degree) {
  IdealResult r = ideal_closure(gens, degree, max_degree);
  if (!r.stable)
    throw Error(ErrorKind::WindowTooSmall, "closure at degree " + std::to_string(degree) +
                                               " still grows; try max_degree " + std::to_string(max_degree + 2));
  return r.component;
}

LieElement parse_relation(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'r') {
    std::string rest = name.substr(1);
    try {
      auto us = rest.find('_', 1);
      if (!rest.empty() && rest[0] == '_' && us != std::string::npos) {
        int a = std::stoi(rest.substr(1, us - 1));
        int b = std::stoi(rest.substr(us + 1));
        return relation(a - 2, b - 2);
      }
      std::size_t used = 0;
      int k = std::stoi(rest, &used);
      if (used == rest.size()) return reduced_relation(k);
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorKind::ParseError, "relation names look like r2 or r_2_4, got " + name);
}

json element_to_json(const LieElement& u) {
  int d = u.degree();
  json j{{"degree", d}};
  json coords = json::array();
  if (d > 0) {
    auto c = coordinates(u, d);
    const LyndonBasis& b = lyndon_basis(d);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(c[i]) != 0) coords.push_back({to_string(c[i]), b.brackets[i]});
  }
  j["coordinates"] = coords;
  return j;
}

json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  const LyndonBasis& b = lyndon_basis(s.degree);
  for (const auto& row : s.basis) {
    json r = json::array();
    for (std::size_t i = 0; i < row.size(); ++i)
      if (sgn(row[i]) != 0) r.push_back({to_string(row[i]), word_name(b.words[i])});
    basis.push_back(r);
  }
  return {{"degree", s.degree}, {"dim", s.dim()}, {"basis", basis}};
}

MapCheck check_e_formula(int n) {
  MapCheck out;
  out.n = n;
  for (int i = 0; i < n - 4 - i; ++i) {
    LieElement lhs = sl2_act(Sl2::E, relation_n(i, n));
    LieElement rhs = Rational(n - i - 3) * relation_n(i, n + 1) + Rational(i + 1) * relation_n(i + 1, n + 1);
    if (lhs != rhs) {
      out.matches = false;
      out.mismatches.push_back("e r_" + std::to_string(i) + "^(" + std::to_string(n) + ")");
    }
  }
  return out;
}

MapCheck check_f_formula(int n) {
  MapCheck out;
  out.n = n;
  for (int i = 0; i < n - 4 - i; ++i) {
    LieElement lhs = sl2_act(Sl2::F, relation_n(i, n));
    LieElement rhs = Rational(-(n - i - 1)) * relation_n(i, n - 1) - Rational(i + 3) * relation_n(i - 1, n - 1);
    if (lhs != rhs) {
      out.matches = false;
      out.mismatches.push_back("f r_" + std::to_string(i) + "^(" + std::to_string(n) + ")");
    }
  }
  return out;
}

}  // namespace wittext::freelie
