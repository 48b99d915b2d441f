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

#include <gtest/gtest.h>

#include <random>

#include "wittext/freelie.hpp"

using namespace wittext;
using namespace wittext::freelie;

namespace {

Rational q(long p, long r = 1) { return Rational(p, r); }

// dims of the free Lie algebra on generators of degree 1 and 2:
// sum over d | n of d * dim_d equals the Lucas number L_n
std::vector<long> witt_dims(int max) {
  std::vector<long> lucas(max + 1), dims(max + 1, 0);
  lucas[1] = 1;
  if (max >= 2) lucas[2] = 3;
  for (int n = 3; n <= max; ++n) lucas[n] = lucas[n - 1] + lucas[n - 2];
  for (int n = 1; n <= max; ++n) {
    long s = lucas[n];
    for (int d = 1; d < n; ++d)
      if (n % d == 0) s -= d * dims[d];
    dims[n] = s / n;
  }
  return dims;
}

struct ElementGen {
  std::mt19937_64 rng;
  explicit ElementGen(std::uint64_t seed) : rng(seed) {}
  LieElement operator()(int degree) {
    const LyndonBasis& b = lyndon_basis(degree);
    std::uniform_int_distribution<long> c(-3, 3);
    LieElement u;
    for (const auto& e : b.elements) u += Rational(c(rng)) * e;
    if (u.is_zero()) u = b.elements.front();
    return u;
  }
};

LieElement e_act(const LieElement& u) { return sl2_act(Sl2::E, u); }
LieElement f_act(const LieElement& u) { return sl2_act(Sl2::F, u); }

}  // namespace

TEST(Lyndon, SmallDegrees) {
  EXPECT_EQ(lyndon_basis(1).words, std::vector<Word>{Word{1}});
  EXPECT_EQ(lyndon_basis(2).words, std::vector<Word>{Word{2}});
  EXPECT_EQ(lyndon_basis(3).words, std::vector<Word>{(Word{1, 2})});
  EXPECT_TRUE(is_lyndon({1, 1, 2}));
  EXPECT_FALSE(is_lyndon({2, 1}));
  EXPECT_FALSE(is_lyndon({1, 2, 1, 2}));
}

TEST(Lyndon, CountsMatchGeneratingFunction) {
  auto dims = witt_dims(14);
  EXPECT_EQ(dims[9], 8);
  for (int n = 1; n <= 14; ++n) {
    const LyndonBasis& b = lyndon_basis(n);
    EXPECT_EQ(static_cast<long>(b.words.size()), dims[n]) << n;
    for (std::size_t i = 0; i + 1 < b.words.size(); ++i) EXPECT_LT(b.words[i], b.words[i + 1]);
    for (const auto& w : b.words) {
      EXPECT_EQ(word_degree(w), n);
      EXPECT_TRUE(is_lyndon(w));
    }
  }
}

TEST(Lyndon, BasisCoordinatesAreUnitVectors) {
  for (int n = 1; n <= 9; ++n) {
    const LyndonBasis& b = lyndon_basis(n);
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      auto c = coordinates(b.elements[i], n);
      for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], i == j ? 1 : 0);
      EXPECT_EQ(from_coordinates(c, n), b.elements[i]);
    }
  }
}

TEST(Bracket, BasicIdentities) {
  LieElement x1 = letter(1), x2 = letter(2);
  EXPECT_TRUE(lie_bracket(x1, x1).is_zero());
  LieElement b = lie_bracket(x1, x2);
  EXPECT_EQ(b.degree(), 3);
  EXPECT_EQ(b, lyndon_basis(3).elements[0]);
  EXPECT_EQ(lie_bracket(x2, x1), Rational(-1) * b);
}

TEST(Bracket, AntisymmetryAndJacobiRandom) {
  ElementGen g(5);
  for (int t = 0; t < 30; ++t) {
    int da = 1 + t % 3, db = 1 + (t / 3) % 3, dc = 1 + (t / 9) % 3;
    LieElement a = g(da), b = g(db), c = g(dc);
    EXPECT_EQ(lie_bracket(a, b), Rational(-1) * lie_bracket(b, a));
    LieElement jac = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                     lie_bracket(c, lie_bracket(a, b));
    EXPECT_TRUE(jac.is_zero());
    // bracket lands in the Lie span: coordinates reproduce it
    LieElement ab = lie_bracket(a, b);
    if (!ab.is_zero()) EXPECT_EQ(from_coordinates(coordinates(ab, da + db), da + db), ab);
  }
}

TEST(Generators, GenX) {
  LieElement x1 = letter(1), x2 = letter(2);
  EXPECT_EQ(gen_x(0), x2);
  EXPECT_EQ(gen_x(1), Rational(-1) * lie_bracket(x1, x2));
  EXPECT_EQ(gen_x(2), q(1, 2) * lie_bracket(x1, lie_bracket(x1, x2)));
  EXPECT_EQ(x(1), x1);
  EXPECT_EQ(x(5).degree(), 5);
}

TEST(Relations, Definitions) {
  LieElement r1 = reduced_relation(1);
  EXPECT_EQ(r1, lie_bracket(x(2), x(3)) + x(5));
  EXPECT_EQ(r1.degree(), 5);
  EXPECT_EQ(standard_relation(0, 1), r1);
  EXPECT_TRUE(relation(1, 1).is_zero());
  // r_k = r_{2, 2k+1} has degree 2k + 3
  EXPECT_EQ(reduced_relation(2).degree(), 7);
  EXPECT_EQ(reduced_relation(3).degree(), 9);
  EXPECT_EQ(reduced_relation(2), lie_bracket(x(2), x(5)) + Rational(3) * x(7));
  EXPECT_EQ(parse_relation("r2"), reduced_relation(2));
  EXPECT_EQ(parse_relation("r_2_4"), relation(0, 2));
  EXPECT_THROW(parse_relation("s3"), Error);
  EXPECT_THROW(standard_relation(2, 1), Error);
}

TEST(Relations, DimensionFormula) {
  for (int n = 5; n <= 13; ++n) EXPECT_EQ(relation_space(n).dim(), static_cast<std::size_t>((n - 1) / 2 - 1)) << n;
}

TEST(Sl2, ActionExamples) {
  EXPECT_EQ(e_act(reduced_relation(1)), Rational(2) * relation(0, 2));
  EXPECT_EQ(f_act(reduced_relation(2)), Rational(-6) * relation_n(0, 6));
  EXPECT_EQ(f_act(f_act(reduced_relation(2))), Rational(30) * reduced_relation(1));
  try {
    f_act(letter(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeTooLow);
  }
  EXPECT_EQ(sl2_act(Sl2::H, letter(2)), Rational(2 * kHScale) * letter(2));
}

TEST(Sl2, CommutatorIsHRandom) {
  ElementGen g(13);
  for (int d = 2; d <= 9; ++d) {
    for (int t = 0; t < 3; ++t) {
      LieElement u = g(d);
      LieElement efu = e_act(f_act(u));
      LieElement feu = f_act(e_act(u));
      EXPECT_EQ(efu - feu, sl2_act(Sl2::H, u)) << d;
      EXPECT_EQ(sl2_act(Sl2::H, u), Rational(kHScale * d) * u);
    }
  }
}

TEST(Sl2, DerivationRandom) {
  ElementGen g(21);
  for (int t = 0; t < 10; ++t) {
    LieElement a = g(2 + t % 3), b = g(2 + t % 2);
    for (Sl2 s : {Sl2::E, Sl2::F}) {
      LieElement lhs = sl2_act(s, lie_bracket(a, b));
      LieElement rhs = lie_bracket(sl2_act(s, a), b) + lie_bracket(a, sl2_act(s, b));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Sl2, DisplayedMatrices) {
  for (int n = 5; n <= 12; ++n) {
    MapCheck e = check_e_formula(n), f = check_f_formula(n);
    EXPECT_TRUE(e.matches) << n;
    EXPECT_TRUE(f.matches) << n;
  }
}

TEST(Sl2, EvenOddStructure) {
  for (int k = 3; 2 * k + 1 <= 13; ++k) {
    int odd = 2 * k - 1, even = 2 * k;
    std::vector<LieElement> img_odd, img_even;
    for (int i = 0; 2 * i < odd - 4; ++i) img_odd.push_back(e_act(relation_n(i, odd)));
    for (int i = 0; 2 * i < even - 4; ++i) img_even.push_back(e_act(relation_n(i, even)));
    EXPECT_EQ(span(img_odd, even).dim(), relation_space(odd).dim());
    EXPECT_EQ(span(img_odd, even).dim(), relation_space(even).dim());
    EXPECT_EQ(span(img_even, even + 1).dim(), relation_space(even).dim());
    img_even.push_back(relation_n(0, even + 1));
    EXPECT_EQ(span(img_even, even + 1).dim(), relation_space(even + 1).dim());
  }
}

TEST(Ideal, SmallComponents) {
  LieElement r1 = reduced_relation(1);
  Subspace d5 = ideal_component({r1}, 5, 9);
  EXPECT_EQ(d5.dim(), 1u);
  EXPECT_TRUE(membership(r1, d5));
  Subspace d6 = ideal_component({r1}, 6, 9);
  EXPECT_TRUE(membership(e_act(r1), d6));
  EXPECT_TRUE(membership(Rational(2) * relation(0, 2), d6));
  EXPECT_TRUE(membership(r1, ideal_component({reduced_relation(2)}, 5, 9)));
  EXPECT_TRUE(membership(r1, ideal_component({reduced_relation(2), reduced_relation(3)}, 5, 11)));
}

TEST(Ideal, LevelTwoIsNotGeneratedByLevelOne) {
  IdealResult r = ideal_closure({reduced_relation(1)}, 7, 11);
  EXPECT_TRUE(r.stable);
  EXPECT_FALSE(membership(reduced_relation(2), r.component));
  EXPECT_EQ(r.component.dim(), 2u);
  EXPECT_EQ(relation_space(7).dim(), 2u);
}

TEST(Ideal, LevelThreeAtDegreeNine) {
  // the closure of <r_1, r_2> already fills the degree-9 relation ideal
  IdealResult r = ideal_closure({reduced_relation(1), reduced_relation(2)}, 9, 11);
  EXPECT_TRUE(r.stable);
  EXPECT_TRUE(membership(reduced_relation(3), r.component));
  IdealResult full = ideal_closure({reduced_relation(1), reduced_relation(2), reduced_relation(3)}, 9, 11);
  EXPECT_EQ(r.component.dim(), full.component.dim());
}

TEST(Ideal, MonotoneInWindow) {
  std::vector<LieElement> gens = {reduced_relation(1)};
  Subspace small = ideal_component(gens, 7, 9);
  Subspace big = ideal_component(gens, 7, 11);
  EXPECT_LE(small.dim(), big.dim());
  for (const auto& row : small.basis) EXPECT_TRUE(membership(from_coordinates(row, 7), big));
}

TEST(Ideal, Errors) {
  Subspace d5 = ideal_component({reduced_relation(1)}, 5, 9);
  try {
    membership(reduced_relation(2), d5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
  }
  try {
    ideal_component({reduced_relation(2)}, 5, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WindowTooSmall);
  }
}

TEST(Json, SubspaceAndElement) {
  json s = subspace_to_json(relation_space(7));
  EXPECT_EQ(s["degree"], 7);
  EXPECT_EQ(s["dim"], 2);
  EXPECT_EQ(s["basis"].size(), 2u);
  json e = element_to_json(reduced_relation(1));
  EXPECT_FALSE(e.empty());
}
