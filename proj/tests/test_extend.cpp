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
#include <set>

#include "wittext/extend.hpp"

using namespace wittext;

namespace {

QuadScalar q(long p, long r = 1) { return QuadScalar(Rational(p, r)); }

ModulePtr dense(const QuadScalar& mu0, const QuadScalar& tau, int lo = -12, int hi = 11) {
  return std::make_shared<WeightModule>(make_dense(mu0, tau, lo, hi));
}

QuadScalar entry(const WeightModule& m, const GradedMap& g, int k) {
  auto b = block_at(m, g, k);
  EXPECT_TRUE(b && b->rows() == 1 && b->cols() == 1) << "k = " << k;
  return b && b->rows() == 1 && b->cols() == 1 ? (*b)(0, 0) : QuadScalar(999);
}

// a^2_mu - alpha, read off the linear lift
QuadScalar t_shape(const QuadScalar& mu, const QuadScalar& tau) {
  return -q(1, 8) * mu * (q(11) + q(6) * mu + mu * mu - q(3) * tau);
}

QuadScalar alpha_pm(const QuadScalar& tau, const QuadScalar& root) {
  return q(1, 4) * (tau - q(1)) * (q(3) + root);
}

void expect_restriction(const WittAction& a) {
  const WeightModule& m = *a.module;
  if (a.has(-1)) EXPECT_TRUE(compare_maps(m, a.op(-1), sigma_f(m)).pass);
  if (a.has(0)) EXPECT_TRUE(compare_maps(m, a.op(0), scale(sigma_h(m), q(-1, 2))).pass);
  if (a.has(1)) EXPECT_TRUE(compare_maps(m, a.op(1), scale(sigma_e(m), q(-1))).pass);
}

bool same_ops(const WittAction& a, const WittAction& b, int lo, int hi) {
  for (int i = lo; i <= hi; ++i)
    if (!compare_maps(*a.module, a.op(i), b.op(i)).pass) return false;
  return true;
}

}  // namespace

TEST(LinearLift, DenseFamilyIsOneDimensional) {
  auto m = dense(q(1, 2), q(9));
  LiftResult r = lift_linear(*m, Algebra::Gt);
  ASSERT_TRUE(r.consistent);
  ASSERT_EQ(r.family.basis.size(), 1u);
  // every member is alpha + shape(mu)
  for (const QuadScalar& alpha : {q(0), q(5), q(-7, 3)}) {
    GradedMap t = add(*m, r.family.particular, scale(r.family.basis[0], alpha));
    std::set<std::string> offsets;
    for (const auto& [k, b] : t.blocks) offsets.insert((b(0, 0) - t_shape(m->weight(k), q(9))).str());
    EXPECT_EQ(offsets.size(), 1u);
  }
}

TEST(LinearLift, GeneralizedFamilyHasFourParameters) {
  FieldMatrix n(2, 2);
  n(0, 1) = q(1, 4);
  auto m = std::make_shared<WeightModule>(make_generalized_dense(q(1, 2), q(9), n, -8, 8));
  LiftResult r = lift_linear(*m, Algebra::Gt);
  ASSERT_TRUE(r.consistent);
  EXPECT_EQ(r.family.basis.size(), 4u);
}

TEST(LinearLift, TrivialModuleHasNoEquations) {
  auto m = std::make_shared<WeightModule>(make_finite(1));
  try {
    lift_linear(*m, Algebra::Gt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInterior);
  }
}

TEST(LinearLift, FiniteModuleIsObstructed) {
  // V(3): the bottom forces T = 6, the middle then needs -6 = 6
  auto m = std::make_shared<WeightModule>(make_finite(3));
  LiftResult r = lift_linear(*m, Algebra::Gt);
  EXPECT_FALSE(r.consistent);
  EXPECT_EQ(r.certificate.stage, "LinearLift");
  ExtensionOutcome o = extend_generic(m, Algebra::Gt, 2);
  EXPECT_EQ(o.status, ExtensionOutcome::Status::Infeasible);
  EXPECT_EQ(o.certificate.stage, "LinearLift");
}

TEST(LinearLift, LtSideSolvesEf) {
  auto m = dense(q(1, 2), q(9));
  LiftResult r = lift_linear(*m, Algebra::Lt);
  ASSERT_TRUE(r.consistent);
  EXPECT_EQ(r.family.basis.size(), 1u);
  // [e, S] = -3 f on the particular solution
  Report rep = compare_maps(*m, bracket(*m, sigma_e(*m), r.family.particular), scale(sigma_f(*m), q(-3)));
  EXPECT_TRUE(rep.pass);
}

TEST(PinQuadratic, DenseRootsAreAlphaPlusMinus) {
  auto m = dense(q(1, 2), q(9));
  LiftResult r = lift_linear(*m, Algebra::Gt);
  PinResult p = pin_quadratic(*m, r.family);
  ASSERT_EQ(p.status, PinResult::Status::Solutions);
  std::set<std::string> alphas;
  for (const auto& t : p.solutions) {
    std::set<std::string> per;
    for (const auto& [k, b] : t.blocks) per.insert((b(0, 0) - t_shape(m->weight(k), q(9))).str());
    ASSERT_EQ(per.size(), 1u);
    alphas.insert(*per.begin());
  }
  EXPECT_EQ(alphas, (std::set<std::string>{alpha_pm(q(9), q(3)).str(), alpha_pm(q(9), q(-3)).str()}));
  EXPECT_EQ(alphas, (std::set<std::string>{"12", "0"}));
}

TEST(PinQuadratic, TauOneHasOneRoot) {
  auto m = dense(q(1, 2), q(1));
  PinResult p = pin_quadratic(*m, lift_linear(*m, Algebra::Gt).family);
  ASSERT_EQ(p.status, PinResult::Status::Solutions);
  EXPECT_EQ(p.solutions.size(), 1u);
}

TEST(PinQuadratic, IrrationalRoot) {
  auto m = dense(q(0), q(2), -8, 8);
  PinResult p = pin_quadratic(*m, lift_linear(*m, Algebra::Gt).family);
  ASSERT_EQ(p.status, PinResult::Status::Solutions);
  EXPECT_EQ(p.solutions.size(), 2u);
  for (const auto& t : p.solutions) EXPECT_TRUE(criterion_check(*m, t, 2).pass);
}

TEST(ExtendAction, DenseBranchPlusValues) {
  auto m = dense(q(1, 2), q(9));
  WittAction a = closed_form_dense(m, Algebra::Gt, 1, 6);
  // index 0 carries mu = 1/2
  EXPECT_EQ(entry(*m, a.op(1), 0), q(-27, 16));
  EXPECT_EQ(entry(*m, a.op(2), 0), q(819, 64));
  EXPECT_EQ(entry(*m, a.op(2), 0), alpha_pm(q(9), q(3)) + t_shape(q(1, 2), q(9)));
  WittAction rec = extend_action(m, a.op(2), Algebra::Gt, 6);
  EXPECT_TRUE(same_ops(a, rec, -1, 6));
  expect_restriction(rec);
}

TEST(ExtendAction, DepthBeyondWindow) {
  auto m = dense(q(1, 2), q(9), -2, 2);
  LiftResult r = lift_linear(*m, Algebra::Gt);
  try {
    extend_action(m, r.family.particular, Algebra::Gt, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DepthExceedsWindow);
  }
}

TEST(ClosedForm, DenseLowCoefficients) {
  auto m = dense(q(1, 2), q(9));
  for (int br : {1, -1}) {
    WittAction a = closed_form_dense(m, Algebra::Gt, br, 6);
    for (int k = -10; k <= 8; ++k) {
      QuadScalar mu = m->weight(k);
      EXPECT_EQ(entry(*m, a.op(-1), k), q(1));
      EXPECT_EQ(entry(*m, a.op(0), k), -mu / q(2));
      EXPECT_EQ(entry(*m, a.op(1), k), -(q(9) - (mu + q(1)) * (mu + q(1))) / q(4));
    }
  }
  EXPECT_EQ(dense_coefficient(q(3), q(1, 2), 0), q(-1, 4));
  EXPECT_EQ(dense_coefficient(q(3), q(1, 2), 1), q(-27, 16));
  EXPECT_EQ(dense_coefficient(q(3), q(7, 3), -1), q(1));
}

TEST(ClosedForm, RecursionReproducesEverySide) {
  auto m = dense(q(1, 2), q(9));
  for (int br : {1, -1}) {
    WittAction gt = closed_form_dense(m, Algebra::Gt, br, 6);
    EXPECT_TRUE(same_ops(gt, extend_action(m, gt.op(2), Algebra::Gt, 6), -1, 6));
    WittAction lt = closed_form_dense(m, Algebra::Lt, br, 6);
    EXPECT_TRUE(same_ops(lt, extend_action(m, lt.op(-2), Algebra::Lt, 6), -6, 1));
    expect_restriction(lt);
  }
}

TEST(ClosedForm, CoefficientCommutatorIdentityRandom) {
  // a^i_{mu+2j} a^j_mu - a^j_{mu+2i} a^i_mu = (i-j) a^{i+j}_mu
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-15, 15), den(1, 4);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    QuadScalar root = t % 3 == 0 ? QuadScalar::sqrt_of(Rational(7)) : q(num(rng), den(rng));
    QuadScalar mu = q(num(rng), den(rng)) + (t % 3 == 0 ? QuadScalar(Rational(0), Rational(1, 3), 7) : q(0));
    auto a = [&](int i, const QuadScalar& m) { return dense_coefficient(root, m, i); };
    for (int i = -1; i <= 5; ++i)
      for (int j = -1; j <= 5; ++j) {
        QuadScalar lhs, rhs;
        try {
          lhs = a(i, mu + q(2 * j)) * a(j, mu) - a(j, mu + q(2 * i)) * a(i, mu);
          rhs = q(i - j) * a(i + j, mu);
        } catch (const Error&) {
          continue;
        }
        EXPECT_EQ(lhs, rhs) << "i=" << i << " j=" << j << " root=" << root << " mu=" << mu;
        ++checked;
      }
  }
  EXPECT_GT(checked, 1000);
}

TEST(ClosedForm, BranchCoincidenceExactlyAtTauZeroOne) {
  for (const QuadScalar& tau : {q(0), q(1), q(9), q(9, 4)}) {
    auto m = dense(q(1, 3), tau);
    WittAction p = closed_form_dense(m, Algebra::Gt, 1, 6);
    WittAction n = closed_form_dense(m, Algebra::Gt, -1, 6);
    bool same = same_ops(p, n, -1, 6);
    EXPECT_EQ(same, tau == q(0) || tau == q(1)) << tau;
  }
}

TEST(ClosedForm, LtPoleIsReported) {
  // 1 - sqrt(tau) = -1/2 lies in 1/2 + 2Z
  auto m = dense(q(1, 2), q(9, 4));
  try {
    closed_form_dense(m, Algebra::Lt, -1, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PochhammerPole);
  }
  EXPECT_NO_THROW(closed_form_dense(m, Algebra::Gt, -1, 6));
}

TEST(ClosedForm, VermaGtIsUniqueMinusBranch) {
  auto m = std::make_shared<WeightModule>(make_verma(q(1, 2), 8));
  WittAction a = closed_form_verma(m, Algebra::Gt, -1, 6);
  // w_3 at index -3; rho(L_2) w_3 = 3/2 w_1
  EXPECT_EQ(entry(*m, a.op(2), -3), q(3, 2));
  // rho(L_3) w_2 vanishes: target beyond the top
  auto b = block_at(*m, a.op(3), -2);
  ASSERT_TRUE(b);
  EXPECT_TRUE(b->is_zero());
  EXPECT_TRUE(verify_bracket(a, 6).pass);
  expect_restriction(a);
  try {
    closed_form_verma(m, Algebra::Gt, 1, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BranchUnavailable);
  }
}

TEST(ClosedForm, VermaPlusPatternEscapesBelowTop) {
  EXPECT_FALSE(verma_plus_escapes(q(1, 2), 6).empty());
  EXPECT_FALSE(verma_plus_escapes(q(7, 3), 6).empty());
  EXPECT_TRUE(verma_plus_escapes(q(-1), 6).empty());
}

TEST(ClosedForm, VermaLtBranchesCoincideAtMinusOne) {
  auto m = std::make_shared<WeightModule>(make_verma(q(-1), 8));
  WittAction p = closed_form_verma(m, Algebra::Lt, 1, 6);
  WittAction n = closed_form_verma(m, Algebra::Lt, -1, 6);
  EXPECT_TRUE(same_ops(p, n, -6, 1));
}

TEST(ClosedForm, VermaLtPlusIsTheGenuineAction) {
  auto m = std::make_shared<WeightModule>(make_verma(q(1, 2), 12));
  WittAction p = closed_form_verma(m, Algebra::Lt, 1, 6);
  EXPECT_TRUE(verify_bracket(p, 6).pass);
  // the minus formula only holds once the top w_0 is forgotten
  WittAction n = closed_form_verma(m, Algebra::Lt, -1, 6);
  EXPECT_FALSE(verify_bracket(n, 6).pass);
  EXPECT_TRUE(verify_bracket(n, 6, true).pass);
}

TEST(ClosedForm, LowestRestrictsToSigma) {
  auto m = std::make_shared<WeightModule>(make_lowest(q(9, 2), 8));
  WittAction lt = closed_form_lowest(m, Algebra::Lt, 1, 6);
  expect_restriction(lt);
  EXPECT_TRUE(verify_bracket(lt, 6).pass);
  WittAction gt = closed_form_lowest(m, Algebra::Gt, -1, 6);
  expect_restriction(gt);
  EXPECT_TRUE(verify_bracket(gt, 6).pass);
  // rho(L_i) w_j lands on w_{j+i}; nothing below w_0
  auto b = block_at(*m, lt.op(-3), 2);
  ASSERT_TRUE(b);
  EXPECT_TRUE(b->is_zero());
}

TEST(ClosedForm, LowestGtBranchesCoincide) {
  // module parameter Lambda = lambda + 2
  for (const QuadScalar& lam : {q(-1), q(0)}) {
    auto m = std::make_shared<WeightModule>(make_lowest(lam + q(2), 8));
    WittAction p = closed_form_lowest(m, Algebra::Gt, 1, 6);
    WittAction n = closed_form_lowest(m, Algebra::Gt, -1, 6);
    EXPECT_TRUE(same_ops(p, n, -1, 6)) << lam;
  }
}

TEST(MatrixForm, NilpotentZeroIsDense) {
  auto g = std::make_shared<WeightModule>(make_generalized_dense(q(1, 2), q(9), FieldMatrix(1, 1), -10, 10));
  auto d = dense(q(1, 2), q(9), -10, 10);
  WittAction a = matrix_closed_form(g, FieldMatrix::scalar(1, q(3)), 6);
  WittAction b = closed_form_dense(d, Algebra::Gt, 1, 6);
  for (int i = -1; i <= 6; ++i) EXPECT_EQ(a.op(i).blocks, b.op(i).blocks) << i;
}

TEST(MatrixForm, TwoByTwo) {
  FieldMatrix n(2, 2);
  n(0, 1) = q(1, 4);
  auto m = std::make_shared<WeightModule>(make_generalized_dense(q(1, 2), q(9), n, -12, 11));
  FieldMatrix s(2, 2, {q(3), q(1, 6), q(0), q(3)});
  WittAction a = matrix_closed_form(m, s, 6);
  for (const auto& [k, b] : a.op(-1).blocks) EXPECT_EQ(b, FieldMatrix::identity(2));
  // [A^1, A^2] = -A^3
  Report r = compare_maps(*m, bracket(*m, a.op(1), a.op(2)), scale(a.op(3), q(-1)));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(verify_bracket(a, 6).pass);
  WittAction f = functor_image(m, q(3), 6);
  for (int i = -1; i <= 6; ++i) EXPECT_EQ(f.op(i).blocks, a.op(i).blocks);
  FieldMatrix wrong(2, 2, {q(3), q(1, 5), q(0), q(3)});
  try {
    matrix_closed_form(m, wrong, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASquareRoot);
  }
}

TEST(MatrixForm, FunctorImageIntertwinesCasimir) {
  FieldMatrix n(3, 3);
  n(0, 1) = q(1);
  n(1, 2) = q(1, 2);
  n(0, 2) = q(-1, 3);
  auto m = std::make_shared<WeightModule>(make_generalized_dense(q(1, 3), q(4), n, -10, 10));
  WittAction a = functor_image(m, q(-2), 5);
  EXPECT_TRUE(verify_bracket(a, 5).pass);
  GradedMap c = casimir_operator(*m);
  for (int i = -1; i <= 5; ++i) {
    Report r = compare_maps(*m, compose(*m, c, a.op(i)), compose(*m, a.op(i), c));
    EXPECT_TRUE(r.pass) << i;
  }
  EXPECT_THROW(functor_image(m, q(0), 5), Error);
}

TEST(MatrixForm, RandomNilpotentsPassBracket) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-3, 3);
  for (int t = 0; t < 6; ++t) {
    std::size_t l = 2 + t % 2;
    FieldMatrix n(l, l);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j) n(i, j) = q(num(rng), 2);
    auto m = std::make_shared<WeightModule>(make_generalized_dense(q(1, 3), q(25, 4), n, -9, 9));
    for (const QuadScalar& r : {q(5, 2), q(-5, 2)}) EXPECT_TRUE(verify_bracket(functor_image(m, r, 4), 4).pass);
  }
}

TEST(VerifyBracket, CorruptionIsLocated) {
  auto m = dense(q(1, 2), q(9));
  WittAction a = closed_form_dense(m, Algebra::Gt, 1, 6);
  EXPECT_TRUE(verify_bracket(a, 6).pass);
  a.ops[3].blocks[0](0, 0) += q(1);
  Report r = verify_bracket(a, 6);
  EXPECT_FALSE(r.pass);
  ASSERT_FALSE(r.failures.empty());
  bool touches = false;
  for (const auto& f : r.failures) {
    ASSERT_EQ(f.where.size(), 3u);
    touches = touches || f.where[0] == 3 || f.where[1] == 3 || f.where[0] + f.where[1] == 3;
  }
  EXPECT_TRUE(touches);
}

TEST(VerifyBracket, IntermediateSeries) {
  EXPECT_TRUE(verify_bracket(make_intermediate(q(1), q(1, 4), -12, 11, 6), 6).pass);
  EXPECT_TRUE(verify_bracket(make_intermediate(q(2, 3), q(-5, 7), -12, 11, 6, Algebra::Full), 6).pass);
}

TEST(Glue, DensePairings) {
  auto m = dense(q(1, 2), q(9));
  WittAction ltp = closed_form_dense(m, Algebra::Lt, 1, 6), ltm = closed_form_dense(m, Algebra::Lt, -1, 6);
  WittAction gtp = closed_form_dense(m, Algebra::Gt, 1, 6), gtm = closed_form_dense(m, Algebra::Gt, -1, 6);
  GlueResult ok = glue_witt(ltp, gtp, 6);
  EXPECT_TRUE(ok.ok);
  EXPECT_TRUE(ok.report.pass);
  EXPECT_EQ(ok.action.algebra, Algebra::Full);
  expect_restriction(ok.action);
  GlueResult bad = glue_witt(ltm, gtp, 6);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.error, "GlueError");
  GlueResult vir = glue_vir(ltp, gtp, 6);
  ASSERT_TRUE(vir.ok);
  ASSERT_TRUE(vir.action.central);
  for (const auto& [k, b] : vir.action.central->blocks) EXPECT_TRUE(b.is_zero());
  GlueResult cf = glue_vir(ltp, gtm, 6);
  EXPECT_FALSE(cf.ok);
  EXPECT_EQ(cf.error, "CentralityFailure");
}

TEST(Glue, TauOneAllPairings) {
  auto m = dense(q(1, 3), q(1));
  for (int a : {1, -1})
    for (int b : {1, -1})
      EXPECT_TRUE(glue_witt(closed_form_dense(m, Algebra::Lt, a, 6), closed_form_dense(m, Algebra::Gt, b, 6), 6).ok);
}

TEST(Glue, MismatchedModulesAndOverlap) {
  auto m = dense(q(1, 2), q(9));
  auto other = dense(q(1, 2), q(16));
  try {
    glue_witt(closed_form_dense(m, Algebra::Lt, 1, 6), closed_form_dense(other, Algebra::Gt, 1, 6), 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ModuleMismatch);
  }
  WittAction gt = closed_form_dense(m, Algebra::Gt, 1, 6);
  gt.ops[1].blocks[0](0, 0) += q(1);
  try {
    glue_witt(closed_form_dense(m, Algebra::Lt, 1, 6), gt, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OverlapDisagreement);
  }
}

TEST(Glue, SoundnessOnRandomDense) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> num(-9, 9);
  for (int t = 0; t < 6; ++t) {
    QuadScalar root = q(num(rng), 2);
    if (root == q(0)) continue;
    auto m = dense(q(num(rng), 3), root * root);
    for (int br : {1, -1}) {
      WittAction lt, gt;
      try {
        lt = closed_form_dense(m, Algebra::Lt, br, 5);
        gt = closed_form_dense(m, Algebra::Gt, br, 5);
      } catch (const Error&) {
        continue;
      }
      GlueResult g = glue_vir(lt, gt, 5);
      ASSERT_TRUE(g.ok);
      EXPECT_TRUE(g.report.pass);
      for (int i = -5; i <= 5; ++i) {
        Report r = compare_maps(*m, compose(*m, *g.action.central, g.action.op(i)),
                                compose(*m, g.action.op(i), *g.action.central));
        EXPECT_TRUE(r.pass);
      }
    }
  }
}

TEST(Criterion, PinnedPassesUnpinnedFails) {
  auto m = dense(q(1, 2), q(9));
  WittAction a = closed_form_dense(m, Algebra::Gt, 1, 6);
  EXPECT_TRUE(criterion_check(*m, a.op(2), 3).pass);
  LiftResult r = lift_linear(*m, Algebra::Gt);
  GradedMap t = add(*m, r.family.particular, scale(r.family.basis[0], q(31, 7)));
  EXPECT_FALSE(criterion_check(*m, t, 1).pass);
}

TEST(Generic, DenseFindsBothBranches) {
  auto m = dense(q(1, 2), q(9));
  ExtensionOutcome o = extend_generic(m, Algebra::Gt, 6);
  ASSERT_EQ(o.status, ExtensionOutcome::Status::Extended);
  ASSERT_EQ(o.actions.size(), 2u);
  auto closed_p = closed_form_dense(m, Algebra::Gt, 1, 6), closed_m = closed_form_dense(m, Algebra::Gt, -1, 6);
  int matched = 0;
  for (const auto& a : o.actions) {
    expect_restriction(a);
    matched += same_ops(a, closed_p, -1, 6) || same_ops(a, closed_m, -1, 6);
  }
  EXPECT_EQ(matched, 2);
}

TEST(Generic, VermaFindsOneGtAction) {
  auto m = std::make_shared<WeightModule>(make_verma(q(1, 2), 10));
  ExtensionOutcome o = extend_generic(m, Algebra::Gt, 6);
  ASSERT_EQ(o.status, ExtensionOutcome::Status::Extended);
  ASSERT_EQ(o.actions.size(), 1u);
  EXPECT_TRUE(same_ops(o.actions[0], closed_form_verma(m, Algebra::Gt, -1, 6), -1, 6));
}

TEST(Generic, VirOnDenseHasZeroCentralCharge) {
  auto m = dense(q(1, 2), q(9));
  ExtensionOutcome o = extend_closed(m, Algebra::Vir, 1, 6);
  ASSERT_EQ(o.status, ExtensionOutcome::Status::Extended);
  ASSERT_FALSE(o.actions.empty());
  ASSERT_TRUE(o.actions[0].central);
  for (const auto& [k, b] : o.actions[0].central->blocks) EXPECT_TRUE(b.is_zero());
}

TEST(IntermediateIso, BranchAndVerdict) {
  IntermediateIso iso = intermediate_iso(q(1), q(1, 4), -8, 8, 6);
  EXPECT_TRUE(iso.verdict);
  EXPECT_TRUE(iso.morphism.pass);
  EXPECT_EQ(iso.matched_branches, std::vector<std::string>{"+"});
  auto b = iso.map.blocks.find(0);
  ASSERT_NE(b, iso.map.blocks.end());
  EXPECT_EQ(b->second(0, 0), q(1));
  // a = (-1 - sqrt tau)/2 selects the other branch
  IntermediateIso neg = intermediate_iso(q(-2), q(1, 4), -8, 8, 6);
  EXPECT_TRUE(neg.verdict);
  EXPECT_EQ(neg.matched_branches, std::vector<std::string>{"-"});
  try {
    intermediate_iso(q(0), q(0), -4, 4, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParameterDegenerate);
  }
}

TEST(Json, OutcomeAndGlueReports) {
  auto m = dense(q(1, 2), q(9));
  ExtensionOutcome o = extend_closed(m, Algebra::Gt, 0, 6);
  json j = o.to_json(true);
  EXPECT_EQ(j["status"], "Extended");
  EXPECT_EQ(j["actions"].size(), 2u);
  WittAction back = action_from_json(j["actions"][0]);
  EXPECT_TRUE(verify_bracket(back, 6).pass);
  EXPECT_EQ(std::string(status_name(ExtensionOutcome::Status::Undecided)), "Undecided");
}
