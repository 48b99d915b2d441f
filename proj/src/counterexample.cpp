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

#include "wittext/extend.hpp"

namespace wittext {

namespace {

using RMatrix = Matrix<RatFunc>;

json rmatrix_json(const RMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json family_json(const BoundaryFamily& f) {
  return {{"branch", f.branch},
          {"T_at_-2", rmatrix_json(f.constant_part)},
          {"boundary_residual", {f.r1.str(), f.r2.str()}},
          {"numerators", {f.p1.str("lambda"), f.p2.str("lambda")}},
          {"gcd", f.gcd.str("lambda")},
          {"consistent_at_lambda", f.consistent_at_lambda}};
}

// deep region k <= -1 is generalized dense with tau = (lambda+1)^2 and nilpotent part nil
std::vector<BoundaryFamily> boundary_families(const WeightModule& m, bool printed) {
  RatFunc lam = RatFunc::var();
  RatFunc l1 = lam + RatFunc(1);
  RatFunc quarter(Rational(1, 4));
  RMatrix nil(2, 2);
  if (printed) nil(0, 1) = quarter;
  else nil(1, 0) = quarter;
  RatFunc tau = l1 * l1;
  RMatrix c = RMatrix::scalar(2, tau) + nil * RatFunc(4);

  // rows of M_0 killed by f: M_1 -> M_0
  const FieldMatrix& f1 = m.f.at(1);
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < f1.rows(); ++r) {
    bool zero = true;
    for (std::size_t s = 0; s < f1.cols(); ++s) zero = zero && f1(r, s).is_zero();
    if (zero) rows.push_back(r);
  }
  if (rows.size() != 1) throw Error(ErrorKind::ShapeMismatch, "expected one row of M_0 outside the image of f");
  std::size_t row = rows.front();

  RatFunc mu = lam - RatFunc(4);        // weight at index -2
  RatFunc mu1 = lam - RatFunc(2);       // weight at index -1
  RatFunc s1 = mu1 + RatFunc(1);
  RMatrix e_m1 = RMatrix::scalar(2, quarter * (tau - s1 * s1)) + nil;

  Rational lambda0 = m.param("lambda").a();
  std::vector<BoundaryFamily> out;
  for (int branch : {1, -1}) {
    RatFunc root = l1 * RatFunc(branch);
    RMatrix x = nilpotent_sqrt(c, tau, root);
    RMatrix t = matrix_coefficient(x, mu, 2);
    RMatrix resid = t + e_m1 * RatFunc(3);
    BoundaryFamily fam;
    fam.branch = branch > 0 ? "+" : "-";
    fam.constant_part = t;
    fam.r1 = resid(row, 0);
    fam.r2 = resid(row, 1);
    fam.p1 = fam.r1.num();
    fam.p2 = fam.r2.num();
    fam.gcd = poly_gcd(fam.p1, fam.p2);
    fam.consistent_at_lambda = sgn(fam.p1.eval(lambda0)) == 0 && sgn(fam.p2.eval(lambda0)) == 0;
    out.push_back(std::move(fam));
  }
  return out;
}

}  // namespace

json CounterexampleReport::to_json() const {
  json fams = json::array();
  for (const auto& f : families) fams.push_back(family_json(f));
  json printed = json::array();
  for (const auto& f : printed_families) printed.push_back(family_json(f));
  json j{{"status", status}};
  if (!stage.empty()) j["stage"] = stage;
  j["lambda"] = wittext::to_json(lambda);
  j["boundary"] = {{"families", fams}, {"gcd_one", gcd_one}};
  j["printed_data"] = {{"sl2", printed_sl2.to_json()}, {"families", printed}};
  j["generic"] = generic.to_json();
  return j;
}

CounterexampleReport counterexample_certify(const QuadScalar& lambda, int k_min, int k_max, int depth) {
  if (k_min > -6) throw Error(ErrorKind::WindowTooSmall, "need at least 6 weights below lambda");
  if (!lambda.is_rational()) throw Error(ErrorKind::BadFlag, "lambda must be rational");
  auto m = std::make_shared<WeightModule>(make_counterexample(lambda, k_min, k_max));
  WeightModule printed = make_counterexample_printed(lambda, k_min, k_max);

  CounterexampleReport rep;
  rep.lambda = lambda;
  rep.families = boundary_families(*m, false);
  rep.printed_families = boundary_families(printed, true);
  rep.printed_sl2 = verify_sl2(printed);
  rep.gcd_one = true;
  bool any_consistent = false;
  for (const auto& f : rep.families) {
    rep.gcd_one = rep.gcd_one && f.gcd.degree() == 0;
    any_consistent = any_consistent || f.consistent_at_lambda;
  }

  rep.generic = extend_generic(m, Algebra::Gt, depth);
  rep.status = status_name(rep.generic.status);
  if (rep.generic.status == ExtensionOutcome::Status::Infeasible) rep.stage = rep.generic.certificate.stage;
  if (!any_consistent && rep.generic.status != ExtensionOutcome::Status::Extended) {
    rep.status = "Infeasible";
    rep.stage = "Boundary";
  }
  return rep;
}

}  // namespace wittext
