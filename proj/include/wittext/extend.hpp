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

#ifndef WITTEXT_EXTEND_HPP
#define WITTEXT_EXTEND_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittext/poly.hpp"
#include "wittext/weightmod.hpp"

namespace wittext {

using ModulePtr = std::shared_ptr<const WeightModule>;

// T (side gt, degree 2) or S (side lt, degree -2) with [f,T] = 3e resp. [e,S] = -3f
struct LinearFamily {
  Algebra side = Algebra::Gt;
  GradedMap particular;
  std::vector<GradedMap> basis;
  long equations = 0;
  long unknowns = 0;
};

struct InfeasibilityCertificate {
  std::string stage;  // LinearLift, QuadraticPin, HigherRelation, Boundary
  json witness = json::object();
};

struct LiftResult {
  bool consistent = true;
  LinearFamily family;
  InfeasibilityCertificate certificate;
};

LiftResult lift_linear(const WeightModule& m, Algebra side);

// quadratic condition [T, ad(e)T] + ad(e)^3 T / 6 (gt) or [S, ad(f)S] - ad(f)^3 S / 6 (lt)
GradedMap quadratic_residual(const WeightModule& m, const GradedMap& t, Algebra side);

struct PinResult {
  enum class Status { Solutions, Infeasible, Undecided };
  Status status = Status::Undecided;
  std::string strategy;
  std::vector<GradedMap> solutions;
  std::vector<std::vector<QuadScalar>> parameters;
  std::vector<std::string> branches;
  InfeasibilityCertificate certificate;
  std::string reason;
  json system = json::object();
};

PinResult pin_quadratic(const WeightModule& m, const LinearFamily& family);

// builds rho(L_i) for the side from T (or S) by the ad(e) / ad(f) recursion
WittAction extend_action(const ModulePtr& m, const GradedMap& t, Algebra side, int depth);

Report verify_bracket(const WittAction& a, int depth, bool interior_only = false);

// coefficient family: value of rho(L_i) on the (1-dim) weight space at index k
using CoefficientFn = std::function<QuadScalar(int i, int k)>;
WittAction scalar_action(const ModulePtr& m, Algebra algebra, int lo, int hi, const CoefficientFn& coef,
                         const std::string& branch);

// raw closed-form coefficients; j is the basis index of the module
QuadScalar dense_coefficient(const QuadScalar& tau_root, const QuadScalar& mu, int i);
QuadScalar verma_coefficient(Algebra side, int branch, const QuadScalar& lambda, int i, long j);
QuadScalar lowest_coefficient(Algebra side, int branch, const QuadScalar& lambda, int i, long j);

// branch is +1 or -1
WittAction closed_form_dense(const ModulePtr& m, Algebra side, int branch, int depth);
WittAction closed_form_verma(const ModulePtr& m, Algebra side, int branch, int depth);
WittAction closed_form_lowest(const ModulePtr& m, Algebra side, int branch, int depth);
WittAction matrix_closed_form(const ModulePtr& m, const FieldMatrix& sqrt_c, int depth, Algebra side = Algebra::Gt);
WittAction functor_image(const ModulePtr& m, const QuadScalar& sqrt_tau, int depth);

// indices (i, j) where the Verma "+" gt pattern maps w_j to a nonzero multiple of w_{j-i}, j - i < 0
std::vector<std::pair<int, long>> verma_plus_escapes(const QuadScalar& lambda, int depth);

struct GlueResult {
  bool ok = false;
  std::string error;
  WittAction action;
  GradedMap residual;
  Report report;
  json to_json() const;
};

GlueResult glue_witt(const WittAction& lt, const WittAction& gt, int depth);
GlueResult glue_vir(const WittAction& lt, const WittAction& gt, int depth);

Report criterion_check(const WeightModule& m, const GradedMap& t, int n_level);

struct ExtensionOutcome {
  enum class Status { Extended, Infeasible, Undecided };
  Status status = Status::Undecided;
  std::vector<WittAction> actions;
  InfeasibilityCertificate certificate;
  std::string reason;
  json diagnostics = json::object();
  json to_json(bool include_actions = false) const;
};

const char* status_name(ExtensionOutcome::Status s);

ExtensionOutcome extend_generic(const ModulePtr& m, Algebra side, int depth);
// dispatch by module kind; branch 0 means both
ExtensionOutcome extend_closed(const ModulePtr& m, Algebra side, int branch, int depth);

struct IntermediateIso {
  GradedMap map;
  bool verdict = false;
  std::vector<std::string> matched_branches;
  Report morphism;
  json to_json() const;
};

IntermediateIso intermediate_iso(const QuadScalar& a, const QuadScalar& b, int k_min, int k_max, int depth);

// counterexample certification
struct BoundaryFamily {
  std::string branch;
  Matrix<RatFunc> constant_part;   // T at the reference weight
  RatFunc r1, r2;                  // boundary residual pair
  Poly<Rational> p1, p2, gcd;      // numerators and their gcd
  bool consistent_at_lambda = false;
};

struct CounterexampleReport {
  std::string status;  // Infeasible, Extended, Undecided
  std::string stage;
  QuadScalar lambda;
  std::vector<BoundaryFamily> families;
  std::vector<BoundaryFamily> printed_families;
  bool gcd_one = false;
  Report printed_sl2;
  ExtensionOutcome generic;
  json to_json() const;
};

CounterexampleReport counterexample_certify(const QuadScalar& lambda, int k_min, int k_max, int depth = 6);

}  // namespace wittext

#endif  // WITTEXT_EXTEND_HPP
