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

#ifndef WITTEXT_WEIGHTMOD_HPP
#define WITTEXT_WEIGHTMOD_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittext/matrix.hpp"
#include "wittext/quad.hpp"
#include "wittext/serialize.hpp"

namespace wittext {

enum class ModuleKind { Dense, Verma, Lowest, Finite, Generalized, Counterexample, Intermediate, Custom };

const char* kind_name(ModuleKind kind);
ModuleKind parse_kind(const std::string& name);

// Truncated weight module. Index k carries weight anchor + 2k. An edge marked
// closed is a genuine edge of the module: indices past it are zero spaces.
struct WeightModule {
  ModuleKind kind = ModuleKind::Custom;
  std::map<std::string, QuadScalar> params;
  std::optional<FieldMatrix> nilpotent;
  bool dual = false;

  QuadScalar anchor;
  int k_min = 0;
  int k_max = -1;
  bool closed_lo = false;
  bool closed_hi = false;
  std::map<int, int> dims;
  std::map<int, FieldMatrix> e;  // k -> (k+1)
  std::map<int, FieldMatrix> f;  // k -> (k-1)

  bool in_window(int k) const { return k >= k_min && k <= k_max; }
  // -1 when unknown (past an open edge)
  int dim(int k) const;
  bool known(int k) const { return dim(k) >= 0; }
  QuadScalar weight(int k) const { return anchor + QuadScalar(2 * k); }
  QuadScalar param(const std::string& name) const;
};

// degree-homogeneous operator family, block k maps M_k -> M_{k+degree}
struct GradedMap {
  int degree = 0;
  std::map<int, FieldMatrix> blocks;
};

// stored block, or a zero block when source or target lies past a closed edge
std::optional<FieldMatrix> block_at(const WeightModule& m, const GradedMap& g, int k);

GradedMap sigma_e(const WeightModule& m);
GradedMap sigma_f(const WeightModule& m);
GradedMap sigma_h(const WeightModule& m);
GradedMap identity_map(const WeightModule& m);
GradedMap zero_map(const WeightModule& m, int degree);

GradedMap compose(const WeightModule& m, const GradedMap& a, const GradedMap& b);
GradedMap add(const WeightModule& m, const GradedMap& a, const GradedMap& b);
GradedMap subtract(const WeightModule& m, const GradedMap& a, const GradedMap& b);
GradedMap scale(const GradedMap& a, const QuadScalar& s);
GradedMap bracket(const WeightModule& m, const GradedMap& a, const GradedMap& b);

struct Failure {
  std::vector<int> where;
  FieldMatrix residual;
  std::string what;
};

struct Report {
  bool pass = true;
  long checked = 0;
  std::vector<Failure> failures;
  json extra = json::object();

  void merge(const Report& other);
  json to_json(std::size_t max_failures = 8) const;
};

// compares a and b on every index where both exist; tag is prepended to failure coordinates
Report compare_maps(const WeightModule& m, const GradedMap& a, const GradedMap& b,
                    const std::vector<int>& tag = {}, const std::string& what = "");

WeightModule make_dense(const QuadScalar& mu0, const QuadScalar& tau, int k_min, int k_max);
WeightModule make_verma(const QuadScalar& lambda, int depth);
WeightModule make_lowest(const QuadScalar& lambda, int depth);
WeightModule make_finite(int n);
WeightModule make_generalized_dense(const QuadScalar& mu0, const QuadScalar& tau, const FieldMatrix& n,
                                    int k_min, int k_max);
WeightModule make_counterexample(const QuadScalar& lambda, int k_min, int k_max);
// the data exactly as printed; fails [e,f] = h at the top 2-dim weight
WeightModule make_counterexample_printed(const QuadScalar& lambda, int k_min, int k_max);

WeightModule chevalley_dual(const WeightModule& m);
// same blocks with every edge treated as a truncation
WeightModule open_view(const WeightModule& m);

GradedMap casimir_operator(const WeightModule& m);
Report verify_sl2(const WeightModule& m);
bool verify_morphism(const WeightModule& m, const WeightModule& n, const GradedMap& phi);
Report verify_morphism_report(const WeightModule& m, const WeightModule& n, const GradedMap& phi);

json module_to_json(const WeightModule& m);
WeightModule module_from_json(const json& j);
json graded_to_json(const GradedMap& g);
GradedMap graded_from_json(const json& j);

enum class Algebra { Gt, Lt, Full, Vir };
const char* algebra_name(Algebra a);
Algebra parse_algebra(const std::string& name);

struct WittAction {
  std::shared_ptr<const WeightModule> module;
  Algebra algebra = Algebra::Gt;
  int lo = -1;
  int hi = 2;
  std::map<int, GradedMap> ops;
  std::optional<GradedMap> central;
  std::string branch = "n/a";

  const GradedMap& op(int i) const;
  bool has(int i) const { return ops.count(i) != 0; }
};

json action_to_json(const WittAction& a);
WittAction action_from_json(const json& j);

// rho(L_i) w_n = (a i + b - n) w_{n+i}; the module is read off through L_-1, L_0, L_1
WittAction make_intermediate(const QuadScalar& a, const QuadScalar& b, int k_min, int k_max, int depth,
                             Algebra algebra = Algebra::Gt);

}  // namespace wittext

#endif  // WITTEXT_WEIGHTMOD_HPP
