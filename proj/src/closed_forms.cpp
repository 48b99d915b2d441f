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

#include <algorithm>

#include "wittext/extend.hpp"

namespace wittext {

namespace {

QuadScalar half() { return QuadScalar(Rational(1, 2)); }
QuadScalar sgn_pow(int i) { return QuadScalar(i % 2 == 0 ? 1 : -1); }

std::string branch_label(int branch) { return branch > 0 ? "+" : "-"; }

void check_branch(int branch) {
  if (branch != 1 && branch != -1) throw Error(ErrorKind::BadFlag, "branch must be + or -");
}

void require_kind(const WeightModule& m, ModuleKind kind) {
  if (m.kind != kind)
    throw Error(ErrorKind::ModuleMismatch, std::string("expected a ") + kind_name(kind) + " module, got " +
                                               kind_name(m.kind));
}

std::pair<int, int> side_range(Algebra side, int depth) {
  switch (side) {
    case Algebra::Gt: return {-1, std::max(depth, 2)};
    case Algebra::Lt: return {-std::max(depth, 2), 1};
    default: return {-std::max(depth, 2), std::max(depth, 2)};
  }
}

QuadScalar tau_root(const WeightModule& m) {
  QuadScalar tau = m.param("tau");
  auto r = sqrt_in_field(tau);
  if (!r) throw Error(ErrorKind::RootNotInField, "sqrt(" + tau.str() + ") is not in a quadratic field over Q");
  return *r;
}

}  // namespace

QuadScalar dense_coefficient(const QuadScalar& s, const QuadScalar& mu, int i) {
  QuadScalar lin = QuadScalar(i) * (s - QuadScalar(1)) - mu;
  return sgn_pow(i) * half() * lin * pochhammer((QuadScalar(1) + mu + s) * half(), i);
}

QuadScalar verma_coefficient(Algebra side, int branch, const QuadScalar& lambda, int i, long j) {
  (void)side;
  check_branch(branch);
  QuadScalar jj(j);
  if (branch > 0)
    return sgn_pow(i) * half() * (QuadScalar(2) * jj + QuadScalar(i - 1) * lambda) *
           pochhammer(QuadScalar(1) - jj + lambda, i);
  return -half() * (QuadScalar(2) * (QuadScalar(i) - jj) + QuadScalar(i + 1) * lambda) *
         pochhammer(jj - QuadScalar(i) + QuadScalar(1), i);
}

QuadScalar lowest_coefficient(Algebra side, int branch, const QuadScalar& lambda, int i, long j) {
  QuadScalar jj(j);
  QuadScalar ii(i);
  if (side == Algebra::Lt || branch > 0)
    return -half() * ((QuadScalar(1) - ii) * lambda + QuadScalar(2) * (jj + QuadScalar(1))) *
           pochhammer(jj + ii + QuadScalar(1), -i);
  check_branch(branch);
  return -half() * ((QuadScalar(1) + ii) * lambda + QuadScalar(2) * (jj + QuadScalar(1) + ii)) *
         pochhammer(lambda + QuadScalar(2) + jj + ii, -i);
}

WittAction closed_form_dense(const ModulePtr& m, Algebra side, int branch, int depth) {
  require_kind(*m, ModuleKind::Dense);
  check_branch(branch);
  QuadScalar s = QuadScalar(branch) * tau_root(*m);
  auto [lo, hi] = side_range(side, depth);
  const WeightModule& mod = *m;
  WittAction a = scalar_action(
      m, side, lo, hi, [&](int i, int k) { return dense_coefficient(s, mod.weight(k), i); }, branch_label(branch));
  if (side == Algebra::Vir) a.central = zero_map(mod, 0);
  return a;
}

WittAction closed_form_verma(const ModulePtr& m, Algebra side, int branch, int depth) {
  require_kind(*m, ModuleKind::Verma);
  check_branch(branch);
  if (side != Algebra::Gt && side != Algebra::Lt)
    throw Error(ErrorKind::BadFlag, "Verma closed forms exist per side; glue them for full or vir");
  QuadScalar lambda = m->param("lambda");
  if (side == Algebra::Gt && branch > 0 && lambda != QuadScalar(-1))
    throw Error(ErrorKind::BranchUnavailable, "gt branch + exists only for lambda = -1");
  auto [lo, hi] = side_range(side, depth);
  return scalar_action(
      m, side, lo, hi, [&](int i, int k) { return verma_coefficient(side, branch, lambda, i, -k); },
      branch_label(branch));
}

WittAction closed_form_lowest(const ModulePtr& m, Algebra side, int branch, int depth) {
  require_kind(*m, ModuleKind::Lowest);
  check_branch(branch);
  if (side != Algebra::Gt && side != Algebra::Lt)
    throw Error(ErrorKind::BadFlag, "lowest-weight closed forms exist per side; glue them for full or vir");
  if (side == Algebra::Lt && branch < 0)
    throw Error(ErrorKind::BranchUnavailable, "the lt action on a lowest-weight module is unique (branch +)");
  QuadScalar lambda = m->param("lambda") - QuadScalar(2);
  auto [lo, hi] = side_range(side, depth);
  return scalar_action(
      m, side, lo, hi, [&](int i, int k) { return lowest_coefficient(side, branch, lambda, i, k); },
      side == Algebra::Lt ? "n/a" : branch_label(branch));
}

WittAction matrix_closed_form(const ModulePtr& m, const FieldMatrix& sqrt_c, int depth, Algebra side) {
  const WeightModule& mod = *m;
  if (!sqrt_c.is_square()) throw Error(ErrorKind::ShapeMismatch, "sqrt_c is " + sqrt_c.shape());
  for (const auto& [k, l] : mod.dims)
    if (l != static_cast<int>(sqrt_c.rows()))
      throw Error(ErrorKind::ShapeMismatch, "weight space at " + std::to_string(k) + " has dimension " +
                                                std::to_string(l));
  GradedMap c = casimir_operator(mod);
  if (c.blocks.empty()) throw Error(ErrorKind::EmptyInterior, "Casimir not computable on the window");
  FieldMatrix sq = sqrt_c * sqrt_c;
  for (const auto& [k, b] : c.blocks)
    if (b != sq) throw Error(ErrorKind::NotASquareRoot, "sqrt_c^2 differs from the Casimir at index " + std::to_string(k));
  auto [lo, hi] = side_range(side, depth);
  WittAction a;
  a.module = m;
  a.algebra = side;
  a.lo = lo;
  a.hi = hi;
  a.branch = "matrix";
  for (int i = lo; i <= hi; ++i) {
    if (i == -1) {
      a.ops[i] = sigma_f(mod);
      continue;
    }
    if (i == 0) {
      a.ops[i] = scale(sigma_h(mod), QuadScalar(Rational(-1, 2)));
      continue;
    }
    if (i == 1) {
      a.ops[i] = scale(sigma_e(mod), QuadScalar(-1));
      continue;
    }
    GradedMap g;
    g.degree = i;
    for (int k = mod.k_min; k <= mod.k_max; ++k) {
      if (mod.dim(k + i) < 0) continue;
      g.blocks[k] = matrix_coefficient(sqrt_c, mod.weight(k), i);
    }
    a.ops[i] = g;
  }
  if (side == Algebra::Vir) a.central = zero_map(mod, 0);
  return a;
}

WittAction functor_image(const ModulePtr& m, const QuadScalar& sqrt_tau, int depth) {
  QuadScalar tau = m->param("tau");
  if (sqrt_tau * sqrt_tau != tau)
    throw Error(ErrorKind::NotASquareRoot, sqrt_tau.str() + " does not square to " + tau.str());
  GradedMap c = casimir_operator(*m);
  if (c.blocks.empty()) throw Error(ErrorKind::EmptyInterior, "Casimir not computable on the window");
  FieldMatrix x = nilpotent_sqrt(c.blocks.begin()->second, tau, sqrt_tau);
  WittAction a = matrix_closed_form(m, x, depth);
  a.branch = sqrt_tau == tau_root(*m) ? "+" : "-";
  return a;
}

std::vector<std::pair<int, long>> verma_plus_escapes(const QuadScalar& lambda, int depth) {
  std::vector<std::pair<int, long>> out;
  for (int i = 2; i <= depth; ++i)
    for (long j = 0; j < i; ++j)
      if (!verma_coefficient(Algebra::Gt, 1, lambda, i, j).is_zero()) out.emplace_back(i, j);
  return out;
}

namespace {

std::vector<int> branches_for(const WeightModule& m, Algebra side, int branch) {
  if (branch != 0) return {branch};
  if (m.kind == ModuleKind::Verma && side == Algebra::Gt) {
    if (m.param("lambda") == QuadScalar(-1)) return {1, -1};
    return {-1};
  }
  if (m.kind == ModuleKind::Lowest && side == Algebra::Lt) return {1};
  return {1, -1};
}

WittAction closed_one_side(const ModulePtr& m, Algebra side, int branch, int depth) {
  switch (m->kind) {
    case ModuleKind::Dense: return closed_form_dense(m, side, branch, depth);
    case ModuleKind::Verma: return closed_form_verma(m, side, branch, depth);
    case ModuleKind::Lowest: return closed_form_lowest(m, side, branch, depth);
    case ModuleKind::Generalized: {
      QuadScalar r = tau_root(*m);
      WittAction base = functor_image(m, QuadScalar(branch) * r, depth);
      if (side == Algebra::Gt) return base;
      GradedMap c = casimir_operator(*m);
      FieldMatrix x = nilpotent_sqrt(c.blocks.begin()->second, m->param("tau"), QuadScalar(branch) * r);
      WittAction a = matrix_closed_form(m, x, depth, side);
      a.branch = base.branch;
      return a;
    }
    case ModuleKind::Intermediate: {
      WittAction a = make_intermediate(m->param("a"), m->param("b"), m->k_min, m->k_max, depth, side);
      a.module = m;
      return a;
    }
    default:
      throw Error(ErrorKind::BranchUnavailable, std::string("no closed form for ") + kind_name(m->kind) +
                                                    " modules; use the generic method");
  }
}

}  // namespace

ExtensionOutcome extend_closed(const ModulePtr& m, Algebra side, int branch, int depth) {
  ExtensionOutcome out;
  json attempts = json::array();
  auto try_side = [&](Algebra s, std::vector<WittAction>& into) {
    std::vector<int> brs = m->kind == ModuleKind::Intermediate ? std::vector<int>{1} : branches_for(*m, s, branch);
    for (int b : brs) {
      try {
        into.push_back(closed_one_side(m, s, b, depth));
      } catch (const Error& e) {
        attempts.push_back({{"side", algebra_name(s)}, {"branch", branch_label(b)},
                            {"error", error_name(e.kind())}, {"message", e.what()}});
      }
    }
  };

  std::vector<WittAction> candidates;
  if (side == Algebra::Gt || side == Algebra::Lt || m->kind == ModuleKind::Dense ||
      m->kind == ModuleKind::Intermediate) {
    try_side(side, candidates);
  } else {
    std::vector<WittAction> gts, lts;
    try_side(Algebra::Gt, gts);
    try_side(Algebra::Lt, lts);
    for (const auto& lt : lts)
      for (const auto& gt : gts) {
        if (branch != 0 && m->kind == ModuleKind::Generalized && lt.branch != gt.branch) continue;
        GlueResult r = side == Algebra::Vir ? glue_vir(lt, gt, depth) : glue_witt(lt, gt, depth);
        attempts.push_back({{"pair", lt.branch + "|" + gt.branch}, {"glue", r.to_json()}});
        if (r.ok) candidates.push_back(r.action);
      }
  }

  json verifications = json::array();
  json failures = json::array();
  for (auto& a : candidates) {
    Report r = verify_bracket(a, depth);
    verifications.push_back({{"branch", a.branch}, {"verification", r.to_json()}});
    if (r.pass) out.actions.push_back(a);
    else failures.push_back({{"branch", a.branch}, {"verification", r.to_json()}});
  }
  out.diagnostics = {{"method", "closed"}, {"attempts", attempts}, {"verifications", verifications}};
  if (!out.actions.empty()) {
    out.status = ExtensionOutcome::Status::Extended;
  } else if (!failures.empty()) {
    out.status = ExtensionOutcome::Status::Infeasible;
    out.certificate = {"HigherRelation", failures};
  } else {
    out.status = ExtensionOutcome::Status::Undecided;
    out.reason = "no closed-form candidate could be built";
  }
  return out;
}

}  // namespace wittext
