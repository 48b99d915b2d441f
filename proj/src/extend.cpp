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

#include <algorithm>

namespace wittext {

namespace {

QuadScalar q(long n) { return QuadScalar(n); }
QuadScalar q(long n, long d) { return QuadScalar(Rational(n, d)); }

bool same_module(const WittAction& a, const WittAction& b) {
  if (a.module == b.module) return true;
  return module_to_json(*a.module) == module_to_json(*b.module);
}

}  // namespace

LiftResult lift_linear(const WeightModule& m, Algebra side) {
  if (side != Algebra::Gt && side != Algebra::Lt)
    throw Error(ErrorKind::BadFlag, "lift_linear works on side gt or lt");
  const bool gt = side == Algebra::Gt;
  const int d = gt ? 2 : -2;
  GradedMap g = gt ? sigma_f(m) : sigma_e(m);
  const int gd = g.degree;
  GradedMap rhs = gt ? scale(sigma_e(m), q(3)) : scale(sigma_f(m), q(-3));

  std::map<int, long> offset;
  long n = 0;
  for (int k = m.k_min; k <= m.k_max; ++k) {
    if (m.dim(k + d) < 0) continue;
    offset[k] = n;
    n += static_cast<long>(m.dim(k + d)) * m.dims.at(k);
  }
  auto available = [&](int j) { return m.dim(j) >= 0 && m.dim(j + d) >= 0; };
  auto var = [&](int j, int r, int c) -> long {
    auto it = offset.find(j);
    if (it == offset.end()) return -1;
    return it->second + static_cast<long>(r) * m.dim(j) + c;
  };

  std::vector<std::vector<QuadScalar>> rows;
  std::vector<QuadScalar> b;
  json labels = json::array();
  for (int k = m.k_min; k <= m.k_max; ++k) {
    auto gk = block_at(m, g, k);
    auto gkd = block_at(m, g, k + d);
    auto hk = block_at(m, rhs, k);
    if (!gk || !gkd || !hk || !available(k) || !available(k + gd)) continue;
    int rr = m.dim(k + d + gd);
    int cc = m.dim(k);
    int mid_left = m.dim(k + d);
    int mid_right = m.dim(k + gd);
    for (int r = 0; r < rr; ++r) {
      for (int c = 0; c < cc; ++c) {
        std::vector<QuadScalar> row(n, QuadScalar());
        for (int s = 0; s < mid_left; ++s) {
          long v = var(k, s, c);
          if (v >= 0 && !(*gkd)(r, s).is_zero()) row[v] += (*gkd)(r, s);
        }
        for (int s = 0; s < mid_right; ++s) {
          long v = var(k + gd, r, s);
          if (v >= 0 && !(*gk)(s, c).is_zero()) row[v] -= (*gk)(s, c);
        }
        rows.push_back(std::move(row));
        b.push_back((*hk)(r, c));
        labels.push_back({k, r, c});
      }
    }
  }
  if (rows.empty()) throw Error(ErrorKind::EmptyInterior, "no index supports the linear lift equations");

  FieldMatrix a(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (long j = 0; j < n; ++j) a(i, j) = rows[i][j];

  LiftResult out;
  out.family.side = side;
  out.family.equations = static_cast<long>(rows.size());
  out.family.unknowns = n;
  auto sol = solve_linear(a, b);
  if (auto* bad = std::get_if<Inconsistent<QuadScalar>>(&sol)) {
    out.consistent = false;
    out.certificate.stage = "LinearLift";
    json w = json::array();
    QuadScalar combined;
    for (std::size_t i = 0; i < bad->witness.size(); ++i) {
      if (bad->witness[i].is_zero()) continue;
      w.push_back({{"equation", labels[i]}, {"y", to_json(bad->witness[i])}});
      combined += bad->witness[i] * b[i];
    }
    out.certificate.witness = {{"combination", w}, {"rhs", to_json(combined)}};
    return out;
  }
  const auto& set = std::get<AffineSolutionSet<QuadScalar>>(sol);
  auto to_map = [&](const std::vector<QuadScalar>& x) {
    GradedMap t;
    t.degree = d;
    for (const auto& [k, off] : offset) {
      FieldMatrix blk(m.dim(k + d), m.dims.at(k));
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c) blk(r, c) = x[off + r * blk.cols() + c];
      t.blocks[k] = blk;
    }
    return t;
  };
  out.family.particular = to_map(set.particular);
  for (const auto& v : set.basis) out.family.basis.push_back(to_map(v));
  return out;
}

GradedMap quadratic_residual(const WeightModule& m, const GradedMap& t, Algebra side) {
  const bool gt = side == Algebra::Gt;
  GradedMap g = gt ? sigma_e(m) : sigma_f(m);
  GradedMap x1 = bracket(m, g, t);
  GradedMap x3 = bracket(m, g, bracket(m, g, x1));
  GradedMap quad = bracket(m, t, x1);
  return add(m, quad, scale(x3, gt ? q(1, 6) : q(-1, 6)));
}

WittAction extend_action(const ModulePtr& m, const GradedMap& t, Algebra side, int depth) {
  if (side != Algebra::Gt && side != Algebra::Lt)
    throw Error(ErrorKind::BadFlag, "extend_action works on side gt or lt");
  WittAction a;
  a.module = m;
  a.algebra = side;
  a.ops[-1] = sigma_f(*m);
  a.ops[0] = scale(sigma_h(*m), q(-1, 2));
  a.ops[1] = scale(sigma_e(*m), q(-1));
  if (side == Algebra::Gt) {
    a.lo = -1;
    a.hi = std::max(depth, 2);
    a.ops[2] = t;
    GradedMap e = sigma_e(*m);
    for (int i = 3; i <= a.hi; ++i) a.ops[i] = scale(bracket(*m, e, a.ops[i - 1]), q(1, i - 2));
  } else {
    a.lo = std::min(-depth, -2);
    a.hi = 1;
    a.ops[-2] = t;
    GradedMap f = sigma_f(*m);
    for (int i = -3; i >= a.lo; --i) a.ops[i] = scale(bracket(*m, f, a.ops[i + 1]), q(-1, i + 2));
  }
  for (const auto& [i, g] : a.ops)
    if (g.blocks.empty())
      throw Error(ErrorKind::DepthExceedsWindow, "rho(L_" + std::to_string(i) + ") has no block in the window");
  return a;
}

Report verify_bracket(const WittAction& a, int depth, bool interior_only) {
  // the open view drops every closed edge, so only fully interior composites get compared
  WeightModule m = interior_only ? open_view(*a.module) : *a.module;
  Report total;
  long pairs = 0;
  const bool vir = a.algebra == Algebra::Vir;
  for (int i = a.lo; i <= a.hi; ++i) {
    for (int j = i + 1; j <= a.hi; ++j) {
      if (std::abs(i) > depth || std::abs(j) > depth) continue;
      if (!a.has(i) || !a.has(j) || !a.has(i + j)) continue;
      GradedMap lhs = bracket(m, a.op(i), a.op(j));
      GradedMap rhs = scale(a.op(i + j), q(i - j));
      if (vir && i + j == 0 && a.central) {
        Rational c(static_cast<long>(i) * i * i - i, 12);
        rhs = add(m, rhs, scale(*a.central, QuadScalar(c)));
      }
      total.merge(compare_maps(m, lhs, rhs, {i, j}, "[L_i,L_j] - (i-j)L_{i+j}"));
      ++pairs;
    }
  }
  total.extra = {{"depth", depth},
                 {"pairs", pairs},
                 {"semantics", interior_only ? "interior" : "module-edges"},
                 {"algebra", algebra_name(a.algebra)}};
  return total;
}

WittAction scalar_action(const ModulePtr& m, Algebra algebra, int lo, int hi, const CoefficientFn& coef,
                         const std::string& branch) {
  for (const auto& [k, l] : m->dims)
    if (l != 1) throw Error(ErrorKind::ShapeMismatch, "scalar coefficients need one-dimensional weight spaces");
  WittAction a;
  a.module = m;
  a.algebra = algebra;
  a.lo = lo;
  a.hi = hi;
  a.branch = branch;
  for (int i = lo; i <= hi; ++i) {
    if (i == -1) {
      a.ops[i] = sigma_f(*m);
      continue;
    }
    if (i == 0) {
      a.ops[i] = scale(sigma_h(*m), q(-1, 2));
      continue;
    }
    if (i == 1) {
      a.ops[i] = scale(sigma_e(*m), q(-1));
      continue;
    }
    GradedMap g;
    g.degree = i;
    for (int k = m->k_min; k <= m->k_max; ++k) {
      int dst = m->dim(k + i);
      if (dst < 0) continue;
      if (dst == 0) g.blocks[k] = FieldMatrix(0, 1);
      else g.blocks[k] = FieldMatrix(1, 1, {coef(i, k)});
    }
    a.ops[i] = g;
  }
  return a;
}

json GlueResult::to_json() const {
  json j{{"ok", ok}};
  if (!error.empty()) j["error"] = error;
  if (!residual.blocks.empty()) {
    long nonzero = 0;
    json first = nullptr;
    for (const auto& [k, b] : residual.blocks)
      if (!b.is_zero()) {
        if (nonzero == 0) first = {{"k", k}, {"block", wittext::to_json(b)}};
        ++nonzero;
      }
    j["residual_nonzero_blocks"] = nonzero;
    if (nonzero) j["residual_first"] = first;
  }
  j["verification"] = report.to_json();
  return j;
}

namespace {

GlueResult glue_impl(const WittAction& lt, const WittAction& gt, int depth, bool vir) {
  GlueResult out;
  if (!same_module(lt, gt)) throw Error(ErrorKind::ModuleMismatch, "actions live on different modules");
  const WeightModule& m = *gt.module;
  for (int i = -1; i <= 1; ++i) {
    Report r = compare_maps(m, lt.op(i), gt.op(i), {i}, "overlap");
    if (!r.pass) throw Error(ErrorKind::OverlapDisagreement, "actions disagree on L_" + std::to_string(i));
  }
  const GradedMap& s = lt.op(-2);
  const GradedMap& t = gt.op(2);
  GradedMap st = bracket(m, s, t);
  GradedMap h2 = scale(sigma_h(m), q(2));
  WittAction glued;
  glued.module = gt.module;
  glued.lo = lt.lo;
  glued.hi = gt.hi;
  glued.branch = lt.branch + "/" + gt.branch;
  for (const auto& [i, g] : lt.ops) glued.ops[i] = g;
  for (const auto& [i, g] : gt.ops) glued.ops[i] = g;
  if (!vir) {
    out.residual = subtract(m, st, h2);
    Report r = compare_maps(m, st, h2, {}, "[S,T] - 2h");
    glued.algebra = Algebra::Full;
    if (!r.pass) {
      out.error = "GlueError";
      out.report = r;
      return out;
    }
    out.ok = true;
    out.action = glued;
    out.report = verify_bracket(glued, depth);
    return out;
  }
  GradedMap k = subtract(m, scale(sigma_h(m), q(4)), scale(st, q(2)));
  Report ks = compare_maps(m, bracket(m, k, s), zero_map(m, -2), {-2}, "[K,S]");
  Report kt = compare_maps(m, bracket(m, k, t), zero_map(m, 2), {2}, "[K,T]");
  ks.merge(kt);
  out.residual = k;
  bool k_zero = true;
  for (const auto& [idx, b] : k.blocks) k_zero = k_zero && b.is_zero();
  if (!ks.pass) {
    out.error = "CentralityFailure";
    out.report = ks;
    out.report.extra["K_zero"] = k_zero;
    return out;
  }
  glued.algebra = Algebra::Vir;
  glued.central = k;
  out.ok = true;
  out.action = glued;
  out.report = verify_bracket(glued, depth);
  out.report.extra["K_zero"] = k_zero;
  return out;
}

}  // namespace

GlueResult glue_witt(const WittAction& lt, const WittAction& gt, int depth) {
  return glue_impl(lt, gt, depth, false);
}

GlueResult glue_vir(const WittAction& lt, const WittAction& gt, int depth) {
  return glue_impl(lt, gt, depth, true);
}

Report criterion_check(const WeightModule& m, const GradedMap& t, int n_level) {
  Report total;
  json conditions = json::array();
  auto record = [&](const std::string& name, const Report& r) {
    conditions.push_back({{"condition", name}, {"status", r.pass ? "pass" : "fail"}, {"checked", r.checked}});
    total.merge(r);
  };
  GradedMap e = sigma_e(m);
  record("ad(f)T = 3e", compare_maps(m, bracket(m, sigma_f(m), t), scale(e, q(3)), {1}, "ad(f)T - 3e"));
  record("ad(h)T = 4T", compare_maps(m, bracket(m, sigma_h(m), t), scale(t, q(4)), {2}, "ad(h)T - 4T"));
  GradedMap c = casimir_operator(m);
  record("ad(c)T = 0", compare_maps(m, bracket(m, c, t), zero_map(m, t.degree), {3}, "ad(c)T"));
  // ad(e)^n T / n!
  std::vector<GradedMap> powers{t};
  for (int n = 1; n <= 2 * n_level + 1; ++n)
    powers.push_back(scale(bracket(m, e, powers.back()), q(1, n)));
  record("[T, ad(e)T] = -ad(e)^3 T / 6",
         compare_maps(m, bracket(m, t, powers[1]), scale(powers[3], q(-1)), {4}, "R23"));
  for (int k = 1; k <= n_level; ++k) {
    // [T, ad(e)^{2k-1}T/(2k-1)!] = -(2k-1) ad(e)^{2k+1}T/(2k+1)!
    Report r = compare_maps(m, bracket(m, t, powers[2 * k - 1]), scale(powers[2 * k + 1], q(-(2 * k - 1))),
                            {100 + k}, "level relation");
    record("level " + std::to_string(k), r);
  }
  total.extra["conditions"] = conditions;
  return total;
}

const char* status_name(ExtensionOutcome::Status s) {
  switch (s) {
    case ExtensionOutcome::Status::Extended: return "Extended";
    case ExtensionOutcome::Status::Infeasible: return "Infeasible";
    case ExtensionOutcome::Status::Undecided: return "Undecided";
  }
  return "Undecided";
}

json ExtensionOutcome::to_json(bool include_actions) const {
  json j{{"status", status_name(status)}};
  if (status == Status::Infeasible)
    j["certificate"] = {{"stage", certificate.stage}, {"witness", certificate.witness}};
  if (!reason.empty()) j["reason"] = reason;
  json branches = json::array();
  for (const auto& a : actions) branches.push_back(a.branch);
  j["branches"] = branches;
  if (include_actions) {
    json acts = json::array();
    for (const auto& a : actions) acts.push_back(action_to_json(a));
    j["actions"] = acts;
  }
  j["diagnostics"] = diagnostics;
  return j;
}

ExtensionOutcome extend_generic(const ModulePtr& m, Algebra side, int depth) {
  ExtensionOutcome out;
  if (side == Algebra::Full || side == Algebra::Vir) {
    ExtensionOutcome g = extend_generic(m, Algebra::Gt, depth);
    ExtensionOutcome l = extend_generic(m, Algebra::Lt, depth);
    out.diagnostics = {{"gt", g.to_json()}, {"lt", l.to_json()}};
    if (g.status != ExtensionOutcome::Status::Extended || l.status != ExtensionOutcome::Status::Extended) {
      const ExtensionOutcome& bad = g.status != ExtensionOutcome::Status::Extended ? g : l;
      out.status = bad.status;
      out.certificate = bad.certificate;
      out.reason = bad.reason;
      return out;
    }
    json attempts = json::array();
    for (const auto& lt : l.actions)
      for (const auto& gt : g.actions) {
        GlueResult r = side == Algebra::Vir ? glue_vir(lt, gt, depth) : glue_witt(lt, gt, depth);
        attempts.push_back({{"pair", lt.branch + "|" + gt.branch}, {"result", r.to_json()}});
        if (r.ok && r.report.pass) out.actions.push_back(r.action);
      }
    out.diagnostics["glue"] = attempts;
    if (!out.actions.empty()) {
      out.status = ExtensionOutcome::Status::Extended;
    } else {
      out.status = ExtensionOutcome::Status::Infeasible;
      out.certificate = {"Glue", attempts};
    }
    return out;
  }

  LiftResult lift = lift_linear(*m, side);
  out.diagnostics["lift"] = {{"equations", lift.family.equations},
                             {"unknowns", lift.family.unknowns},
                             {"family_dimension", lift.family.basis.size()}};
  if (!lift.consistent) {
    out.status = ExtensionOutcome::Status::Infeasible;
    out.certificate = lift.certificate;
    return out;
  }
  PinResult pin = pin_quadratic(*m, lift.family);
  out.diagnostics["pin"] = {{"strategy", pin.strategy}, {"solutions", pin.solutions.size()}};
  if (pin.status == PinResult::Status::Infeasible) {
    out.status = ExtensionOutcome::Status::Infeasible;
    out.certificate = pin.certificate;
    return out;
  }
  if (pin.status == PinResult::Status::Undecided) {
    out.status = ExtensionOutcome::Status::Undecided;
    out.reason = pin.reason;
    out.diagnostics["system"] = pin.system;
    return out;
  }
  json failures = json::array();
  for (std::size_t s = 0; s < pin.solutions.size(); ++s) {
    WittAction a = extend_action(m, pin.solutions[s], side, depth);
    a.branch = s < pin.branches.size() ? pin.branches[s] : "#" + std::to_string(s + 1);
    Report r = verify_bracket(a, depth);
    if (r.pass) out.actions.push_back(a);
    else failures.push_back({{"branch", a.branch}, {"verification", r.to_json()}});
  }
  if (!out.actions.empty()) {
    out.status = ExtensionOutcome::Status::Extended;
  } else {
    out.status = ExtensionOutcome::Status::Infeasible;
    out.certificate = {"HigherRelation", failures};
  }
  return out;
}

json IntermediateIso::to_json() const {
  return json{{"verdict", verdict}, {"matched_branches", matched_branches}, {"morphism", morphism.to_json()}};
}

IntermediateIso intermediate_iso(const QuadScalar& a, const QuadScalar& b, int k_min, int k_max, int depth) {
  QuadScalar s = a + b;
  if (s.is_rational() && is_integer(s.a()))
    throw Error(ErrorKind::ParameterDegenerate, "2a lies in -2b + 2Z");
  WittAction inter = make_intermediate(a, b, k_min, k_max, depth);
  const WeightModule& vm = *inter.module;
  QuadScalar tau = (q(1) + q(2) * a) * (q(1) + q(2) * a);
  auto dense = std::make_shared<WeightModule>(make_dense(q(-2) * b, tau, k_min, k_max));
  IntermediateIso out;
  out.map.degree = 0;
  for (int n = k_min; n <= k_max; ++n)
    out.map.blocks[n] = FieldMatrix(1, 1, {pochhammer(b - a - q(n), n)});
  out.morphism = verify_morphism_report(vm, *dense, out.map);
  bool invertible = true;
  for (const auto& [n, blk] : out.map.blocks) invertible = invertible && !blk(0, 0).is_zero();
  out.morphism.extra["invertible"] = invertible;
  out.verdict = out.morphism.pass && invertible;
  for (int branch : {1, -1}) {
    WittAction d = closed_form_dense(dense, Algebra::Gt, branch, depth);
    bool match = true;
    for (int i = -1; i <= depth && match; ++i) {
      // phi rho_int(L_i) = rho_dense(L_i) phi
      GradedMap left = compose(*dense, out.map, inter.op(i));
      GradedMap right = compose(*dense, d.op(i), out.map);
      match = compare_maps(*dense, left, right).pass;
    }
    if (match) out.matched_branches.push_back(branch > 0 ? "+" : "-");
  }
  out.verdict = out.verdict && !out.matched_branches.empty();
  return out;
}

}  // namespace wittext
