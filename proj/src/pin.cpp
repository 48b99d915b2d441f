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
#include <array>

#include "wittext/extend.hpp"

namespace wittext {

namespace {

using QPoly = Poly<QuadScalar>;

// one scalar equation c0 + sum lin_a t_a + sum_{a<=b} quad_ab t_a t_b = 0
struct Quadric {
  QuadScalar c0;
  std::vector<QuadScalar> lin;
  std::vector<std::vector<QuadScalar>> quad;  // upper triangle
  json where;

  bool is_zero() const {
    if (!c0.is_zero()) return false;
    for (const auto& x : lin)
      if (!x.is_zero()) return false;
    for (const auto& row : quad)
      for (const auto& x : row)
        if (!x.is_zero()) return false;
    return true;
  }
  QuadScalar eval(const std::vector<QuadScalar>& t) const {
    QuadScalar r = c0;
    for (std::size_t a = 0; a < t.size(); ++a) {
      r += lin[a] * t[a];
      for (std::size_t b = a; b < t.size(); ++b) r += quad[a][b] * t[a] * t[b];
    }
    return r;
  }
};

class System {
 public:
  System(const WeightModule& m, const LinearFamily& fam) : m_(m), fam_(fam) {
    g_ = fam.side == Algebra::Gt ? sigma_e(m) : sigma_f(m);
  }

  GradedMap point(const std::vector<QuadScalar>& t) const {
    GradedMap x = fam_.particular;
    for (std::size_t a = 0; a < t.size(); ++a)
      if (!t[a].is_zero()) x = add(m_, x, scale(fam_.basis[a], t[a]));
    return x;
  }

  std::vector<Quadric> build() const {
    std::size_t p = fam_.basis.size();
    const GradedMap& pt = fam_.particular;
    GradedMap c0 = quadratic_residual(m_, pt, fam_.side);
    std::vector<GradedMap> lin(p);
    std::vector<std::vector<GradedMap>> quad(p, std::vector<GradedMap>(p));
    for (std::size_t a = 0; a < p; ++a) {
      const GradedMap& b = fam_.basis[a];
      lin[a] = add(m_, add(m_, qform(pt, b), qform(b, pt)), linear_part(b));
      for (std::size_t c = a; c < p; ++c)
        quad[a][c] = a == c ? qform(b, b) : add(m_, qform(b, fam_.basis[c]), qform(fam_.basis[c], b));
    }
    std::vector<Quadric> eqs;
    for (int k = m_.k_min; k <= m_.k_max; ++k) {
      auto b0 = block_at(m_, c0, k);
      if (!b0) continue;
      std::vector<FieldMatrix> lb;
      std::vector<std::vector<FieldMatrix>> qb(p, std::vector<FieldMatrix>(p));
      bool ok = true;
      for (std::size_t a = 0; a < p && ok; ++a) {
        auto x = block_at(m_, lin[a], k);
        if (!x) ok = false;
        else lb.push_back(*x);
        for (std::size_t c = a; c < p && ok; ++c) {
          auto y = block_at(m_, quad[a][c], k);
          if (!y) ok = false;
          else qb[a][c] = *y;
        }
      }
      if (!ok) continue;
      for (std::size_t r = 0; r < b0->rows(); ++r)
        for (std::size_t s = 0; s < b0->cols(); ++s) {
          Quadric e;
          e.c0 = (*b0)(r, s);
          e.lin.resize(p);
          e.quad.assign(p, std::vector<QuadScalar>(p));
          for (std::size_t a = 0; a < p; ++a) {
            e.lin[a] = lb[a](r, s);
            for (std::size_t c = a; c < p; ++c) e.quad[a][c] = qb[a][c](r, s);
          }
          e.where = {k, r, s};
          if (!e.is_zero()) eqs.push_back(std::move(e));
        }
    }
    return eqs;
  }

 private:
  GradedMap qform(const GradedMap& x, const GradedMap& y) const { return bracket(m_, x, bracket(m_, g_, y)); }
  GradedMap linear_part(const GradedMap& x) const {
    GradedMap x3 = bracket(m_, g_, bracket(m_, g_, bracket(m_, g_, x)));
    return scale(x3, QuadScalar(Rational(fam_.side == Algebra::Gt ? 1 : -1, 6)));
  }

  const WeightModule& m_;
  const LinearFamily& fam_;
  GradedMap g_;
};

json quadric_json(const Quadric& q) {
  json lin = json::array();
  for (const auto& x : q.lin) lin.push_back(to_json(x));
  json quad = json::array();
  for (const auto& row : q.quad) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    quad.push_back(r);
  }
  return {{"where", q.where}, {"constant", to_json(q.c0)}, {"linear", lin}, {"quadratic", quad}};
}

json system_json(const std::vector<Quadric>& eqs, std::size_t limit = 12) {
  json list = json::array();
  for (std::size_t i = 0; i < eqs.size() && i < limit; ++i) list.push_back(quadric_json(eqs[i]));
  return {{"equations", eqs.size()}, {"sample", list}};
}

// roots in the field of a univariate polynomial of degree <= 2; nullopt when a root leaves the field
std::optional<std::vector<QuadScalar>> small_roots(const QPoly& p) {
  if (p.degree() <= 0) return std::vector<QuadScalar>{};
  if (p.degree() == 1) return std::vector<QuadScalar>{-p.coeff(0) / p.coeff(1)};
  if (p.degree() == 2) {
    QuadScalar a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    QuadScalar disc = b * b - QuadScalar(4) * a * c;
    auto r = sqrt_in_field(disc);
    if (!r) return std::nullopt;
    QuadScalar x1 = (-b + *r) / (QuadScalar(2) * a);
    QuadScalar x2 = (-b - *r) / (QuadScalar(2) * a);
    if (x1 == x2) return std::vector<QuadScalar>{x1};
    return std::vector<QuadScalar>{x1, x2};
  }
  return std::nullopt;
}

// restrict a quadric in (t1, t2) to t = base + dir * s, as a polynomial in s
QPoly restrict_line(const Quadric& q, const std::vector<QuadScalar>& base, const std::vector<QuadScalar>& dir) {
  std::size_t p = base.size();
  std::vector<QPoly> t(p);
  for (std::size_t a = 0; a < p; ++a) t[a] = QPoly(std::vector<QuadScalar>{base[a], dir[a]});
  QPoly r(q.c0);
  for (std::size_t a = 0; a < p; ++a) {
    r += QPoly(q.lin[a]) * t[a];
    for (std::size_t b = a; b < p; ++b) r += QPoly(q.quad[a][b]) * t[a] * t[b];
  }
  return r;
}

struct Solved {
  PinResult::Status status = PinResult::Status::Undecided;
  std::vector<std::vector<QuadScalar>> points;
  std::string reason;
  json witness;
};

Solved solve_univariate(const std::vector<Quadric>& eqs, const std::vector<QuadScalar>& base,
                        const std::vector<QuadScalar>& dir) {
  Solved out;
  QPoly g;
  json polys = json::array();
  for (const auto& e : eqs) {
    QPoly p = restrict_line(e, base, dir);
    if (polys.size() < 6 && !p.is_zero()) polys.push_back(p.str("t"));
    g = poly_gcd(g, p);
  }
  if (g.is_zero()) {
    out.reason = "every equation vanishes along the family; solution set is positive dimensional";
    return out;
  }
  if (g.degree() == 0) {
    out.status = PinResult::Status::Infeasible;
    out.witness = {{"polynomials", polys}, {"gcd", "1"}};
    return out;
  }
  auto roots = small_roots(g);
  if (!roots) {
    out.reason = "common factor " + g.str("t") + " has roots outside the working field";
    return out;
  }
  for (const auto& s : *roots) {
    std::vector<QuadScalar> t(base.size());
    for (std::size_t a = 0; a < t.size(); ++a) t[a] = base[a] + dir[a] * s;
    out.points.push_back(t);
  }
  out.status = PinResult::Status::Solutions;
  return out;
}

Solved solve_two(const std::vector<Quadric>& eqs) {
  // monomials: t1^2, t1 t2, t2^2, t1, t2, 1
  std::size_t n = eqs.size();
  FieldMatrix mat(n, 6);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = eqs[i];
    mat(i, 0) = e.quad[0][0];
    mat(i, 1) = e.quad[0][1];
    mat(i, 2) = e.quad[1][1];
    mat(i, 3) = e.lin[0];
    mat(i, 4) = e.lin[1];
    mat(i, 5) = e.c0;
  }
  auto pivots = row_reduce(mat, 6);
  Solved out;
  std::optional<std::array<QuadScalar, 3>> linear;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == 5) {
      out.status = PinResult::Status::Infeasible;
      out.witness = {{"reduced_equation", "1 = 0"}, {"note", "echelon form of the quadratic system"}};
      return out;
    }
    if (pivots[r] >= 3 && !linear) linear = std::array<QuadScalar, 3>{mat(r, 3), mat(r, 4), mat(r, 5)};
  }
  if (linear) {
    auto [a, b, c] = *linear;
    // a t1 + b t2 + c = 0 parametrised as base + s dir
    std::vector<QuadScalar> base(2), dir(2);
    if (!b.is_zero()) {
      base = {QuadScalar(), -c / b};
      dir = {QuadScalar(1), -a / b};
    } else {
      base = {-c / a, QuadScalar()};
      dir = {QuadScalar(), QuadScalar(1)};
    }
    return solve_univariate(eqs, base, dir);
  }
  // pure quadrics: resultant in t2 of pairs, coefficients polynomial in t1
  auto as_t2 = [](const Quadric& q) {
    QPoly c2(q.quad[1][1]);
    QPoly c1(std::vector<QuadScalar>{q.lin[1], q.quad[0][1]});
    QPoly c0(std::vector<QuadScalar>{q.c0, q.lin[0], q.quad[0][0]});
    return std::array<QPoly, 3>{c0, c1, c2};
  };
  QPoly acc;
  for (std::size_t i = 0; i < n && acc.degree() != 0; ++i)
    for (std::size_t j = i + 1; j < n && acc.degree() != 0; ++j) {
      auto p = as_t2(eqs[i]);
      auto q = as_t2(eqs[j]);
      std::vector<std::vector<QPoly>> syl{{p[2], p[1], p[0], QPoly()},
                                          {QPoly(), p[2], p[1], p[0]},
                                          {q[2], q[1], q[0], QPoly()},
                                          {QPoly(), q[2], q[1], q[0]}};
      acc = poly_gcd(acc, small_determinant(syl));
    }
  if (acc.is_zero()) {
    out.reason = "resultants vanish identically";
    return out;
  }
  if (acc.degree() == 0) {
    out.status = PinResult::Status::Infeasible;
    out.witness = {{"resultant_gcd", "1"}};
    return out;
  }
  auto roots = small_roots(acc);
  if (!roots) {
    out.reason = "eliminant " + acc.str("t1") + " not solvable in the working field";
    return out;
  }
  out.status = PinResult::Status::Infeasible;
  for (const auto& r : *roots) {
    Solved sub = solve_univariate(eqs, {r, QuadScalar()}, {QuadScalar(), QuadScalar(1)});
    if (sub.status == PinResult::Status::Undecided) return sub;
    for (auto& pt : sub.points) out.points.push_back(pt);
  }
  if (!out.points.empty()) out.status = PinResult::Status::Solutions;
  else out.witness = {{"eliminant", acc.str("t1")}, {"note", "no root extends to a common solution"}};
  return out;
}

// coordinates of x - particular in the family basis, if any
std::optional<std::vector<QuadScalar>> family_coordinates(const WeightModule& m, const LinearFamily& fam,
                                                          const GradedMap& x) {
  std::vector<std::vector<QuadScalar>> cols;
  std::vector<QuadScalar> rhs;
  std::size_t p = fam.basis.size();
  for (const auto& [k, pb] : fam.particular.blocks) {
    auto xb = block_at(m, x, k);
    if (!xb) return std::nullopt;
    if (xb->rows() != pb.rows() || xb->cols() != pb.cols()) return std::nullopt;
    for (std::size_t r = 0; r < pb.rows(); ++r)
      for (std::size_t c = 0; c < pb.cols(); ++c) {
        std::vector<QuadScalar> row(p);
        for (std::size_t a = 0; a < p; ++a) row[a] = fam.basis[a].blocks.at(k)(r, c);
        cols.push_back(row);
        rhs.push_back((*xb)(r, c) - pb(r, c));
      }
  }
  FieldMatrix a(cols.size(), p);
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < p; ++j) a(i, j) = cols[i][j];
  auto sol = solve_linear(a, rhs);
  if (std::holds_alternative<Inconsistent<QuadScalar>>(sol)) return std::nullopt;
  return std::get<AffineSolutionSet<QuadScalar>>(sol).particular;
}

std::vector<std::pair<std::string, GradedMap>> commutant_candidates(const WeightModule& m, Algebra side) {
  std::vector<std::pair<std::string, GradedMap>> out;
  if (m.kind != ModuleKind::Dense && m.kind != ModuleKind::Generalized) return out;
  auto root = sqrt_in_field(m.param("tau"));
  if (!root || root->is_zero()) return out;
  auto ptr = std::make_shared<WeightModule>(m);
  int idx = side == Algebra::Gt ? 2 : -2;
  for (int branch : {1, -1}) {
    try {
      WittAction a;
      if (m.kind == ModuleKind::Dense) {
        a = closed_form_dense(ptr, side, branch, 2);
      } else {
        GradedMap c = casimir_operator(m);
        FieldMatrix x = nilpotent_sqrt(c.blocks.begin()->second, m.param("tau"), QuadScalar(branch) * *root);
        a = matrix_closed_form(ptr, x, 2, side);
      }
      out.emplace_back(branch > 0 ? "+" : "-", a.op(idx));
    } catch (const Error&) {
      // pole on this branch: no candidate
    }
  }
  return out;
}

}  // namespace

PinResult pin_quadratic(const WeightModule& m, const LinearFamily& family) {
  PinResult out;
  System sys(m, family);
  std::vector<Quadric> eqs = sys.build();
  std::size_t p = family.basis.size();
  out.system = system_json(eqs);
  out.system["parameters"] = p;

  auto accept = [&](const std::vector<QuadScalar>& t, const std::string& name) {
    for (const auto& e : eqs)
      if (!e.eval(t).is_zero()) return false;
    GradedMap x = sys.point(t);
    for (const auto& s : out.solutions)
      if (compare_maps(m, s, x).pass) return true;
    out.solutions.push_back(x);
    out.parameters.push_back(t);
    out.branches.push_back(name);
    return true;
  };

  auto cands = commutant_candidates(m, family.side);
  if (!cands.empty()) {
    out.strategy = "commutant";
    for (const auto& [name, t] : cands) {
      auto coords = family_coordinates(m, family, t);
      if (coords) accept(*coords, name);
    }
    if (!out.solutions.empty()) {
      out.status = PinResult::Status::Solutions;
      return out;
    }
  }

  if (p == 0) {
    out.strategy = "direct";
    if (eqs.empty()) {
      out.status = PinResult::Status::Solutions;
      out.solutions.push_back(family.particular);
      out.parameters.push_back({});
      out.branches.push_back("unique");
    } else {
      out.status = PinResult::Status::Infeasible;
      out.certificate = {"QuadraticPin", {{"residual", quadric_json(eqs.front())}}};
    }
    return out;
  }
  if (p <= 2) {
    out.strategy = "elimination";
    if (eqs.empty()) {
      out.reason = "quadratic condition vanishes on the whole family";
      out.status = PinResult::Status::Undecided;
      return out;
    }
    Solved s = p == 1 ? solve_univariate(eqs, {QuadScalar()}, {QuadScalar(1)}) : solve_two(eqs);
    if (s.status == PinResult::Status::Undecided) {
      out.status = s.status;
      out.reason = s.reason;
      return out;
    }
    if (s.status == PinResult::Status::Infeasible) {
      out.status = s.status;
      out.certificate = {"QuadraticPin", s.witness};
      return out;
    }
    for (std::size_t i = 0; i < s.points.size(); ++i) accept(s.points[i], "#" + std::to_string(i + 1));
    if (out.solutions.empty()) {
      out.status = PinResult::Status::Infeasible;
      out.certificate = {"QuadraticPin", {{"note", "candidate roots fail the full system"}}};
    } else {
      out.status = PinResult::Status::Solutions;
    }
    return out;
  }
  out.strategy = "none";
  out.status = PinResult::Status::Undecided;
  out.reason = std::to_string(p) + " free parameters; no general quadratic solver";
  return out;
}

}  // namespace wittext
