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

#include "wittext/weightmod.hpp"

#include <algorithm>

namespace wittext {

const char* kind_name(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::Dense: return "dense";
    case ModuleKind::Verma: return "verma";
    case ModuleKind::Lowest: return "lowest";
    case ModuleKind::Finite: return "finite";
    case ModuleKind::Generalized: return "generalized";
    case ModuleKind::Counterexample: return "counterexample";
    case ModuleKind::Intermediate: return "intermediate";
    case ModuleKind::Custom: return "custom";
  }
  return "custom";
}

ModuleKind parse_kind(const std::string& name) {
  for (ModuleKind k : {ModuleKind::Dense, ModuleKind::Verma, ModuleKind::Lowest, ModuleKind::Finite,
                       ModuleKind::Generalized, ModuleKind::Counterexample, ModuleKind::Intermediate,
                       ModuleKind::Custom})
    if (name == kind_name(k)) return k;
  throw Error(ErrorKind::ParseError, "unknown module kind " + name);
}

int WeightModule::dim(int k) const {
  if (in_window(k)) return dims.at(k);
  if (k < k_min && closed_lo) return 0;
  if (k > k_max && closed_hi) return 0;
  return -1;
}

QuadScalar WeightModule::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw Error(ErrorKind::ParseError, "module has no parameter " + name);
  return it->second;
}

std::optional<FieldMatrix> block_at(const WeightModule& m, const GradedMap& g, int k) {
  auto it = g.blocks.find(k);
  if (it != g.blocks.end()) return it->second;
  int src = m.dim(k);
  int dst = m.dim(k + g.degree);
  if (src < 0 || dst < 0) return std::nullopt;
  if (src == 0 || dst == 0) return FieldMatrix(dst, src);
  return std::nullopt;
}

namespace {

GradedMap from_module_blocks(const WeightModule& m, const std::map<int, FieldMatrix>& src, int degree) {
  GradedMap g;
  g.degree = degree;
  g.blocks = src;
  (void)m;
  return g;
}

void put_e(WeightModule& m, int k, const FieldMatrix& b) {
  if (m.known(k + 1)) m.e[k] = m.dim(k + 1) == 0 ? FieldMatrix(0, m.dim(k)) : b;
}

void put_f(WeightModule& m, int k, const FieldMatrix& b) {
  if (m.known(k - 1)) m.f[k] = m.dim(k - 1) == 0 ? FieldMatrix(0, m.dim(k)) : b;
}

FieldMatrix scalar1(const QuadScalar& s) { return FieldMatrix(1, 1, {s}); }

void check_window(int k_min, int k_max) {
  if (k_min > k_max) throw Error(ErrorKind::WindowMismatch, "empty window");
}

}  // namespace

GradedMap sigma_e(const WeightModule& m) { return from_module_blocks(m, m.e, 1); }
GradedMap sigma_f(const WeightModule& m) { return from_module_blocks(m, m.f, -1); }

GradedMap sigma_h(const WeightModule& m) {
  GradedMap g;
  g.degree = 0;
  for (int k = m.k_min; k <= m.k_max; ++k)
    g.blocks[k] = FieldMatrix::scalar(m.dims.at(k), m.weight(k));
  return g;
}

GradedMap identity_map(const WeightModule& m) {
  GradedMap g;
  for (int k = m.k_min; k <= m.k_max; ++k) g.blocks[k] = FieldMatrix::identity(m.dims.at(k));
  return g;
}

GradedMap zero_map(const WeightModule& m, int degree) {
  GradedMap g;
  g.degree = degree;
  for (int k = m.k_min; k <= m.k_max; ++k) {
    int dst = m.dim(k + degree);
    if (dst >= 0) g.blocks[k] = FieldMatrix(dst, m.dims.at(k));
  }
  return g;
}

GradedMap compose(const WeightModule& m, const GradedMap& a, const GradedMap& b) {
  GradedMap r;
  r.degree = a.degree + b.degree;
  for (int k = m.k_min; k <= m.k_max; ++k) {
    auto bb = block_at(m, b, k);
    if (!bb) continue;
    auto ab = block_at(m, a, k + b.degree);
    if (!ab) continue;
    r.blocks[k] = *ab * *bb;
  }
  return r;
}

GradedMap add(const WeightModule& m, const GradedMap& a, const GradedMap& b) {
  if (a.degree != b.degree) throw Error(ErrorKind::ShapeMismatch, "adding maps of different degree");
  GradedMap r;
  r.degree = a.degree;
  for (int k = m.k_min; k <= m.k_max; ++k) {
    auto x = block_at(m, a, k);
    auto y = block_at(m, b, k);
    if (x && y) r.blocks[k] = *x + *y;
  }
  return r;
}

GradedMap subtract(const WeightModule& m, const GradedMap& a, const GradedMap& b) {
  return add(m, a, scale(b, QuadScalar(-1)));
}

GradedMap scale(const GradedMap& a, const QuadScalar& s) {
  GradedMap r;
  r.degree = a.degree;
  for (const auto& [k, b] : a.blocks) r.blocks[k] = b * s;
  return r;
}

GradedMap bracket(const WeightModule& m, const GradedMap& a, const GradedMap& b) {
  return subtract(m, compose(m, a, b), compose(m, b, a));
}

void Report::merge(const Report& other) {
  pass = pass && other.pass;
  checked += other.checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

json Report::to_json(std::size_t max_failures) const {
  json j{{"status", pass ? "pass" : "fail"}, {"checked", checked}, {"failure_count", failures.size()}};
  json fl = json::array();
  for (std::size_t i = 0; i < failures.size() && i < max_failures; ++i) {
    const auto& f = failures[i];
    fl.push_back(json{{"where", f.where}, {"what", f.what}, {"residual", wittext::to_json(f.residual)}});
  }
  j["residuals"] = fl;
  if (!extra.empty()) j["details"] = extra;
  return j;
}

Report compare_maps(const WeightModule& m, const GradedMap& a, const GradedMap& b, const std::vector<int>& tag,
                    const std::string& what) {
  Report r;
  for (int k = m.k_min; k <= m.k_max; ++k) {
    auto x = block_at(m, a, k);
    auto y = block_at(m, b, k);
    if (!x || !y) continue;
    ++r.checked;
    if (*x != *y) {
      r.pass = false;
      std::vector<int> where = tag;
      where.push_back(k);
      r.failures.push_back({where, *x - *y, what});
    }
  }
  return r;
}

WeightModule make_dense(const QuadScalar& mu0, const QuadScalar& tau, int k_min, int k_max) {
  check_window(k_min, k_max);
  WeightModule m;
  m.kind = ModuleKind::Dense;
  m.params = {{"mu0", mu0}, {"tau", tau}};
  m.anchor = mu0;
  m.k_min = k_min;
  m.k_max = k_max;
  for (int k = k_min; k <= k_max; ++k) m.dims[k] = 1;
  for (int k = k_min; k <= k_max; ++k) {
    QuadScalar mu = m.weight(k);
    QuadScalar s = mu + QuadScalar(1);
    put_e(m, k, scalar1((tau - s * s) * QuadScalar(Rational(1, 4))));
    put_f(m, k, scalar1(QuadScalar(1)));
  }
  return m;
}

WeightModule make_verma(const QuadScalar& lambda, int depth) {
  if (depth < 1) throw Error(ErrorKind::WindowMismatch, "depth must be >= 1");
  WeightModule m;
  m.kind = ModuleKind::Verma;
  m.params = {{"lambda", lambda}};
  m.anchor = lambda;
  m.k_min = -depth;
  m.k_max = 0;
  m.closed_hi = true;
  for (int k = m.k_min; k <= 0; ++k) m.dims[k] = 1;
  for (int k = m.k_min; k <= 0; ++k) {
    long j = -k;
    put_f(m, k, scalar1(QuadScalar(1)));
    put_e(m, k, scalar1(QuadScalar(j) * (lambda - QuadScalar(j) + QuadScalar(1))));
  }
  return m;
}

WeightModule make_lowest(const QuadScalar& lambda, int depth) {
  if (depth < 1) throw Error(ErrorKind::WindowMismatch, "depth must be >= 1");
  WeightModule m;
  m.kind = ModuleKind::Lowest;
  m.params = {{"lambda", lambda}};
  m.anchor = lambda;
  m.k_min = 0;
  m.k_max = depth;
  m.closed_lo = true;
  for (int k = 0; k <= depth; ++k) m.dims[k] = 1;
  for (int k = 0; k <= depth; ++k) {
    put_e(m, k, scalar1(QuadScalar(1)));
    put_f(m, k, scalar1(-QuadScalar(k) * (lambda + QuadScalar(k) - QuadScalar(1))));
  }
  return m;
}

WeightModule make_finite(int n) {
  if (n < 1) throw Error(ErrorKind::WindowMismatch, "dimension must be >= 1");
  WeightModule m;
  m.kind = ModuleKind::Finite;
  m.params = {{"n", QuadScalar(n)}};
  m.anchor = QuadScalar(n - 1);
  m.k_min = -(n - 1);
  m.k_max = 0;
  m.closed_lo = m.closed_hi = true;
  for (int k = m.k_min; k <= 0; ++k) m.dims[k] = 1;
  for (int k = m.k_min; k <= 0; ++k) {
    long i = -k;
    put_f(m, k, scalar1(QuadScalar(1)));
    put_e(m, k, scalar1(QuadScalar(i * (n - i))));
  }
  return m;
}

WeightModule make_generalized_dense(const QuadScalar& mu0, const QuadScalar& tau, const FieldMatrix& n,
                                    int k_min, int k_max) {
  check_window(k_min, k_max);
  if (!n.is_square()) throw Error(ErrorKind::NotStrictlyUpper, "N is " + n.shape());
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!n(i, j).is_zero()) throw Error(ErrorKind::NotStrictlyUpper, "N has entries on or below the diagonal");
  std::size_t l = n.rows();
  WeightModule m;
  m.kind = ModuleKind::Generalized;
  m.params = {{"mu0", mu0}, {"tau", tau}};
  m.nilpotent = n;
  m.anchor = mu0;
  m.k_min = k_min;
  m.k_max = k_max;
  for (int k = k_min; k <= k_max; ++k) m.dims[k] = static_cast<int>(l);
  for (int k = k_min; k <= k_max; ++k) {
    QuadScalar s = m.weight(k) + QuadScalar(1);
    put_e(m, k, FieldMatrix::scalar(l, (tau - s * s) * QuadScalar(Rational(1, 4))) + n);
    put_f(m, k, FieldMatrix::identity(l));
  }
  return m;
}

namespace {

WeightModule counterexample_impl(const QuadScalar& lambda, int k_min, int k_max, bool printed) {
  if (lambda.is_rational() && is_integer(lambda.a()))
    throw Error(ErrorKind::IntegerLambda, "lambda = " + lambda.str());
  if (k_min > -1 || k_max < 1) throw Error(ErrorKind::WindowMismatch, "window must straddle lambda");
  WeightModule m;
  m.kind = printed ? ModuleKind::Custom : ModuleKind::Counterexample;
  m.params = {{"lambda", lambda}};
  m.anchor = lambda;
  m.k_min = k_min;
  m.k_max = k_max;
  for (int k = k_min; k <= k_max; ++k) m.dims[k] = k <= 0 ? 2 : 1;
  QuadScalar q(Rational(1, 4));
  QuadScalar half(Rational(1, 2));
  QuadScalar l1 = lambda + QuadScalar(1);
  FieldMatrix nil(2, 2);
  if (printed) nil(0, 1) = q;
  else nil(1, 0) = q;
  m.nilpotent = nil;
  for (int k = k_min; k <= k_max; ++k) {
    QuadScalar s = m.weight(k) + QuadScalar(1);
    QuadScalar diag = (l1 * l1 - s * s) * q;
    if (k <= -1) {
      put_e(m, k, FieldMatrix::scalar(2, diag) + nil);
      put_f(m, k, FieldMatrix::identity(2));
    } else if (k == 0) {
      put_e(m, k, FieldMatrix(1, 2, {half, QuadScalar(0)}));
      put_f(m, k, FieldMatrix::identity(2));
    } else if (k == 1) {
      put_e(m, k, scalar1(diag));
      put_f(m, k, FieldMatrix(2, 1, {QuadScalar(0), half}));
    } else {
      put_e(m, k, scalar1(diag));
      put_f(m, k, scalar1(QuadScalar(1)));
    }
  }
  return m;
}

}  // namespace

WeightModule make_counterexample(const QuadScalar& lambda, int k_min, int k_max) {
  return counterexample_impl(lambda, k_min, k_max, false);
}

WeightModule make_counterexample_printed(const QuadScalar& lambda, int k_min, int k_max) {
  return counterexample_impl(lambda, k_min, k_max, true);
}

WeightModule chevalley_dual(const WeightModule& m) {
  WeightModule d;
  d.kind = m.kind;
  d.params = m.params;
  d.nilpotent = m.nilpotent;
  d.dual = !m.dual;
  d.anchor = -m.anchor;
  d.k_min = -m.k_max;
  d.k_max = -m.k_min;
  d.closed_lo = m.closed_hi;
  d.closed_hi = m.closed_lo;
  for (const auto& [k, l] : m.dims) d.dims[-k] = l;
  for (const auto& [k, b] : m.e) d.f[-k] = -b;
  for (const auto& [k, b] : m.f) d.e[-k] = -b;
  return d;
}

WeightModule open_view(const WeightModule& m) {
  WeightModule o = m;
  o.closed_lo = o.closed_hi = false;
  return o;
}

GradedMap casimir_operator(const WeightModule& m) {
  GradedMap fe = compose(m, sigma_f(m), sigma_e(m));
  GradedMap c;
  for (const auto& [k, b] : fe.blocks) {
    QuadScalar s = m.weight(k) + QuadScalar(1);
    c.blocks[k] = FieldMatrix::scalar(b.rows(), s * s) + b * QuadScalar(4);
  }
  return c;
}

Report verify_sl2(const WeightModule& m) {
  GradedMap comm = bracket(m, sigma_e(m), sigma_f(m));
  Report r = compare_maps(m, comm, sigma_h(m), {}, "[e,f] - h");
  r.extra["relation"] = "[e,f] = h";
  return r;
}

Report verify_morphism_report(const WeightModule& m, const WeightModule& n, const GradedMap& phi) {
  if (phi.degree != 0) throw Error(ErrorKind::WindowMismatch, "morphism must have degree 0");
  if (m.k_min != n.k_min || m.k_max != n.k_max || m.anchor != n.anchor)
    throw Error(ErrorKind::WindowMismatch, "modules live on different windows");
  Report r;
  for (const auto& [name, em, en] :
       {std::tuple{"e", sigma_e(m), sigma_e(n)}, std::tuple{"f", sigma_f(m), sigma_f(n)}}) {
    for (int k = m.k_min; k <= m.k_max; ++k) {
      auto p0 = block_at(n, phi, k);
      auto am = block_at(m, em, k);
      if (!p0 || !am) continue;
      auto p1 = block_at(n, phi, k + em.degree);
      auto an = block_at(n, en, k);
      if (!p1 || !an) continue;
      ++r.checked;
      FieldMatrix res = *p1 * *am - *an * *p0;
      if (!res.is_zero()) {
        r.pass = false;
        r.failures.push_back({{k}, res, std::string("phi ") + name + " - " + name + " phi"});
      }
    }
  }
  return r;
}

bool verify_morphism(const WeightModule& m, const WeightModule& n, const GradedMap& phi) {
  return verify_morphism_report(m, n, phi).pass;
}

namespace {

json block_map_to_json(const std::map<int, FieldMatrix>& blocks) {
  json j = json::object();
  for (const auto& [k, b] : blocks) j[std::to_string(k)] = to_json(b);
  return j;
}

std::map<int, FieldMatrix> block_map_from_json(const json& j) {
  std::map<int, FieldMatrix> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[std::stoi(it.key())] = matrix_from_json(it.value());
  return out;
}

}  // namespace

json module_to_json(const WeightModule& m) {
  json params = json::object();
  for (const auto& [k, v] : m.params) params[k] = to_json(v);
  json dims = json::object();
  for (const auto& [k, l] : m.dims) dims[std::to_string(k)] = l;
  json j{{"kind", kind_name(m.kind)},
         {"params", params},
         {"anchor", to_json(m.anchor)},
         {"k_min", m.k_min},
         {"k_max", m.k_max},
         {"closed", {{"lo", m.closed_lo}, {"hi", m.closed_hi}}},
         {"dual", m.dual},
         {"dims", dims},
         {"e", block_map_to_json(m.e)},
         {"f", block_map_to_json(m.f)}};
  if (m.nilpotent) j["nilpotent"] = to_json(*m.nilpotent);
  return j;
}

// malformed documents surface as ParseError
template <class F>
auto parse_guard(F&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

static WeightModule module_from_json_unchecked(const json& j) {
  WeightModule m;
  m.kind = parse_kind(j.at("kind").get<std::string>());
  for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
    m.params[it.key()] = quad_from_json(it.value());
  m.anchor = quad_from_json(j.at("anchor"));
  m.k_min = j.at("k_min").get<int>();
  m.k_max = j.at("k_max").get<int>();
  if (j.contains("closed")) {
    m.closed_lo = j["closed"].value("lo", false);
    m.closed_hi = j["closed"].value("hi", false);
  }
  m.dual = j.value("dual", false);
  for (auto it = j.at("dims").begin(); it != j.at("dims").end(); ++it)
    m.dims[std::stoi(it.key())] = it.value().get<int>();
  m.e = block_map_from_json(j.at("e"));
  m.f = block_map_from_json(j.at("f"));
  if (j.contains("nilpotent")) m.nilpotent = matrix_from_json(j["nilpotent"]);
  for (int k = m.k_min; k <= m.k_max; ++k)
    if (!m.dims.count(k)) throw Error(ErrorKind::ParseError, "missing dimension at index " + std::to_string(k));
  return m;
}

WeightModule module_from_json(const json& j) {
  return parse_guard([&] { return module_from_json_unchecked(j); });
}

json graded_to_json(const GradedMap& g) {
  return json{{"degree", g.degree}, {"blocks", block_map_to_json(g.blocks)}};
}

static GradedMap graded_from_json_unchecked(const json& j) {
  GradedMap g;
  g.degree = j.at("degree").get<int>();
  g.blocks = block_map_from_json(j.at("blocks"));
  return g;
}

GradedMap graded_from_json(const json& j) {
  return parse_guard([&] { return graded_from_json_unchecked(j); });
}

const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::Gt: return "gt";
    case Algebra::Lt: return "lt";
    case Algebra::Full: return "full";
    case Algebra::Vir: return "vir";
  }
  return "gt";
}

Algebra parse_algebra(const std::string& name) {
  for (Algebra a : {Algebra::Gt, Algebra::Lt, Algebra::Full, Algebra::Vir})
    if (name == algebra_name(a)) return a;
  throw Error(ErrorKind::ParseError, "unknown algebra " + name);
}

const GradedMap& WittAction::op(int i) const {
  auto it = ops.find(i);
  if (it == ops.end()) throw Error(ErrorKind::DepthExceedsWindow, "no operator for L_" + std::to_string(i));
  return it->second;
}

json action_to_json(const WittAction& a) {
  json ops = json::object();
  for (const auto& [i, g] : a.ops) ops[std::to_string(i)] = graded_to_json(g);
  json j{{"module", module_to_json(*a.module)},
         {"algebra", algebra_name(a.algebra)},
         {"range", {a.lo, a.hi}},
         {"ops", ops},
         {"branch", a.branch}};
  if (a.central) j["central"] = graded_to_json(*a.central);
  return j;
}

static WittAction action_from_json_unchecked(const json& j) {
  WittAction a;
  a.module = std::make_shared<WeightModule>(module_from_json(j.at("module")));
  a.algebra = parse_algebra(j.at("algebra").get<std::string>());
  a.lo = j.at("range").at(0).get<int>();
  a.hi = j.at("range").at(1).get<int>();
  for (auto it = j.at("ops").begin(); it != j.at("ops").end(); ++it)
    a.ops[std::stoi(it.key())] = graded_from_json(it.value());
  if (j.contains("central")) a.central = graded_from_json(j["central"]);
  a.branch = j.value("branch", "n/a");
  return a;
}

WittAction action_from_json(const json& j) {
  return parse_guard([&] { return action_from_json_unchecked(j); });
}

WittAction make_intermediate(const QuadScalar& a, const QuadScalar& b, int k_min, int k_max, int depth,
                             Algebra algebra) {
  check_window(k_min, k_max);
  auto coef = [&](long i, long n) { return a * QuadScalar(i) + b - QuadScalar(n); };
  WeightModule m;
  m.kind = ModuleKind::Intermediate;
  m.params = {{"a", a}, {"b", b}};
  m.anchor = QuadScalar(-2) * b;
  m.k_min = k_min;
  m.k_max = k_max;
  for (int k = k_min; k <= k_max; ++k) m.dims[k] = 1;
  for (int k = k_min; k <= k_max; ++k) {
    put_f(m, k, scalar1(coef(-1, k)));
    put_e(m, k, scalar1(-coef(1, k)));
  }
  WittAction act;
  act.module = std::make_shared<WeightModule>(m);
  act.algebra = algebra;
  act.lo = algebra == Algebra::Gt ? -1 : -depth;
  act.hi = algebra == Algebra::Lt ? 1 : depth;
  for (int i = act.lo; i <= act.hi; ++i) {
    GradedMap g;
    g.degree = i;
    for (int k = k_min; k <= k_max; ++k)
      if (m.in_window(k + i)) g.blocks[k] = scalar1(coef(i, k));
    act.ops[i] = g;
  }
  return act;
}

}  // namespace wittext
