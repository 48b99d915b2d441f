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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wittext/acceptance.hpp"
#include "wittext/extend.hpp"
#include "wittext/freelie.hpp"

using namespace wittext;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kInfeasible = 3, kUndecided = 4 };

int default_depth() {
  if (const char* env = std::getenv("WITTEXT_DEPTH")) {
    try {
      int d = std::stoi(env);
      if (d >= 1) return d;
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorKind::BadFlag, std::string("WITTEXT_DEPTH must be a positive integer, got ") + env);
  }
  return 6;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

FieldMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<QuadScalar>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<QuadScalar> r;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) r.push_back(parse_quad(entry));
    rows.push_back(r);
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "empty matrix");
  FieldMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(ErrorKind::ParseError, "ragged matrix " + text);
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

int branch_flag(const std::string& b) {
  if (b == "+") return 1;
  if (b == "-") return -1;
  if (b == "auto") return 0;
  throw Error(ErrorKind::BadFlag, "branch must be +, - or auto");
}

int exit_for(ExtensionOutcome::Status s) {
  switch (s) {
    case ExtensionOutcome::Status::Extended: return kOk;
    case ExtensionOutcome::Status::Infeasible: return kInfeasible;
    case ExtensionOutcome::Status::Undecided: return kUndecided;
  }
  return kUndecided;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BadFlag:
    case ErrorKind::ParseError: return kUsage;
    case ErrorKind::Io: return kIo;
    case ErrorKind::WindowTooSmall: return kUndecided;
    default: return kInfeasible;
  }
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(json report, const Timer& t) {
  report["version"] = kVersion;
  report["timing_seconds"] = t.seconds();
  std::cout << report.dump(2) << std::endl;
}

struct ModuleFlags {
  std::string kind, anchor = "1/2", tau = "9", lambda = "1/2", a = "1", b = "1/4", nilpotent, out;
  int n = 4, kmin = -12, kmax = 11, depth = 0;
};

WeightModule build_module(const ModuleFlags& f, int depth) {
  switch (parse_kind(f.kind)) {
    case ModuleKind::Dense: return make_dense(parse_quad(f.anchor), parse_quad(f.tau), f.kmin, f.kmax);
    case ModuleKind::Verma: return make_verma(parse_quad(f.lambda), depth);
    case ModuleKind::Lowest: return make_lowest(parse_quad(f.lambda), depth);
    case ModuleKind::Finite: return make_finite(f.n);
    case ModuleKind::Generalized:
      if (f.nilpotent.empty()) throw Error(ErrorKind::BadFlag, "generalized modules need --nilpotent");
      return make_generalized_dense(parse_quad(f.anchor), parse_quad(f.tau), parse_matrix(f.nilpotent), f.kmin,
                                    f.kmax);
    case ModuleKind::Counterexample: return make_counterexample(parse_quad(f.lambda), f.kmin, f.kmax);
    case ModuleKind::Intermediate:
      return *make_intermediate(parse_quad(f.a), parse_quad(f.b), f.kmin, f.kmax, depth).module;
    case ModuleKind::Custom: break;
  }
  throw Error(ErrorKind::BadFlag, "custom modules are read from JSON, not built");
}

json module_summary(const WeightModule& m) {
  json dims = json::array();
  for (const auto& [k, l] : m.dims) dims.push_back(l);
  return {{"kind", kind_name(m.kind)},
          {"k_range", {m.k_min, m.k_max}},
          {"weights", {m.weight(m.k_min).str(), m.weight(m.k_max).str()}},
          {"closed", {{"lo", m.closed_lo}, {"hi", m.closed_hi}}},
          {"dims", dims},
          {"sl2", verify_sl2(m).pass ? "pass" : "fail"}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact extension of sl(2) weight modules to Witt and Virasoro actions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ModuleFlags mf;
  auto* mod = app.add_subcommand("module", "build a weight module and write its JSON");
  mod->add_option("--kind", mf.kind, "dense|verma|lowest|finite|generalized|counterexample|intermediate")->required();
  mod->add_option("--anchor", mf.anchor, "weight at index 0 (dense, generalized)");
  mod->add_option("--tau", mf.tau, "Casimir value (dense, generalized)");
  mod->add_option("--lambda", mf.lambda, "highest/lowest weight or counterexample parameter");
  mod->add_option("--n", mf.n, "dimension of the finite module");
  mod->add_option("--a", mf.a, "intermediate series a");
  mod->add_option("--b", mf.b, "intermediate series b");
  mod->add_option("--nilpotent", mf.nilpotent, "strictly upper N, rows split by ';', entries by ','");
  mod->add_option("--kmin", mf.kmin, "lowest index of the window");
  mod->add_option("--kmax", mf.kmax, "highest index of the window");
  mod->add_option("--depth", mf.depth, "depth of Verma/lowest modules");
  mod->add_option("-o,--output", mf.out, "output path (stdout if omitted)");

  std::string module_path, side = "gt", branch = "auto", method = "closed", out_path;
  int depth = 0;
  bool with_actions = false;
  auto* ext = app.add_subcommand("extend", "extend a module's sl(2) action");
  ext->add_option("--module", module_path, "module JSON")->required();
  ext->add_option("--side", side, "gt|lt|full|vir")->check(CLI::IsMember({"gt", "lt", "full", "vir"}));
  ext->add_option("--branch", branch, "+|-|auto")->check(CLI::IsMember({"+", "-", "auto"}));
  ext->add_option("--method", method, "closed|generic")->check(CLI::IsMember({"closed", "generic"}));
  ext->add_option("--depth", depth, "operator depth (default WITTEXT_DEPTH or 6)");
  ext->add_option("-o,--output", out_path, "write the first action to this path");
  ext->add_flag("--actions", with_actions, "embed every action in the report");

  std::string action_path;
  bool interior = false;
  auto* ver = app.add_subcommand("verify", "check the bracket relations of an action");
  ver->add_option("--action", action_path, "action JSON")->required();
  ver->add_option("--depth", depth, "depth");
  ver->add_flag("--interior", interior, "ignore closed edges");

  std::string lt_path, gt_path;
  bool vir = false;
  auto* glu = app.add_subcommand("glue", "glue an lt and a gt action");
  glu->add_option("--lt", lt_path, "lt action JSON")->required();
  glu->add_option("--gt", gt_path, "gt action JSON")->required();
  glu->add_option("--depth", depth, "depth");
  glu->add_flag("--vir", vir, "Virasoro gluing with central operator");
  glu->add_option("-o,--output", out_path, "write the glued action");

  auto* fl = app.add_subcommand("freelie", "free Lie algebra relation checks");
  fl->require_subcommand(1);
  int max_degree = 13, degree = 0;
  std::string target;
  std::vector<std::string> gens;
  auto* fdims = fl->add_subcommand("dims", "dim R_n table");
  fdims->add_option("--max", max_degree, "largest degree");
  auto* fmaps = fl->add_subcommand("maps", "e_n and f matrices against the displayed formulas");
  fmaps->add_option("--max", max_degree, "largest degree");
  auto* fmem = fl->add_subcommand("member", "ideal membership with stability flag");
  fmem->add_option("--target", target, "relation, e.g. r2")->required();
  fmem->add_option("--gens", gens, "generators, e.g. r1")->required();
  fmem->add_option("--max", max_degree, "closure window top degree");
  fmem->add_option("--degree", degree, "degree (default: the target's)");

  std::string suite = "all";
  bool timing = true;
  auto* rep = app.add_subcommand("reproduce", "run acceptance criteria");
  rep->add_option("--suite", suite, "dense|verma|lowest|glue|counterexample|freelie|functor|all")
      ->check(CLI::IsMember({"dense", "verma", "lowest", "glue", "counterexample", "freelie", "functor", "all"}));
  rep->add_flag("!--no-timing", timing, "omit timings from the per-criterion records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Timer timer;
  try {
    if (!depth) depth = default_depth();

    if (*mod) {
      WeightModule m = build_module(mf, mf.depth ? mf.depth : default_depth());
      json mj = module_to_json(m);
      if (mf.out.empty()) {
        std::cout << mj.dump(2) << std::endl;
      } else {
        write_json(mf.out, mj);
        emit({{"command", "module"}, {"output", mf.out}, {"summary", module_summary(m)}}, timer);
      }
      return kOk;
    }

    if (*ext) {
      auto m = std::make_shared<WeightModule>(module_from_json(read_json(module_path)));
      Algebra alg = parse_algebra(side);
      int br = branch_flag(branch);
      ExtensionOutcome outcome = method == "closed" ? extend_closed(m, alg, br, depth) : extend_generic(m, alg, depth);
      json report{{"command", "extend"},
                  {"job", {{"module", module_path}, {"side", side}, {"branch", branch}, {"method", method},
                           {"depth", depth}}},
                  {"outcome", outcome.to_json(with_actions)}};
      json central = json::array();
      for (const auto& a : outcome.actions) {
        if (!a.central) continue;
        bool zero = true;
        for (const auto& [k, b] : a.central->blocks) zero = zero && b.is_zero();
        central.push_back({{"branch", a.branch}, {"K_zero", zero}});
      }
      if (!central.empty()) report["central"] = central;
      if (!out_path.empty() && !outcome.actions.empty()) write_json(out_path, action_to_json(outcome.actions.front()));
      emit(report, timer);
      return exit_for(outcome.status);
    }

    if (*ver) {
      WittAction a = action_from_json(read_json(action_path));
      Report r = verify_bracket(a, depth, interior);
      emit({{"command", "verify"}, {"job", {{"action", action_path}, {"depth", depth}}}, {"report", r.to_json()}},
           timer);
      return r.pass ? kOk : kInfeasible;
    }

    if (*glu) {
      WittAction lt = action_from_json(read_json(lt_path));
      WittAction gt = action_from_json(read_json(gt_path));
      GlueResult g = vir ? glue_vir(lt, gt, depth) : glue_witt(lt, gt, depth);
      if (g.ok && !out_path.empty()) write_json(out_path, action_to_json(g.action));
      emit({{"command", "glue"}, {"job", {{"lt", lt_path}, {"gt", gt_path}, {"vir", vir}}}, {"result", g.to_json()}},
           timer);
      return g.ok && g.report.pass ? kOk : kInfeasible;
    }

    if (*fl) {
      using namespace freelie;
      if (*fdims) {
        json table = json::array();
        for (int n = 5; n <= max_degree; ++n) {
          std::size_t d = relation_space(n).dim();
          table.push_back({{"n", n}, {"dim", d}, {"formula", (n - 1) / 2 - 1}});
        }
        emit({{"command", "freelie dims"}, {"table", table}}, timer);
        return kOk;
      }
      if (*fmaps) {
        json table = json::array();
        bool all = true;
        for (int n = 5; n <= max_degree; ++n) {
          auto e = check_e_formula(n);
          auto f = check_f_formula(n);
          all = all && e.matches && f.matches;
          table.push_back({{"n", n}, {"e_matches", e.matches}, {"f_matches", f.matches},
                           {"mismatches", e.mismatches}});
        }
        emit({{"command", "freelie maps"}, {"table", table}}, timer);
        return all ? kOk : kInfeasible;
      }
      LieElement t = parse_relation(target);
      std::vector<LieElement> g;
      for (const auto& s : gens) g.push_back(parse_relation(s));
      int d = degree ? degree : t.degree();
      IdealResult ir = ideal_closure(g, d, max_degree);
      json verdict{{"element", target}, {"ideal", gens}, {"degree", d}, {"max_degree", max_degree},
                   {"member", membership(t, ir.component)}, {"stable", ir.stable},
                   {"component_dim", ir.component.dim()}};
      if (!ir.stable) verdict["suggested_max_degree"] = max_degree + 2;
      emit({{"command", "freelie member"}, {"verdict", verdict}}, timer);
      return ir.stable ? kOk : kUndecided;
    }

    if (*rep) {
      json results = json::array();
      int failed = 0;
      for (int id : suite_criteria(suite)) {
        CriterionResult r = run_criterion(id);
        std::cerr << r.line() << std::endl;
        results.push_back(r.to_json(timing));
        if (!r.pass) ++failed;
      }
      json report{{"command", "reproduce"}, {"suite", suite}, {"criteria", results}, {"failed", failed}};
      if (timing) emit(report, timer);
      else std::cout << report.dump(2) << std::endl;
      return failed ? kInfeasible : kOk;
    }
  } catch (const Error& e) {
    std::cerr << json{{"error", error_name(e.kind())}, {"message", e.what()}}.dump() << std::endl;
    return exit_for(e);
  }
  return kUsage;
}
