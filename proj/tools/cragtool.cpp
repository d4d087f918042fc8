// cragtool: exact topological and geometric invariants of semialgebraic
// sets and complex affine varieties given by rational polynomials.
//
// Subcommands: count-real, count-complex, dim, degree, euler-star,
// euler-closed, compile-gadget, suspend, compactify, example, qe-bounds,
// alpha. Input documents are JSON (see README); output is a single JSON
// document on stdout. Exit codes: 0 success, 2 undecided/uncertified,
// 1 error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "crag/degree.hpp"
#include "crag/gadgets.hpp"
#include "crag/io.hpp"
#include "crag/witness.hpp"

using namespace crag;
using Clock = std::chrono::steady_clock;

namespace {

Json read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    Json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open input file: " + path);
  Json j;
  in >> j;
  return j;
}

Json count_to_json(const CountResult& c) {
  if (c.infinite) return Json("infinite");
  return int_to_json(c.count);
}

int emit(Json out, Clock::time_point t0, bool certified) {
  out["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  std::cout << out.dump(2) << std::endl;
  return certified ? 0 : 2;
}

std::vector<Rational> parse_schedule(const std::string& text) {
  std::vector<Rational> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.emplace_back(Int(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  require(!out.empty(), ErrorCode::ParseError, "empty radius schedule");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of semialgebraic sets and affine varieties"};
  app.require_subcommand(1);

  std::string input_path;
  uint64_t seed = 42;
  std::string witness_mode = "random";
  int max_vars = 4, max_degree = 8;
  int refine_depth = 48;
  std::string radius_schedule_text;

  app.add_option("--input", input_path, "input JSON document (- for stdin)");
  app.add_option("--seed", seed, "deterministic seed (default 42)");
  app.add_option("--witness", witness_mode, "witness mode: random|paper")
      ->check(CLI::IsMember({"random", "paper"}));
  app.add_option("--max-vars", max_vars, "variable limit for the exact oracle");
  app.add_option("--max-degree", max_degree, "degree limit for the exact oracle");
  app.add_option("--refine-depth", refine_depth, "certification refinement rounds");
  app.add_option("--radius-schedule", radius_schedule_text,
                 "comma-separated radii for euler-closed");

  auto* cmd_count_real = app.add_subcommand("count-real", "count real solutions");
  auto* cmd_count_complex = app.add_subcommand("count-complex", "count complex solutions");
  auto* cmd_dim = app.add_subcommand("dim", "complex dimension by generic slicing");
  auto* cmd_degree = app.add_subcommand("degree", "geometric degree with certificates");
  auto* cmd_euler_star = app.add_subcommand("euler-star", "modified Euler characteristic");
  auto* cmd_euler_closed = app.add_subcommand("euler-closed", "Euler characteristic, closed sets");
  auto* cmd_gadget = app.add_subcommand("compile-gadget", "count-preserving single equation");
  auto* cmd_suspend = app.add_subcommand("suspend", "suspension polynomial of a compact zero set");
  auto* cmd_compactify = app.add_subcommand("compactify", "one-point compactification polynomial");
  auto* cmd_example = app.add_subcommand("example", "curated example catalog");
  auto* cmd_qe = app.add_subcommand("qe-bounds", "quantifier-elimination parameter bounds");
  auto* cmd_alpha = app.add_subcommand("alpha", "generic-point recursion");

  std::string example_name;
  long example_param = 0;
  cmd_example
      ->add_option("--name", example_name,
                   "sphere|circle_pair|torus|open_ball|point_set|milnor_demo")
      ->required();
  cmd_example->add_option("--param", example_param, "dimension / point count parameter");

  long qk = 1, qn = 1, qw = 1, qm = 1, qdelta = 2, qell = 1;
  cmd_qe->add_option("--k", qk);
  cmd_qe->add_option("--n", qn);
  cmd_qe->add_option("--w", qw);
  cmd_qe->add_option("--m", qm);
  cmd_qe->add_option("--delta", qdelta);
  cmd_qe->add_option("--ell", qell);

  int ak = 1;
  unsigned long aL = 1, aD = 1;
  cmd_alpha->add_option("--k", ak)->required();
  cmd_alpha->add_option("--L", aL)->required();
  cmd_alpha->add_option("--D", aD)->required();

  std::string center_text;
  cmd_compactify->add_option("--center", center_text, "comma-separated rational center");

  CLI11_PARSE(app, argc, argv);
  auto t0 = Clock::now();

  SolveOptions solve;
  solve.max_vars = max_vars;
  solve.max_degree = max_degree;
  solve.refine_rounds = refine_depth;
  solve.seed = seed;

  try {
    Json out;
    out["seed"] = seed;

    if (*cmd_alpha) {
      out["command"] = "alpha";
      auto alpha = alpha_sequence(ak, aL, aD);
      Json arr = Json::array();
      for (const auto& a : alpha) arr.push_back(int_to_json(a));
      out["result"] = arr;
      out["certified"] = true;
      return emit(out, t0, true);
    }
    if (*cmd_qe) {
      out["command"] = "qe-bounds";
      QeBounds b = qe_bounds(qk, qn, qw, qm, qdelta, qell);
      out["result"] = {{"logD", b.log_d}, {"logL", b.log_l}, {"logM", b.log_m}};
      out["certificate"] = {{"constant_factor", b.constant_factor}};
      out["certified"] = true;
      return emit(out, t0, true);
    }
    if (*cmd_example) {
      out["command"] = "example";
      ExampleSpec ex = example(example_name, example_param);
      std::vector<std::string> names;
      for (int i = 0; i < ex.set.n; ++i) names.push_back("x" + std::to_string(i));
      out["result"] = serialize_set(ex.set, names);
      Json expected = Json::object();
      for (const auto& [k, v] : ex.expected) expected[k] = int_to_json(v);
      out["expected"] = expected;
      out["provenance"] = ex.provenance;
      out["certified"] = true;
      return emit(out, t0, true);
    }

    Json doc = read_input(input_path);
    ParsedInput in = parse_input(doc);

    if (*cmd_count_real || *cmd_count_complex) {
      bool real = static_cast<bool>(*cmd_count_real);
      out["command"] = real ? "count-real" : "count-complex";
      require(in.system.has_value(), ErrorCode::ParseError, "count commands need a system");
      PolySystem sys = *in.system;
      sys.field = real ? Field::Real : Field::Complex;
      CountResult c = count_points(sys, solve);
      out["result"] = count_to_json(c);
      if (c.infinite) {
        out["certified"] = false;
        out["reason"] = "eliminant-based zero-dimensionality test failed";
        return emit(out, t0, false);
      }
      out["certified"] = true;
      out["certificate"] = {{"method", real ? "certified real isolation" : "shear eliminant"}};
      return emit(out, t0, true);
    }
    if (*cmd_dim || *cmd_degree) {
      require(in.system.has_value(), ErrorCode::ParseError, "degree commands need a system");
      PolySystem sys = *in.system;
      sys.field = Field::Complex;
      DegreeOptions dopt;
      dopt.solve = solve;
      dopt.solve.max_vars = std::max(solve.max_vars, sys.nvars + 1);
      if (*cmd_dim) {
        out["command"] = "dim";
        int d = dimension(sys, seed, dopt);
        out["result"] = d;
        out["certified"] = true;
        out["certificate"] = {{"votes", 2 * dopt.p + 1}};
        return emit(out, t0, true);
      }
      out["command"] = "degree";
      DegreeResult r = geometric_degree(sys, seed, dopt);
      out["result"] = int_to_json(r.degree);
      out["dim"] = r.dim;
      out["certified"] = r.certified;
      if (!r.certified) out["reason"] = "no certified majority of transversal slices";
      out["certificate"] = {{"witness_mode", witness_mode}, {"votes", 2 * dopt.p + 1}};
      return emit(out, t0, r.certified);
    }
    if (*cmd_euler_star) {
      out["command"] = "euler-star";
      require(in.set.has_value(), ErrorCode::ParseError, "euler-star needs a set");
      EulerOptions eopt;
      eopt.solve = solve;
      eopt.solve.max_vars = 8;
      eopt.solve.max_degree = 64;
      ChiStarResult r = chi_star(*in.set, seed, eopt);
      if (r.emptiness == Emptiness::Empty) {
        out["result"] = "empty";
        out["certified"] = true;
        return emit(out, t0, true);
      }
      out["result"] = int_to_json(r.chi);
      bool certified = r.emptiness != Emptiness::Undecided;
      out["certified"] = certified;
      if (!certified) out["reason"] = "emptiness undecided for a constituent block";
      out["certificate"] = {{"pipeline", "milnor-fibre + certified Morse"}};
      return emit(out, t0, certified);
    }
    if (*cmd_euler_closed) {
      out["command"] = "euler-closed";
      require(in.set.has_value(), ErrorCode::ParseError, "euler-closed needs a set");
      EulerOptions eopt;
      eopt.solve = solve;
      eopt.solve.max_vars = 8;
      eopt.solve.max_degree = 64;
      std::vector<Rational> schedule = radius_schedule_text.empty()
                                           ? default_radius_schedule()
                                           : parse_schedule(radius_schedule_text);
      std::optional<Rational> user_radius;
      if (schedule.size() == 1) user_radius = schedule.front();
      EulerClosedResult r = euler_closed(*in.set, schedule, seed, eopt, user_radius);
      out["result"] = int_to_json(r.chi);
      out["certified"] = !r.heuristic_radius;
      if (r.heuristic_radius) out["reason"] = "radius stabilization heuristic";
      out["certificate"] = {{"radius", r.radius.get_str()}};
      return emit(out, t0, !r.heuristic_radius);
    }
    if (*cmd_gadget) {
      out["command"] = "compile-gadget";
      require(in.set.has_value(), ErrorCode::ParseError, "compile-gadget needs a set");
      GadgetOutput g = compile_union(*in.set);
      out["result"] = {{"F", poly_to_json(g.F)},
                       {"multiplier", int_to_json(g.multiplier)},
                       {"r", g.r},
                       {"total_vars", g.total_vars}};
      out["certified"] = true;
      return emit(out, t0, true);
    }
    if (*cmd_suspend || *cmd_compactify) {
      require(in.system.has_value() && in.system->polys.size() == 1, ErrorCode::ParseError,
              "suspend/compactify need a system with one real polynomial");
      QPoly f = in.system->real_view().front();
      if (*cmd_suspend) {
        out["command"] = "suspend";
        EulerOptions eopt;
        eopt.solve = solve;
        eopt.solve.max_vars = 8;
        eopt.solve.max_degree = 64;
        QPoly s = suspend(f, eopt, seed);
        out["result"] = poly_to_json(s);
      } else {
        out["command"] = "compactify";
        std::vector<Rational> center(static_cast<size_t>(f.nvars()), Rational(0));
        if (!center_text.empty()) {
          auto vals = parse_schedule(center_text);
          require(vals.size() == center.size(), ErrorCode::ParseError,
                  "center length must match the variable count");
          center = vals;
        }
        out["result"] = poly_to_json(one_point_compactify(f, center));
      }
      out["certified"] = true;
      return emit(out, t0, true);
    }
    fail(ErrorCode::ParseError, "no subcommand dispatched");
  } catch (const Error& e) {
    Json out;
    out["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    std::cout << out.dump(2) << std::endl;
    return e.code() == ErrorCode::Undecided ? 2 : 1;
  } catch (const std::exception& e) {
    Json out;
    out["error"] = {{"code", "Internal"}, {"message", e.what()}};
    std::cout << out.dump(2) << std::endl;
    return 1;
  }
}
