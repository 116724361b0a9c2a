// slicealg: generate, evaluate and verify slice-regular and axially monogenic solutions.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "slicealg/errors.hpp"
#include "slicealg/pde.hpp"
#include "slicealg/verify.hpp"

using namespace slicealg;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

std::vector<Quaternion> split_points(const std::string& text, char sep) {
  std::vector<Quaternion> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_quaternion(item));
  }
  return out;
}

// A coefficient file holds a bare power-series array or a P-basis object.
Field load_function(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const MonogenicSeries m = monogenic_from_json(text);
    return [m](const Quaternion& x) { return eval_monogenic(m, x); };
  }
  const PowerSeries f = PowerSeries::polynomial(coefficients_from_json(text));
  return [f](const Quaternion& x) { return eval(f, x); };
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SLICEALG_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw ParseError("SLICEALG_SEED must be a non-negative integer");
    return v;
  }
  return kDefaultSeed;
}

struct GenExpArgs {
  std::string lambdas;
  std::size_t degree = kDefaultTruncation;
  std::string out;
};

struct SolveArgs {
  std::string problem, lambdas, initial, out;
  std::size_t degree = kDefaultTruncation;
};

struct EvalArgs {
  std::string coeffs, points, points_file, out;
};

struct PdeArgs {
  std::string kind = "helmholtz", unit = "i", lambda1, h1 = "1", h2 = "0", rhs, grid = "-1:1:21";
  std::vector<std::string> terms;
  double lambda = 1.0, x0 = 0.0, exclude = 0.0, fd_step = 1e-2;
  std::size_t degree = kDefaultTruncation;
  std::string csv, summary, out;
};

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
};

int cmd_gen_exp(const GenExpArgs& a) {
  const PowerSeries e = gen_exp(EigenTuple(parse_quaternion_list(a.lambdas)), a.degree);
  write_output(a.out, coefficients_to_json(e.coeffs()));
  return 0;
}

int cmd_solve(const SolveArgs& a) {
  EigenProblem p;
  if (!a.problem.empty()) {
    p = eigen_problem_from_json(read_file(a.problem));
  } else {
    if (a.lambdas.empty()) throw ParseError("solve needs --problem or --lambdas");
    p.lambdas = parse_quaternion_list(a.lambdas);
    p.degree = a.degree;
    if (a.initial.empty()) {
      p.initial.assign(p.lambdas.size(), Quaternion());
      p.initial.front() = Quaternion(1.0);
    } else {
      p.initial = parse_quaternion_list(a.initial);
    }
  }
  const PowerSeries f = solve_with_initial(EigenTuple(p.lambdas), p.initial, p.degree);
  write_output(a.out, coefficients_to_json(f.coeffs()));
  return 0;
}

int cmd_eval(const EvalArgs& a) {
  const Field f = load_function(read_file(a.coeffs));
  std::vector<Quaternion> points = split_points(a.points, ';');
  if (!a.points_file.empty()) {
    const auto more = split_points(read_file(a.points_file), '\n');
    points.insert(points.end(), more.begin(), more.end());
  }
  std::string csv = "x_w,x_x1,x_x2,x_x3,f_w,f_x1,f_x2,f_x3\n";
  for (const Quaternion& x : points) {
    const Quaternion v = f(x);
    std::string row;
    for (double c : {x.w, x.x1, x.x2, x.x3, v.w, v.x1, v.x2, v.x3}) row += format_real(c) + ",";
    row.back() = '\n';
    csv += row;
  }
  write_output(a.out, csv);
  return 0;
}

int cmd_pde(const PdeArgs& a) {
  PdeProblem p;
  p.kind = parse_pde_kind(a.kind);
  p.lambda = a.lambda;
  p.unit = unit_imaginary(parse_quaternion(a.unit));
  p.degree = a.degree;
  p.h1 = slice_constant_from_json(a.h1);
  p.h2 = slice_constant_from_json(a.h2);
  if (p.kind == PdeKind::quadratic) {
    if (a.lambda1.empty()) throw ParseError("quadratic kind needs --lambda1");
    p.lambda1 = parse_quaternion(a.lambda1);
    if (!p.h1.degenerate || !p.h2.degenerate) throw ParseError("quadratic kind takes plain constants");
  }
  if (p.kind == PdeKind::klein_gordon) {
    if (a.terms.empty()) p.terms.push_back({p.unit, p.h1});
    for (const auto& t : a.terms) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw ParseError("--term must look like UNIT=CONSTANT");
      p.terms.push_back({parse_quaternion(t.substr(0, eq)), slice_constant_from_json(t.substr(eq + 1))});
    }
  }
  p.grid = parse_grid(a.grid);
  p.grid.x0 = a.x0;
  p.grid.exclusion_radius = a.exclude;

  if (p.kind == PdeKind::yukawa) {
    if (a.rhs.empty()) throw ParseError("yukawa kind needs --rhs");
    p.rhs = monogenic_from_json(read_file(a.rhs));
    write_output(a.out, monogenic_to_json(yukawa_solve(p.lambda, p.unit, p.rhs)));
    if (a.csv.empty() && a.summary.empty()) return 0;
  }

  const PdeReport report = verify_pde(build_solution(p), residual_operator(p), p.grid, a.fd_step);
  if (!a.csv.empty()) write_output(a.csv, pde_samples_csv(report));
  if (!a.summary.empty() || p.kind != PdeKind::yukawa) write_output(a.summary, pde_summary_json(report));
  return 0;
}

int cmd_verify(const VerifyArgs& a) {
  const auto results = run_verification(a.suite, a.seed);
  std::cout << "seed " << a.seed << "\n" << format_report(results);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice-regular eigenfunctions and axially monogenic PDE solutions"};
  app.require_subcommand(1);

  GenExpArgs ge;
  auto* gen = app.add_subcommand("gen-exp", "Coefficients of the generalized exponential E_Lambda");
  gen->add_option("--lambdas", ge.lambdas, "Comma-separated eigenvalues, e.g. \"i,j\"")->required();
  gen->add_option("--degree", ge.degree, "Truncation degree")->capture_default_str();
  gen->add_option("--out", ge.out, "Output file (default stdout)");

  SolveArgs so;
  auto* solve = app.add_subcommand("solve", "Entire solution of D_l1 ... D_lm f = 0 with initial data");
  solve->add_option("--problem", so.problem, "Problem JSON {lambdas, initial, degree}");
  solve->add_option("--lambdas", so.lambdas, "Comma-separated eigenvalues");
  solve->add_option("--initial", so.initial, "Comma-separated initial values (default 1,0,...)");
  solve->add_option("--degree", so.degree, "Truncation degree")->capture_default_str();
  solve->add_option("--out", so.out, "Output file (default stdout)");

  EvalArgs ev;
  auto* evaluate = app.add_subcommand("eval", "Evaluate a coefficient file at quaternion points");
  evaluate->add_option("--coeffs", ev.coeffs, "Power-series array or P-basis JSON")->required();
  evaluate->add_option("--points", ev.points, "Semicolon-separated literals");
  evaluate->add_option("--points-file", ev.points_file, "One literal per line");
  evaluate->add_option("--out", ev.out, "Output CSV (default stdout)");

  PdeArgs pd;
  auto* pde = app.add_subcommand("pde", "Helmholtz, Klein-Gordon, Yukawa and quadratic solutions on a grid");
  pde->add_option("--kind", pd.kind, "helmholtz | klein-gordon | yukawa | quadratic")->capture_default_str();
  pde->add_option("--lambda", pd.lambda, "Nonzero real lambda")->capture_default_str();
  pde->add_option("--lambda1", pd.lambda1, "Quaternion lambda_1 (quadratic)");
  pde->add_option("--unit", pd.unit, "Imaginary unit I")->capture_default_str();
  pde->add_option("--h1", pd.h1, "Slice constant: literal or {\"I\",\"a1\",\"a2\"}")->capture_default_str();
  pde->add_option("--h2", pd.h2, "Second slice constant (helmholtz, quadratic)")->capture_default_str();
  pde->add_option("--term", pd.terms, "Klein-Gordon term UNIT=CONSTANT (repeatable)");
  pde->add_option("--rhs", pd.rhs, "Yukawa right-hand side, P-basis JSON");
  pde->add_option("--degree", pd.degree, "Truncation degree")->capture_default_str();
  pde->add_option("--grid", pd.grid, "lo:hi:n or three comma-separated axes")->capture_default_str();
  pde->add_option("--x0", pd.x0, "Fixed real coordinate")->capture_default_str();
  pde->add_option("--exclude", pd.exclude, "Exclusion radius around the real axis")->capture_default_str();
  pde->add_option("--fd-step", pd.fd_step, "Finite-difference step")->capture_default_str();
  pde->add_option("--csv", pd.csv, "Sample CSV output");
  pde->add_option("--summary", pd.summary, "Residual summary JSON (default stdout)");
  pde->add_option("--out", pd.out, "Yukawa solution JSON (default stdout)");

  VerifyArgs ve;
  ve.seed = default_seed();
  auto* verify = app.add_subcommand("verify", "Run the randomized verification suites");
  verify->add_option("--suite", ve.suite, "all | quaternion | series | monogenic | pde")->capture_default_str();
  verify->add_option("--seed", ve.seed, "RNG seed (SLICEALG_SEED overrides the default)")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen_exp(ge);
    if (solve->parsed()) return cmd_solve(so);
    if (evaluate->parsed()) return cmd_eval(ev);
    if (pde->parsed()) return cmd_pde(pd);
    if (verify->parsed()) return cmd_verify(ve);
  } catch (const Error& e) {
    std::cerr << "slicealg: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
