#include "slicealg/pde.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "slicealg/errors.hpp"

namespace slicealg {

namespace {

// Accumulates Delta_4(h . exp_Lambda) terms: true constants go through the P
// basis (valid on the real axis), two-valued constants through the pointwise
// first-order Laplacian formula.
class LaplacianSum {
 public:
  explicit LaplacianSum(std::size_t N) : N_(N) {}

  void add(const SliceConstant& h, const Quaternion& lambda) {
    if (h.is_zero()) return;
    const PowerSeries e = exp_series(lambda, N_ + 2);
    if (h.degenerate) {
      const MonogenicSeries m = fueter_laplacian(e.left_mul(h.a1));
      series_.truncated = true;
      series_.coeffs.resize(std::max(series_.size(), m.size()));
      for (std::size_t k = 0; k < m.size(); ++k) series_.coeffs[k] += m.coeffs[k];
      return;
    }
    const SliceExpr g = slice_product(h.expr(), lift(e)).unchecked();
    pointwise_.push_back({g, right_mul(g, lambda)});
  }

  PdeSolution finish() const {
    PdeSolution s;
    s.singular_on_real_axis = !pointwise_.empty();
    s.value = [series = series_, pointwise = pointwise_](const Quaternion& x) {
      Quaternion v = eval_monogenic(series, x);
      for (const auto& [g, dg] : pointwise) v += laplacian_pointwise(g, x, dg);
      return v;
    };
    return s;
  }

 private:
  std::size_t N_;
  MonogenicSeries series_;
  std::vector<std::pair<SliceExpr, SliceExpr>> pointwise_;
};

void require_nonzero(double lambda) {
  if (lambda == 0.0) throw ZeroEigenvalue("the PDE constructions need lambda != 0");
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad grid count '" + std::string(s) + "'");
  return v;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad grid bound '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t pos; (pos = s.find(sep, start)) != std::string_view::npos; start = pos + 1)
    out.push_back(s.substr(start, pos - start));
  out.push_back(s.substr(start));
  return out;
}

const Quaternion kSpatial[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};

std::string num(double v) { return format_real(v); }

}  // namespace

PdeKind parse_pde_kind(std::string_view name) {
  if (name == "helmholtz") return PdeKind::helmholtz;
  if (name == "klein-gordon" || name == "klein_gordon") return PdeKind::klein_gordon;
  if (name == "yukawa") return PdeKind::yukawa;
  if (name == "quadratic") return PdeKind::quadratic;
  throw ParseError("unknown PDE kind '" + std::string(name) + "'");
}

std::string to_string(PdeKind kind) {
  switch (kind) {
    case PdeKind::helmholtz: return "helmholtz";
    case PdeKind::klein_gordon: return "klein-gordon";
    case PdeKind::yukawa: return "yukawa";
    case PdeKind::quadratic: return "quadratic";
  }
  return "";
}

void GridSpec::validate() const {
  for (int a = 0; a < 3; ++a) {
    if (counts[a] < 3) throw GridTooSmall("every grid axis needs at least 3 points");
    if (!(hi[a] > lo[a])) throw GridTooSmall("grid box must have positive extent on every axis");
  }
}

std::vector<Quaternion> GridSpec::points() const {
  validate();
  std::vector<Quaternion> out;
  out.reserve(static_cast<std::size_t>(counts[0]) * counts[1] * counts[2]);
  auto coord = [&](int a, int n) { return lo[a] + (hi[a] - lo[a]) * n / (counts[a] - 1); };
  for (int a = 0; a < counts[0]; ++a)
    for (int b = 0; b < counts[1]; ++b)
      for (int c = 0; c < counts[2]; ++c) out.push_back({x0, coord(0, a), coord(1, b), coord(2, c)});
  return out;
}

GridSpec parse_grid(std::string_view text) {
  GridSpec g;
  const auto axes = split(text, ',');
  if (axes.size() != 1 && axes.size() != 3) throw ParseError("grid must be lo:hi:n or three comma-separated axes");
  for (int a = 0; a < 3; ++a) {
    const auto parts = split(axes[axes.size() == 1 ? 0 : a], ':');
    if (parts.size() != 3) throw ParseError("grid axis must be lo:hi:n");
    g.lo[a] = parse_double(parts[0]);
    g.hi[a] = parse_double(parts[1]);
    g.counts[a] = parse_int(parts[2]);
  }
  g.validate();
  return g;
}

PdeSolution helmholtz_solution(double lambda, const SliceConstant& h1, const SliceConstant& h2, std::size_t N) {
  require_nonzero(lambda);
  LaplacianSum sum(N);
  sum.add(h1, Quaternion(lambda));
  sum.add(h2, Quaternion(-lambda));
  return sum.finish();
}

PdeSolution klein_gordon_solution(double lambda, const std::vector<std::pair<Quaternion, SliceConstant>>& terms,
                                  std::size_t N) {
  require_nonzero(lambda);
  LaplacianSum sum(N);
  for (const auto& [unit, h] : terms) sum.add(h, unit_imaginary(unit) * lambda);
  return sum.finish();
}

MonogenicSeries general_quadratic_kernel(const Quaternion& lambda1, const Quaternion& c1, const Quaternion& c2,
                                         std::size_t N) {
  const auto basis = kernel_basis(EigenTuple({lambda1, -lambda1}), N + 2);
  return fueter_laplacian(basis[0].left_mul(c1) + basis[1].left_mul(c2));
}

MonogenicSeries yukawa_solve(double lambda, const Quaternion& unit, const MonogenicSeries& h) {
  require_nonzero(lambda);
  if (h.truncated) throw RangeError("yukawa_solve needs a polynomial right-hand side");
  const Quaternion il = unit_imaginary(unit) * lambda;
  const PowerSeries g = S_lambda(-il, S_lambda(il, inv_laplacian(h)));
  MonogenicSeries f = fueter_laplacian(g);
  for (auto& c : f.coeffs) c = -c;
  while (!f.coeffs.empty() && f.coeffs.back() == Quaternion()) f.coeffs.pop_back();
  return f;
}

PdeSolution build_solution(const PdeProblem& p) {
  switch (p.kind) {
    case PdeKind::helmholtz: return helmholtz_solution(p.lambda, p.h1, p.h2, p.degree);
    case PdeKind::klein_gordon: return klein_gordon_solution(p.lambda, p.terms, p.degree);
    case PdeKind::quadratic: {
      const MonogenicSeries m = general_quadratic_kernel(p.lambda1, p.h1.a1, p.h2.a1, p.degree);
      return {[m](const Quaternion& x) { return eval_monogenic(m, x); }, false};
    }
    case PdeKind::yukawa: {
      const MonogenicSeries m = yukawa_solve(p.lambda, p.unit, p.rhs);
      return {[m](const Quaternion& x) { return eval_monogenic(m, x); }, false};
    }
  }
  throw ParseError("unknown PDE kind");
}

ResidualOperator residual_operator(const PdeProblem& p) {
  const double l2 = p.lambda * p.lambda;
  switch (p.kind) {
    case PdeKind::helmholtz: return {Quaternion(l2), nullptr};
    case PdeKind::klein_gordon: return {Quaternion(-l2), nullptr};
    case PdeKind::quadratic: return {p.lambda1 * p.lambda1, nullptr};
    case PdeKind::yukawa: {
      const MonogenicSeries h = p.rhs;
      return {Quaternion(-l2), [h](const Quaternion& x) { return eval_monogenic(h, x); }};
    }
  }
  throw ParseError("unknown PDE kind");
}

Quaternion fd_laplacian3(const Field& f, const Quaternion& x, double h) {
  const Quaternion centre = f(x) * 2.0;
  Quaternion sum;
  for (const auto& e : kSpatial) sum += f(x + e * h) - centre + f(x - e * h);
  return sum / (h * h);
}

PdeReport verify_pde(const PdeSolution& f, const ResidualOperator& op, const GridSpec& grid, double fd_step) {
  grid.validate();
  const Quaternion axis_point(grid.x0);
  // The 4D CRF stencil reaches fd_step away in every direction.
  const double keep_out = grid.exclusion_radius > 0.0 ? grid.exclusion_radius + fd_step : 0.0;
  if (f.singular_on_real_axis && grid.exclusion_radius <= 0.0) {
    throw DomainError("product-domain solutions need an exclusion radius around the real axis");
  }

  PdeReport report;
  for (const Quaternion& x : grid.points()) {
    if (keep_out > 0.0 && (x - axis_point).norm() < keep_out) continue;
    report.samples.push_back({x, f.value(x), 0.0});
  }
  if (report.samples.empty()) throw GridTooSmall("no grid point survives the exclusion ball");
  for (const auto& s : report.samples) report.max_abs_f = std::max(report.max_abs_f, s.f.norm());
  const double scale = report.max_abs_f > 0.0 ? report.max_abs_f : 1.0;

  auto residual = [&](const PdeSample& s, double h) {
    Quaternion r = fd_laplacian3(f.value, s.x, h) + s.f * op.shift;
    if (op.rhs) r -= op.rhs(s.x);
    return r.norm();
  };
  auto max_residual = [&](double h) {
    double m = 0.0;
    for (const auto& s : report.samples) m = std::max(m, residual(s, h));
    return m / scale;
  };

  double total = 0.0;
  for (auto& s : report.samples) {
    s.residual_norm = residual(s, fd_step);
    report.max_rel_residual = std::max(report.max_rel_residual, s.residual_norm / scale);
    total += s.residual_norm;
  }
  report.mean_rel_residual = total / static_cast<double>(report.samples.size()) / scale;
  report.richardson = richardson(max_residual, fd_step, kResidualNoiseFloor);

  const std::size_t stride = std::max<std::size_t>(1, report.samples.size() / 64);
  auto crf_residual = [&](double h) {
    double m = 0.0;
    for (std::size_t n = 0; n < report.samples.size(); n += stride)
      m = std::max(m, fd_crf(f.value, report.samples[n].x, h).dcf.norm());
    return m / scale;
  };
  report.monogenic = richardson(crf_residual, fd_step, kResidualNoiseFloor);
  return report;
}

std::string pde_samples_csv(const PdeReport& report) {
  std::string out = "x0,x1,x2,x3,f_w,f_x1,f_x2,f_x3,residual_norm\n";
  for (const auto& s : report.samples) {
    for (double v : {s.x.w, s.x.x1, s.x.x2, s.x.x3, s.f.w, s.f.x1, s.f.x2, s.f.x3}) out += num(v) + ",";
    out += num(s.residual_norm) + "\n";
  }
  return out;
}

std::string pde_summary_json(const PdeReport& report) {
  const std::string order = report.richardson.exact ? "null" : num(report.richardson.order);
  return "{\n  \"max_rel_residual\": " + num(report.max_rel_residual) + ",\n  \"mean_rel_residual\": " +
         num(report.mean_rel_residual) + ",\n  \"richardson_order\": " + order + "\n}\n";
}

}  // namespace slicealg
