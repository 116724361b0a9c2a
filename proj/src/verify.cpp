#include "slicealg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>

#include "slicealg/errors.hpp"
#include "slicealg/pde.hpp"

namespace slicealg {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  Quaternion quaternion(double r = 1.0) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }
  Quaternion unit() {
    for (;;) {
      const Quaternion q = quaternion().imag();
      if (q.norm() > 0.1) return q / q.norm();
    }
  }
  /// |lambda| in [lo, hi].
  Quaternion scaled(double lo, double hi) {
    Quaternion q;
    while (q.norm() < 0.1) q = quaternion();
    return q * (uniform(lo, hi) / q.norm());
  }
  Quaternion non_real(double r) {
    Quaternion q = quaternion(r);
    while (q.imag_norm() < 0.2) q = quaternion(r);
    return q;
  }
  PowerSeries polynomial(std::size_t degree) {
    std::vector<Quaternion> c(degree + 1);
    for (auto& q : c) q = quaternion();
    return PowerSeries::polynomial(std::move(c));
  }

 private:
  std::mt19937_64 engine_;
};

double rel_err(const Quaternion& got, const Quaternion& want, double scale) {
  return (got - want).norm() / std::max({want.norm(), scale, 1e-300});
}

// max_n |a_n - b_n| / max(|b_n|, floor)
double series_err(const PowerSeries& a, const PowerSeries& b, std::size_t upto, double floor = 1e-300) {
  double m = 0.0;
  for (std::size_t n = 0; n <= upto; ++n) m = std::max(m, rel_err(a.coeff(n), b.coeff(n), floor));
  return m;
}

// |D_l f - want| per coefficient, scaled by the magnitudes (n+1)|a_{n+1}| + |a_n l|
// that the difference cancels.
double d_identity_err(const Quaternion& l, const PowerSeries& f, const PowerSeries& want, std::size_t upto) {
  const PowerSeries d = apply_D(l, f);
  double m = 0.0;
  for (std::size_t n = 0; n <= upto; ++n) {
    const double scale = static_cast<double>(n + 1) * f.coeff(n + 1).norm() + f.coeff(n).norm() * l.norm();
    m = std::max(m, (d.coeff(n) - want.coeff(n)).norm() / std::max(scale, 1e-300));
  }
  return m;
}

class Collector {
 public:
  explicit Collector(std::string suite) : suite_(std::move(suite)) {}
  void at_most(std::string name, double value, double bound) { add(std::move(name), value, bound, false); }
  void at_least(std::string name, double value, double bound) { add(std::move(name), value, bound, true); }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void add(std::string name, double value, double bound, bool ge) {
    const bool pass = ge ? value >= bound : value <= bound;
    results_.push_back({suite_, std::move(name), value, bound, ge, pass});
  }
  std::string suite_;
  std::vector<CheckResult> results_;
};

std::vector<CheckResult> quaternion_suite(Rng& rng) {
  Collector c("quaternion");
  double assoc = 0.0, norm = 0.0, inv = 0.0, round_trip = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = rng.quaternion(), b = rng.quaternion(), d = rng.quaternion();
    assoc = std::max(assoc, rel_err((a * b) * d, a * (b * d), a.norm() * b.norm() * d.norm()));
    norm = std::max(norm, std::abs((a * b).norm() - a.norm() * b.norm()) / (a.norm() * b.norm()));
    inv = std::max(inv, rel_err(a * a.inverse(), Quaternion(1.0), 1.0));
    if (parse_quaternion(format_quaternion(a)) != a) round_trip += 1.0;
  }
  c.at_most("associativity (rel)", assoc, 1e-14);
  c.at_most("norm multiplicative (rel)", norm, 1e-14);
  c.at_most("a a^-1 = 1", inv, 1e-14);
  c.at_most("literal round trip mismatches", round_trip, 0.0);
  return c.take();
}

// sum over |K| = n - m + 1 of lambda_1^k1 ... lambda_m^km, by direct enumeration.
Quaternion multi_index_sum(const std::vector<Quaternion>& l, std::size_t total) {
  Quaternion sum;
  std::vector<std::size_t> k(l.size(), 0);
  auto visit = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == l.size()) {
      k[pos] = left;
      Quaternion p(1.0);
      for (std::size_t q = 0; q < l.size(); ++q) p = p * pow(l[q], static_cast<unsigned>(k[q]));
      sum += p;
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      k[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  visit(visit, 0, total);
  return sum;
}

std::vector<CheckResult> series_suite(Rng& rng) {
  Collector c("series");
  const std::size_t N = 40;

  double dexp = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Quaternion l = rng.scaled(0.2, 2.0);
    const PowerSeries e = exp_series(l, N);
    const PowerSeries d = apply_D(l, e);
    for (std::size_t n = 0; n < d.size(); ++n)
      dexp = std::max(dexp, d.coeff(n).norm() / std::max(e.coeff(n).norm() * l.norm(), 1e-300));
  }
  c.at_most("D_l exp_l = 0", dexp, 1e-13);

  double ds = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Quaternion l = rng.scaled(0.5, 2.0);
    const PowerSeries p = rng.polynomial(12);
    ds = std::max(ds, d_identity_err(l, S_lambda(l, p), p, 12));
  }
  c.at_most("D_l S_l = id (deg 12)", ds, 1e-13);

  double chain = 0.0, repeated = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = 2 + static_cast<std::size_t>(rng.uniform(0.0, 3.999));
    std::vector<Quaternion> l(m);
    for (auto& q : l) q = rng.scaled(0.2, 2.0);
    const PowerSeries full = gen_exp(EigenTuple(l), N);
    const PowerSeries shorter = gen_exp(EigenTuple(std::vector<Quaternion>(l.begin(), l.end() - 1)), N);
    chain = std::max(chain, d_identity_err(l.back(), full, shorter, N - 1));

    const Quaternion lam = l[0];
    const PowerSeries e = exp_series(lam, N);
    const PowerSeries ee = gen_exp(EigenTuple(std::vector<Quaternion>(m, lam)), N);
    double fact = 1.0;
    for (std::size_t q = 2; q < m; ++q) fact *= static_cast<double>(q);
    const PowerSeries want = slice_product(PowerSeries::monomial(m - 1, Quaternion(1.0 / fact)), e).truncate(N);
    repeated = std::max(repeated, series_err(ee, want, N, 1e-16));
  }
  c.at_most("D_{l_m} E_(l_1..l_m) = E_(l_1..l_m-1)", chain, 1e-12);
  c.at_most("E_(l,..,l) = x^{m-1}/(m-1)! exp_l", repeated, 1e-12);

  double brute = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0.0, 2.999));
    std::vector<Quaternion> l(m);
    for (auto& q : l) q = rng.scaled(0.2, 2.0);
    const PowerSeries e = gen_exp(EigenTuple(l), 8);
    double fact = 1.0;
    for (std::size_t n = 0; n <= 8; ++n) {
      if (n > 0) fact *= static_cast<double>(n);
      const Quaternion want = n + 1 >= m ? multi_index_sum(l, n + 1 - m) / fact : Quaternion();
      brute = std::max(brute, rel_err(e.coeff(n), want, 1e-300));
    }
  }
  c.at_most("gen_exp vs multi-index sums", brute, 1e-12);
  return c.take();
}

std::vector<CheckResult> monogenic_suite(Rng& rng) {
  Collector c("monogenic");

  double intertwine = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Quaternion l = rng.scaled(0.2, 2.0);
    const PowerSeries f = rng.polynomial(15);
    const MonogenicSeries lhs = apply_L(l, fueter_laplacian(f));
    const MonogenicSeries rhs = fueter_laplacian(apply_D(l, f));
    for (std::size_t n = 0; n < std::max(lhs.size(), rhs.size()); ++n)
      intertwine = std::max(intertwine, rel_err(lhs.coeff(n), rhs.coeff(n), 1.0));
  }
  c.at_most("L_l Delta = Delta D_l", intertwine, 1e-13);

  double vekua = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::complex<double> z(rng.uniform(-2.0, 2.0), rng.uniform(0.2, 2.0) * (t % 2 ? 1.0 : -1.0));
    for (unsigned n = 0; n <= 8; ++n) {
      const auto p = p_stem(n, z);
      const auto want = (p - std::conj(p)) / (z - std::conj(z));
      vekua = std::max(vekua, std::abs(p_stem_dzbar(n, z) - want) / std::max(std::abs(want), 1.0));
    }
  }
  c.at_most("Vekua equation for p_n", vekua, 1e-10);

  double formulas = 0.0;
  for (int t = 0; t < 100; ++t) {
    const PowerSeries f = rng.polynomial(8);
    const Quaternion x = rng.non_real(1.0);
    const Quaternion a = laplacian_pointwise(lift(f), x, lift(slice_derivative(f)));
    const Quaternion b = laplacian_from_partials(f, x);
    formulas = std::max(formulas, rel_err(a, b, 1.0));
  }
  c.at_most("Laplacian first-order formulas agree", formulas, 1e-9);

  double min_order = 1e300;
  for (unsigned n = 3; n <= 6; ++n) {
    const Field P = [n](const Quaternion& x) { return eval_P(n, x); };
    const Quaternion x = rng.non_real(1.0);
    const RichardsonCheck r = richardson([&](double h) { return fd_crf(P, x, h).dcf.norm(); }, 1e-3, 1e-9);
    min_order = std::min(min_order, r.exact ? 2.0 : r.order);
  }
  c.at_least("d_CF P_n = 0, observed order", min_order, 1.9);
  return c.take();
}

std::vector<CheckResult> pde_suite() {
  Collector c("pde");
  PdeProblem p;
  p.h1 = SliceConstant::constant(1.0);
  PdeReport r = verify_pde(build_solution(p), residual_operator(p), p.grid);
  c.at_most("Helmholtz Delta_4 e^x max rel residual", r.max_rel_residual, 1e-4);
  c.at_least("Helmholtz Richardson order", r.richardson.order, 1.9);

  ResidualOperator wrong = residual_operator(p);
  wrong.shift = wrong.shift * 4.0;
  const PdeReport bad = verify_pde(build_solution(p), wrong, p.grid);
  c.at_least("Helmholtz wrong-lambda control residual", bad.max_rel_residual, 1e-2);

  p.kind = PdeKind::klein_gordon;
  p.terms = {{Quaternion::j(), SliceConstant::constant(1.0)}};
  r = verify_pde(build_solution(p), residual_operator(p), p.grid);
  c.at_most("Klein-Gordon Delta_4 exp_j max rel residual", r.max_rel_residual, 1e-4);
  c.at_least("Klein-Gordon Richardson order", r.richardson.order, 1.9);

  p.kind = PdeKind::yukawa;
  p.rhs.coeffs = {Quaternion(1.0), Quaternion(0, 1, -1, 1), Quaternion(0, -1, -1, -1), Quaternion(1.0)};
  const MonogenicSeries f = yukawa_solve(1.0, Quaternion::i(), p.rhs);
  const std::vector<Quaternion> printed = {Quaternion(-1, -12, -12, -12), Quaternion(20, -1, 1, -1),
                                           Quaternion(0, 1, 1, 1), Quaternion(-1.0)};
  double coeff_err = f.size() == printed.size() ? 0.0 : 1.0;
  for (std::size_t n = 0; n < printed.size(); ++n) coeff_err = std::max(coeff_err, (f.coeff(n) - printed[n]).norm());
  c.at_most("Yukawa worked example coefficients", coeff_err, 1e-12);
  r = verify_pde(build_solution(p), residual_operator(p), p.grid);
  c.at_most("Yukawa max rel residual", r.max_rel_residual, 1e-8);
  return c.take();
}

}  // namespace

std::vector<CheckResult> run_verification(std::string_view suite, std::uint64_t seed) {
  const bool all = suite == "all";
  if (!all && suite != "quaternion" && suite != "series" && suite != "monogenic" && suite != "pde") {
    throw ParseError("unknown verification suite '" + std::string(suite) + "'");
  }
  Rng rng(seed);
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> r) { out.insert(out.end(), r.begin(), r.end()); };
  if (all || suite == "quaternion") append(quaternion_suite(rng));
  if (all || suite == "series") append(series_suite(rng));
  if (all || suite == "monogenic") append(monogenic_suite(rng));
  if (all || suite == "pde") append(pde_suite());
  return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::string out;
  char line[256];
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-4s  %-10s  %-44s  %12.4e  %s %.1e\n", r.pass ? "PASS" : "FAIL",
                  r.suite.c_str(), r.name.c_str(), r.value, r.at_least ? ">=" : "<=", r.threshold);
    out += line;
  }
  return out;
}

}  // namespace slicealg
