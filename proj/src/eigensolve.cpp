#include "slicealg/eigensolve.hpp"

#include <cmath>

#include <json.hpp>

#include "slicealg/errors.hpp"

namespace slicealg {

namespace {

// c_0 = 0, c_{n+1} = (c_n lambda + a_n) / (n+1) for n + 1 <= N.
PowerSeries integrate_against(const Quaternion& lambda, const PowerSeries& h, std::size_t N) {
  std::size_t order = N;
  if (h.is_truncated()) order = std::min(N, h.order() + 1);
  std::vector<Quaternion> c(order + 1);
  for (std::size_t n = 0; n < order; ++n) c[n + 1] = (c[n] * lambda + h.coeff(n)) / static_cast<double>(n + 1);
  return PowerSeries::truncated(std::move(c));
}

Quaternion literal_node(const nlohmann::json& node) {
  if (node.is_string()) return parse_quaternion(node.get<std::string>());
  if (node.is_number()) return Quaternion(node.get<double>());
  throw ParseError("expected a quaternion literal");
}

}  // namespace

EigenTuple::EigenTuple(std::vector<Quaternion> lambdas, double commute_tol) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw RangeError("an eigenvalue tuple needs at least one eigenvalue");
  for (std::size_t a = 0; a < lambdas_.size(); ++a)
    for (std::size_t b = a + 1; b < lambdas_.size(); ++b)
      if (!commutes(lambdas_[a], lambdas_[b], commute_tol)) commuting_ = false;
}

EigenTuple EigenTuple::slice(std::size_t first, std::size_t last) const {
  if (first > last || last >= lambdas_.size()) throw RangeError("eigenvalue sub-tuple out of range");
  return EigenTuple(std::vector<Quaternion>(lambdas_.begin() + static_cast<std::ptrdiff_t>(first),
                                            lambdas_.begin() + static_cast<std::ptrdiff_t>(last) + 1));
}

bool CoeffBoundCert::holds_for(const PowerSeries& f) const {
  const double abs_lambda = lambda.norm();
  const double log_c = std::log(C);
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double a = f.coeff(n).norm();
    if (a == 0.0) continue;
    if (abs_lambda == 0.0 && n > 0) return false;
    const double lhs = std::lgamma(static_cast<double>(n) + 1.0) + std::log(a);
    double rhs = log_c + d * std::log(static_cast<double>(n) + 1.0);
    if (n > 0) rhs += static_cast<double>(n) * std::log(abs_lambda);
    if (lhs > rhs + 1e-12 * std::max(1.0, std::abs(rhs))) return false;
  }
  return true;
}

CoeffBoundCert CoeffBoundCert::after_D() const {
  // n!|b_n| <= C (n+2)^d |l|^{n+1} + C (n+1)^d |l|^{n+1} <= C |l| (2^d + 1) (n+1)^d |l|^n
  return {C * lambda.norm() * (std::ldexp(1.0, static_cast<int>(d)) + 1.0), d, lambda};
}

CoeffBoundCert CoeffBoundCert::after_E() const { return {C / lambda.norm(), d + 1, lambda}; }

PowerSeries apply_D(const Quaternion& lambda, const PowerSeries& f) {
  if (f.is_truncated()) {
    if (f.order() == 0) throw RangeError("D_lambda of an order-0 truncated series has no known coefficients");
    std::vector<Quaternion> b(f.order());
    for (std::size_t n = 0; n < b.size(); ++n) b[n] = f.coeff(n + 1) * static_cast<double>(n + 1) - f.coeff(n) * lambda;
    return PowerSeries::truncated(std::move(b));
  }
  std::vector<Quaternion> b(f.size());
  for (std::size_t n = 0; n < b.size(); ++n) b[n] = f.coeff(n + 1) * static_cast<double>(n + 1) - f.coeff(n) * lambda;
  return PowerSeries::polynomial(std::move(b));
}

PowerSeries S_lambda(const Quaternion& lambda, const PowerSeries& p) {
  if (lambda == Quaternion()) throw ZeroEigenvalue("S_lambda needs lambda != 0");
  if (p.is_truncated()) throw RangeError("S_lambda is defined on polynomials only");
  const Quaternion inv = lambda.inverse();
  const std::size_t size = p.size();
  std::vector<Quaternion> b(size);
  // T_k = (a_k + (k+1) T_{k+1}) lambda^{-1}, b_k = -T_k.
  Quaternion t;
  for (std::size_t k = size; k-- > 0;) {
    t = (p.coeff(k) + t * static_cast<double>(k + 1)) * inv;
    b[k] = -t;
  }
  return PowerSeries::polynomial(std::move(b));
}

PowerSeries E_lambda_op(const Quaternion& lambda, const PowerSeries& h, std::size_t N,
                        const std::optional<CoeffBoundCert>& cert) {
  if (h.is_truncated() && lambda != Quaternion()) {
    if (!cert) throw CertificateViolation("truncated right-hand side with lambda != 0 needs a coefficient certificate");
    if (!approx_equal(cert->lambda, lambda, 1e-12)) {
      throw CertificateViolation("certificate was issued for a different lambda");
    }
    if (!cert->holds_for(h)) throw CertificateViolation("coefficient bound fails on the supplied right-hand side");
  } else if (cert && !cert->holds_for(h)) {
    throw CertificateViolation("coefficient bound fails on the supplied right-hand side");
  }
  return integrate_against(lambda, h, N);
}

PowerSeries gen_exp(const EigenTuple& lambdas, std::size_t N) {
  if (N + 1 < lambdas.size()) throw RangeError("gen_exp needs N >= m - 1");
  PowerSeries e = exp_series(lambdas[0], N);
  for (std::size_t l = 1; l < lambdas.size(); ++l) e = integrate_against(lambdas[l], e, N);
  return e;
}

PowerSeries g_mu_lambda(const Quaternion& mu, const Quaternion& lambda, std::size_t N) {
  return gen_exp(EigenTuple({mu, lambda}), N);
}

PowerSeries f_mu_lambda(const Quaternion& mu, const Quaternion& lambda, std::size_t N, std::size_t terms) {
  const double abs_mu = mu.norm();
  const double abs_lambda = lambda.norm();
  if (!(abs_mu > 0.0) || !(abs_mu < abs_lambda)) throw RangeError("f^{mu,lambda} needs 0 < |mu| < |lambda|");
  if (terms == 0) {
    const double r = abs_mu / abs_lambda;
    const double needed = std::log(1e-17 * (1.0 - r)) / std::log(r);
    if (!(needed < 1e6)) throw RangeError("|mu|/|lambda| too close to 1 for a geometric partial sum");
    terms = std::max<std::size_t>(N, static_cast<std::size_t>(std::ceil(needed)) + 1);
  }
  const Quaternion inv = lambda.inverse();
  std::vector<Quaternion> b(N + 1);
  Quaternion mu_k(1.0);
  double k_factorial = 1.0;
  for (std::size_t k = 0; k <= N; ++k) {
    if (k > 0) {
      mu_k = mu_k * mu;
      k_factorial *= static_cast<double>(k);
    }
    // sum_{n=k}^{terms} mu^n lambda^{k-n-1}; term_{n+1} = mu term_n lambda^{-1}
    Quaternion term = mu_k * inv;
    Quaternion sum;
    for (std::size_t n = k; n <= terms; ++n) {
      sum += term;
      term = mu * term * inv;
    }
    b[k] = -sum / k_factorial;
  }
  return PowerSeries::truncated(std::move(b));
}

std::vector<PowerSeries> kernel_basis(const EigenTuple& lambdas, std::size_t N) {
  std::vector<PowerSeries> basis;
  basis.reserve(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) basis.push_back(gen_exp(lambdas.slice(i, lambdas.size() - 1), N));
  return basis;
}

PowerSeries solve_with_initial(const EigenTuple& lambdas, std::span<const Quaternion> initial, std::size_t N) {
  if (initial.size() != lambdas.size()) throw RangeError("need exactly one initial value per eigenvalue");
  const std::vector<PowerSeries> basis = kernel_basis(lambdas, N);
  PowerSeries f = PowerSeries::truncated(std::vector<Quaternion>(N + 1));
  for (std::size_t i = 0; i < basis.size(); ++i) f += basis[i].left_mul(initial[i]);
  return f;
}

EigenProblem eigen_problem_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("lambdas") || !doc["lambdas"].is_array()) {
    throw ParseError("problem needs a \"lambdas\" array");
  }
  EigenProblem p;
  for (const auto& node : doc["lambdas"]) p.lambdas.push_back(literal_node(node));
  if (p.lambdas.empty()) throw ParseError("problem needs at least one eigenvalue");
  if (doc.contains("initial")) {
    if (!doc["initial"].is_array()) throw ParseError("\"initial\" must be an array");
    for (const auto& node : doc["initial"]) p.initial.push_back(literal_node(node));
  } else {
    p.initial.assign(p.lambdas.size(), Quaternion());
    p.initial.front() = Quaternion(1.0);
  }
  if (doc.contains("degree")) {
    if (!doc["degree"].is_number_integer() || doc["degree"].get<long long>() < 0) {
      throw ParseError("\"degree\" must be a non-negative integer");
    }
    p.degree = doc["degree"].get<std::size_t>();
  }
  return p;
}

}  // namespace slicealg
