#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slicealg/power_series.hpp"
#include "slicealg/quaternion.hpp"

namespace slicealg {

/// Ordered eigenvalues (lambda_1, ..., lambda_m), m >= 1, of the problem
/// D_{lambda_1} ... D_{lambda_m} f = 0.
class EigenTuple {
 public:
  explicit EigenTuple(std::vector<Quaternion> lambdas, double commute_tol = 1e-12);

  const std::vector<Quaternion>& lambdas() const { return lambdas_; }
  std::size_t size() const { return lambdas_.size(); }
  const Quaternion& operator[](std::size_t i) const { return lambdas_[i]; }
  /// All pairs commute (the operators D_{lambda_i} commute).
  bool commuting() const { return commuting_; }
  /// (lambda_first, ..., lambda_last), zero based inclusive.
  EigenTuple slice(std::size_t first, std::size_t last) const;

 private:
  std::vector<Quaternion> lambdas_;
  bool commuting_ = true;
};

/// Certificate n! |a_n| <= C (n+1)^d |lambda|^n (membership in A_lambda).
struct CoeffBoundCert {
  double C = 1.0;
  unsigned d = 0;
  Quaternion lambda;

  /// Checks the bound on every known coefficient (relative slack 1e-12).
  bool holds_for(const PowerSeries& f) const;
  /// Certificate satisfied by D_lambda f whenever f satisfies *this.
  CoeffBoundCert after_D() const;
  /// Certificate satisfied by E_lambda(f) whenever f satisfies *this.
  CoeffBoundCert after_E() const;
};

/// D_lambda f = df/dx - f lambda; coefficients (n+1) a_{n+1} - a_n lambda.
PowerSeries apply_D(const Quaternion& lambda, const PowerSeries& f);

/// Right inverse of D_lambda on polynomials:
/// b_k = -sum_{n=k}^{d} a_n lambda^{k-n-1} n!/k!.
PowerSeries S_lambda(const Quaternion& lambda, const PowerSeries& p);

/// E_lambda(h) = sum_{n>=1} x^n/n! sum_{k<n} k! a_k lambda^{n-k-1}, up to x^N.
///
/// The unique solution of D_lambda f = h vanishing at 0. Polynomial input or
/// lambda = 0 needs no certificate; truncated input with lambda != 0 must come
/// with one, which is checked on the known coefficients.
PowerSeries E_lambda_op(const Quaternion& lambda, const PowerSeries& h, std::size_t N,
                        const std::optional<CoeffBoundCert>& cert = std::nullopt);

/// Generalized exponential E_Lambda via e_{n+1} = (e_n lambda_m + e_n(Lambda')) / (n+1).
PowerSeries gen_exp(const EigenTuple& lambdas, std::size_t N = kDefaultTruncation);

/// g^{mu,lambda} = E_{(mu, lambda)}, the solution of D_lambda g = exp_mu with g(0) = 0.
PowerSeries g_mu_lambda(const Quaternion& mu, const Quaternion& lambda, std::size_t N = kDefaultTruncation);

/// f^{mu,lambda} = sum_n f_n^{mu,lambda}, the geometric-series solution of
/// D_lambda f = exp_mu; requires 0 < |mu| < |lambda|. `terms` outer summands
/// are used (0 picks enough for double precision).
PowerSeries f_mu_lambda(const Quaternion& mu, const Quaternion& lambda, std::size_t N = kDefaultTruncation,
                        std::size_t terms = 0);

/// [E_{(l_1..l_m)}, E_{(l_2..l_m)}, ..., E_{(l_m)}].
std::vector<PowerSeries> kernel_basis(const EigenTuple& lambdas, std::size_t N = kDefaultTruncation);

/// sum_i c_i . E_{(l_i..l_m)}: the entire solution with
/// D_{l_{i+1}}..D_{l_m} f(0) = c_i (i < m) and f(0) = c_m.
PowerSeries solve_with_initial(const EigenTuple& lambdas, std::span<const Quaternion> initial,
                               std::size_t N = kDefaultTruncation);

/// CLI problem record {"lambdas": [...], "initial": [...], "degree": N}.
struct EigenProblem {
  std::vector<Quaternion> lambdas;
  std::vector<Quaternion> initial;
  std::size_t degree = kDefaultTruncation;
};

EigenProblem eigen_problem_from_json(const std::string& text);

}  // namespace slicealg
