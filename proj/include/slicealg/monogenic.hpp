#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "slicealg/eigensolve.hpp"
#include "slicealg/power_series.hpp"
#include "slicealg/slice_expr.hpp"

namespace slicealg {

/// Axially monogenic series sum_n P_n(x) m_n against the P_n basis.
///
/// Shares the exact/truncated convention of PowerSeries: a polynomial has
/// zero coefficients past the stored ones, a truncated series an unknown tail.
struct MonogenicSeries {
  std::vector<Quaternion> coeffs;
  bool truncated = false;

  Quaternion coeff(std::size_t n) const { return n < coeffs.size() ? coeffs[n] : Quaternion(); }
  std::size_t size() const { return coeffs.size(); }

  friend bool operator==(const MonogenicSeries&, const MonogenicSeries&) = default;
};

using Field = std::function<Quaternion(const Quaternion&)>;

/// Stem p_n(z) = sum_{k=1}^{n+1} k z^{k-1} conj(z)^{n-k+1}.
std::complex<double> p_stem(unsigned n, std::complex<double> z);
/// Exact d p_n / d conj(z) = sum_{k=1}^{n} k (n-k+1) z^{k-1} conj(z)^{n-k}.
std::complex<double> p_stem_dzbar(unsigned n, std::complex<double> z);

/// P_n(x) = -Delta_4(x^{n+2}) / 4, axially monogenic and slice preserving.
Quaternion eval_P(unsigned n, const Quaternion& x);

/// Zonal harmonic Z_n(x) = spherical derivative of x^{n+1} = sum_{k=0}^{n} x^k conj(x)^{n-k}.
Quaternion eval_Z(unsigned n, const Quaternion& x);

/// Delta_4 (sum x^n a_n) = sum P_k (-4 a_{k+2}).
MonogenicSeries fueter_laplacian(const PowerSeries& f);

/// Right inverse of Delta_4: P_n m_n -> -x^{n+2} m_n / 4.
PowerSeries inv_laplacian(const MonogenicSeries& m);

/// L_lambda m = conj-CRF(m) - m lambda; coefficients (k+3) m_{k+1} - m_k lambda.
MonogenicSeries apply_L(const Quaternion& lambda, const MonogenicSeries& m);

/// E^Delta_Lambda = Delta_4 E_Lambda with P-coefficients up to index N.
MonogenicSeries delta_exp(const EigenTuple& lambdas, std::size_t N = kDefaultTruncation);

Quaternion eval_monogenic(const MonogenicSeries& m, const Quaternion& x);

/// Delta_4 f(x) = -2 Im(x)/|Im(x)|^2 (f'_s(x) - df/dx(x)) for slice-regular f
/// at non-real x; `dfdx` evaluates the slice derivative of f.
Quaternion laplacian_pointwise(const SliceExpr& f, const Quaternion& x, const SliceExpr& dfdx);

/// Delta_4 f(x) = Im(x)/|Im(x)|^2 (3 df/dx0 + i df/dx1 + j df/dx2 + k df/dx3)
/// for a slice-regular power series, with exact partial derivatives.
Quaternion laplacian_from_partials(const PowerSeries& f, const Quaternion& x);

/// Central-difference estimates of the Cauchy-Riemann-Fueter pair.
struct CrfPair {
  Quaternion dcf;   ///< (d0 + i d1 + j d2 + k d3) f / 2
  Quaternion cdcf;  ///< (d0 - i d1 - j d2 - k d3) f / 2
};

CrfPair fd_crf(const Field& f, const Quaternion& x, double h = 1e-4);

/// Second-order central-difference 4D Laplacian.
Quaternion fd_laplacian4(const Field& f, const Quaternion& x, double h = 1e-3);

/// Residual norms at step h and h/2 and the observed order log2(r(h)/r(h/2)).
///
/// When both residuals sit below `noise_floor` the difference formula is exact
/// up to rounding and `exact` is set instead of estimating an order.
struct RichardsonCheck {
  double residual_h = 0.0;
  double residual_half = 0.0;
  double order = 0.0;
  bool exact = false;

  /// Exact, or observed order at least `min_order`.
  bool certifies(double min_order) const { return exact || order >= min_order; }
};

RichardsonCheck richardson(const std::function<double(double)>& residual_at, double h, double noise_floor);

/// {"basis": "P", "coeffs": [[w, x1, x2, x3], ...]}.
std::string monogenic_to_json(const MonogenicSeries& m);
MonogenicSeries monogenic_from_json(const std::string& text);

}  // namespace slicealg
