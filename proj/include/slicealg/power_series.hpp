#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "slicealg/quaternion.hpp"

namespace slicealg {

/// Default truncation order for entire series evaluated on |x| <= 2.
inline constexpr std::size_t kDefaultTruncation = 40;

/// Slice-regular power series sum_n x^n a_n with right quaternion coefficients.
///
/// A series is either an exact polynomial (all coefficients past the stored
/// ones are zero) or truncated: coefficients are known up to `order()` and the
/// tail is unknown. Arithmetic propagates the order like a truncated power
/// series, so products of polynomials stay exact while anything touching a
/// truncated operand is cut at the smallest known order.
class PowerSeries {
 public:
  static constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

  PowerSeries() = default;

  static PowerSeries polynomial(std::vector<Quaternion> coeffs);
  /// Coefficients a_0..a_N known, tail unknown (N = coeffs.size() - 1).
  static PowerSeries truncated(std::vector<Quaternion> coeffs);
  static PowerSeries constant(const Quaternion& c) { return polynomial({c}); }
  /// x^n c.
  static PowerSeries monomial(std::size_t n, const Quaternion& c);

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_polynomial() const { return !truncated_; }
  bool is_truncated() const { return truncated_; }
  /// Highest index with a known coefficient (kExact for polynomials).
  std::size_t order() const { return truncated_ ? coeffs_.size() - 1 : kExact; }
  /// Coefficient a_n; zero past the stored range.
  Quaternion coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quaternion(); }

  /// Drops trailing zero coefficients of a polynomial.
  PowerSeries& trim();

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

  /// f(x) c : coefficients a_n c.
  PowerSeries right_mul(const Quaternion& c) const;
  /// c . f (slice product with a constant): coefficients c a_n.
  PowerSeries left_mul(const Quaternion& c) const;
  PowerSeries scaled(double s) const;
  /// Keeps coefficients up to index n and marks the result truncated there.
  PowerSeries truncate(std::size_t n) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  PowerSeries(std::vector<Quaternion> c, bool truncated) : coeffs_(std::move(c)), truncated_(truncated) {}

  std::vector<Quaternion> coeffs_;
  bool truncated_ = false;
};

/// Horner evaluation of sum x^n a_n (left powers, right coefficients).
Quaternion eval(const PowerSeries& f, const Quaternion& x);

/// Exact directional derivative d/dt f(x + t e) at t = 0.
Quaternion directional_derivative(const PowerSeries& f, const Quaternion& x, const Quaternion& e);

/// Cauchy product c_n = sum_k a_k b_{n-k}.
PowerSeries slice_product(const PowerSeries& f, const PowerSeries& g);

/// f^c : coefficients conj(a_n).
PowerSeries slice_conjugate(const PowerSeries& f);

/// N(f) = f . f^c.
PowerSeries normal(const PowerSeries& f);

/// Coefficients (n+1) a_{n+1}.
PowerSeries slice_derivative(const PowerSeries& f);

/// (1/2) Im(x)^{-1} (f(x) - f(conj x)); the slice derivative value on the real axis.
Quaternion spherical_derivative_eval(const PowerSeries& f, const Quaternion& x);

/// exp_lambda(x) = sum x^n lambda^n / n!, truncated at N.
PowerSeries exp_series(const Quaternion& lambda, std::size_t N = kDefaultTruncation);

/// Upper bound |xl|^{N+1} e^{|xl|} / (N+1)! on the tail of exp_lambda past index N.
double exp_tail_bound(double abs_x_lambda, std::size_t N);

/// Smallest N whose exp tail bound at |x lambda| = abs_x_lambda is below tol.
std::size_t truncation_for(double abs_x_lambda, double tol);

/// JSON array of [w, x1, x2, x3] quadruples, index = power of x.
std::string coefficients_to_json(std::span<const Quaternion> coeffs);
std::vector<Quaternion> coefficients_from_json(const std::string& text);

}  // namespace slicealg
