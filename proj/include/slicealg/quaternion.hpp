#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slicealg {

/// Real quaternion w + x1 i + x2 j + x3 k.
struct Quaternion {
  double w = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double real) : w(real) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double w_, double x1_, double x2_, double x3_)
      : w(w_), x1(x1_), x2(x2_), x3(x3_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x1, x2, x3}; }
  constexpr Quaternion conj() const { return {w, -x1, -x2, -x3}; }

  /// Squared Euclidean norm |q|^2.
  constexpr double norm2() const { return w * w + x1 * x1 + x2 * x2 + x3 * x3; }
  double norm() const { return std::sqrt(norm2()); }
  double imag_norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

  /// t(q) = q + conj(q), always real.
  constexpr double trace() const { return 2.0 * w; }

  /// Multiplicative inverse; undefined (infinite components) for q = 0.
  constexpr Quaternion inverse() const {
    const double n = norm2();
    return {w / n, -x1 / n, -x2 / n, -x3 / n};
  }

  constexpr bool is_real() const { return x1 == 0.0 && x2 == 0.0 && x3 == 0.0; }

  constexpr Quaternion operator-() const { return {-w, -x1, -x2, -x3}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x1 *= s;
    x2 *= s;
    x3 *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s;
    x1 /= s;
    x2 /= s;
    x3 /= s;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o);

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.w * b.x1 + a.x1 * b.w + a.x2 * b.x3 - a.x3 * b.x2,
          a.w * b.x2 - a.x1 * b.x3 + a.x2 * b.w + a.x3 * b.x1,
          a.w * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.w};
}

inline Quaternion& Quaternion::operator*=(const Quaternion& o) { return *this = *this * o; }

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

inline Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// Integer power q^n for n >= 0 (repeated squaring).
Quaternion pow(Quaternion q, unsigned n);

/// |a - b| <= tol * max(|a|, |b|, 1).
bool approx_equal(const Quaternion& a, const Quaternion& b, double tol);

/// True iff |ab - ba| <= tol (|a||b| + 1).
bool commutes(const Quaternion& a, const Quaternion& b, double tol = 1e-12);

/// x = alpha + J beta with beta >= 0 and J a unit imaginary quaternion.
///
/// Real points (beta == 0) carry `on_real_axis = true`; their `unit` is the
/// caller-supplied fallback or the zero quaternion when none was given.
struct SlicePoint {
  double alpha = 0.0;
  double beta = 0.0;
  Quaternion unit;
  bool on_real_axis = false;

  Quaternion reassemble() const { return Quaternion(alpha) + unit * beta; }
};

SlicePoint decompose(const Quaternion& x, std::optional<Quaternion> real_axis_unit = std::nullopt);

/// Normalises the imaginary part of `u`; throws DomainError when it vanishes.
Quaternion unit_imaginary(const Quaternion& u);

/// Unit imaginary orthogonal to the unit imaginary `u` (deterministic choice).
Quaternion orthogonal_unit(const Quaternion& u);

/// Parses literals such as "1+2i-j+0.5k", "i", "-3e-2k" (any subset of terms).
Quaternion parse_quaternion(std::string_view text);

/// Comma separated list of literals.
std::vector<Quaternion> parse_quaternion_list(std::string_view text);

/// Canonical "w+x1i+x2j+x3k" literal with 17 significant digits per component.
std::string format_quaternion(const Quaternion& q);

/// "%.17g" rendering of a finite real (exact round trip through strtod).
std::string format_real(double v);

}  // namespace slicealg
