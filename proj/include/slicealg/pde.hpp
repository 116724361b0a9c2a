#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicealg/monogenic.hpp"
#include "slicealg/slice_expr.hpp"

namespace slicealg {

enum class PdeKind { helmholtz, klein_gordon, yukawa, quadratic };

PdeKind parse_pde_kind(std::string_view name);
std::string to_string(PdeKind kind);

/// Box in (x1, x2, x3) sampled at a fixed x0, with per-axis point counts.
struct GridSpec {
  std::array<double, 3> lo{-1.0, -1.0, -1.0};
  std::array<double, 3> hi{1.0, 1.0, 1.0};
  std::array<int, 3> counts{21, 21, 21};
  double x0 = 0.0;
  /// Points closer than this to (x0, 0, 0) are skipped, together with any
  /// point whose difference stencil would reach inside.
  double exclusion_radius = 0.0;

  /// Throws GridTooSmall unless every count is at least 3 and the box is non-empty.
  void validate() const;
  /// Grid points in x3-fastest order.
  std::vector<Quaternion> points() const;
};

/// Parses "lo:hi:n" (cube) or "lo1:hi1:n1,lo2:hi2:n2,lo3:hi3:n3".
GridSpec parse_grid(std::string_view text);

/// A constructed solution; `singular_on_real_axis` marks product-domain data.
struct PdeSolution {
  Field value;
  bool singular_on_real_axis = false;
};

/// Residual r(x) = Delta_3 f(x) + f(x) shift - rhs(x).
struct ResidualOperator {
  Quaternion shift;
  Field rhs;
};

/// f = Delta_4(h1 . exp_lambda) + Delta_4(h2 . exp_{-lambda}); Delta_3 f + lambda^2 f = 0.
PdeSolution helmholtz_solution(double lambda, const SliceConstant& h1, const SliceConstant& h2,
                               std::size_t N = kDefaultTruncation);

/// f = sum Delta_4(h . exp_{I lambda}) over (I, h); Delta_3 f - lambda^2 f = 0.
PdeSolution klein_gordon_solution(double lambda, const std::vector<std::pair<Quaternion, SliceConstant>>& terms,
                                  std::size_t N = kDefaultTruncation);

/// Delta_4(c1 . E_{(l1, -l1)} + c2 . exp_{-l1}) in the P basis, a solution of
/// Delta_3 f + f l1^2 = 0.
MonogenicSeries general_quadratic_kernel(const Quaternion& lambda1, const Quaternion& c1, const Quaternion& c2,
                                         std::size_t N = kDefaultTruncation);

/// f = -Delta_4 S_{-I lambda} S_{I lambda}(inv_laplacian(h)); Delta_3 f - lambda^2 f = h.
MonogenicSeries yukawa_solve(double lambda, const Quaternion& unit, const MonogenicSeries& h);

struct PdeProblem {
  PdeKind kind = PdeKind::helmholtz;
  double lambda = 1.0;
  Quaternion lambda1;  ///< quadratic kind only
  Quaternion unit = Quaternion::i();
  SliceConstant h1 = SliceConstant::constant(1.0);
  SliceConstant h2 = SliceConstant::constant(0.0);
  std::vector<std::pair<Quaternion, SliceConstant>> terms;  ///< klein-gordon
  MonogenicSeries rhs;                                      ///< yukawa
  GridSpec grid;
  std::size_t degree = kDefaultTruncation;
};

/// Solution of `problem` and the operator whose residual it should annihilate.
PdeSolution build_solution(const PdeProblem& problem);
ResidualOperator residual_operator(const PdeProblem& problem);

struct PdeSample {
  Quaternion x;
  Quaternion f;
  double residual_norm = 0.0;
};

struct PdeReport {
  std::vector<PdeSample> samples;
  double max_abs_f = 0.0;
  double max_rel_residual = 0.0;
  double mean_rel_residual = 0.0;
  RichardsonCheck richardson;
  /// max |d_CF f| / max |f| over the spot-check points, at the FD step and its half.
  RichardsonCheck monogenic;
};

/// Residual noise floor relative to max |f| below which the FD check is exact.
inline constexpr double kResidualNoiseFloor = 1e-9;

/// Evaluates f and the residual on the grid with a 7-point Delta_3 of step
/// `fd_step`, repeats at fd_step / 2 for the observed order, and spot-checks
/// d_CF f = 0 at up to 64 grid points.
PdeReport verify_pde(const PdeSolution& f, const ResidualOperator& op, const GridSpec& grid, double fd_step = 1e-2);

/// 7-point central-difference Laplacian in (x1, x2, x3).
Quaternion fd_laplacian3(const Field& f, const Quaternion& x, double h);

std::string pde_samples_csv(const PdeReport& report);
/// {"max_rel_residual", "mean_rel_residual", "richardson_order"}; the order is
/// null when both residuals sit below the noise floor.
std::string pde_summary_json(const PdeReport& report);

}  // namespace slicealg
