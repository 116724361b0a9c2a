#pragma once

#include <functional>
#include <utility>

#include "slicealg/power_series.hpp"
#include "slicealg/quaternion.hpp"

namespace slicealg {

/// Stem components: f(alpha + J beta) = f1 + J f2.
struct Stem {
  Quaternion f1;
  Quaternion f2;
};

enum class DomainKind {
  slice,    ///< meets the real axis
  product,  ///< avoids the real axis (H minus R)
};

/// A slice function known through its stem.
///
/// The evaluator is probed with (alpha, beta, J); for a genuine slice function
/// the result does not depend on J. Evaluators must accept beta of either sign
/// and satisfy F(conj z) = conj F(z), i.e. f2 is odd in beta.
class SliceExpr {
 public:
  using Evaluator = std::function<Stem(double alpha, double beta, const Quaternion& unit)>;

  /// Relative tolerance for the stem-symmetry diagnostic.
  static constexpr double kSymmetryTolerance = 1e-8;

  SliceExpr(Evaluator evaluator, DomainKind domain, bool check_symmetry = true)
      : evaluator_(std::move(evaluator)), domain_(domain), check_symmetry_(check_symmetry) {}

  DomainKind domain() const { return domain_; }

  /// Raw stem probe, no checks.
  Stem stem(double alpha, double beta, const Quaternion& unit) const { return evaluator_(alpha, beta, unit); }

  /// Stem at x (beta >= 0). Throws DomainError at real points of product
  /// domains and StemSymmetryError if probing with a second unit disagrees.
  Stem stem_at(const Quaternion& x) const;

  Quaternion operator()(const Quaternion& x) const;

  /// Throws StemSymmetryError when the stems probed with `unit` and an
  /// orthogonal unit differ by more than kSymmetryTolerance (relative).
  void check_stem_symmetry(double alpha, double beta, const Quaternion& unit) const;

  SliceExpr unchecked() const { return SliceExpr(evaluator_, domain_, false); }

 private:
  Evaluator evaluator_;
  DomainKind domain_;
  bool check_symmetry_;
};

/// Quaternionic constant c on a slice domain.
SliceExpr constant_expr(const Quaternion& c);

/// Slice function induced by a power series (evaluated through f(alpha +- J beta)).
SliceExpr lift(const PowerSeries& f);

/// mu_I(x) = (1 + Im(x)/|Im(x)| I) / 2 on H minus R.
SliceExpr mu(const Quaternion& unit);

/// Slice constant g = mu_I a2 + mu_{-I} a1: g = a1 on C_I^+ and a2 on C_I^-.
/// A degenerate record is the single constant a1 (= a2) on a slice domain.
struct SliceConstant {
  Quaternion unit = Quaternion::i();
  Quaternion a1;
  Quaternion a2;
  bool degenerate = false;

  static SliceConstant constant(const Quaternion& c) { return {Quaternion::i(), c, c, true}; }
  static SliceConstant two_valued(const Quaternion& unit, const Quaternion& a1, const Quaternion& a2) {
    return {unit, a1, a2, false};
  }

  bool is_zero() const { return a1 == Quaternion() && a2 == Quaternion(); }
  SliceExpr expr() const;
};

/// The slice constant equal to a1 on C_J^+ and a2 on C_K^+ (representation formula).
SliceExpr slice_constant_from_two_values(const Quaternion& J, const Quaternion& K, const Quaternion& a1,
                                         const Quaternion& a2);

/// Slice product: the stems multiply as elements of H (x) C.
SliceExpr slice_product(const SliceExpr& f, const SliceExpr& g);

/// (F1 G1 - F2 G2) + J (F1 G2 + F2 G1) at x.
Quaternion pointwise_slice_product(const SliceExpr& f, const SliceExpr& g, const Quaternion& x);

/// f(x) c.
SliceExpr right_mul(const SliceExpr& f, const Quaternion& c);

/// Slice derivative from central differences of the stem in (alpha, beta).
SliceExpr slice_derivative_fd(const SliceExpr& f, double h = 1e-4);

/// D_lambda f = df/dx - f lambda at x, with df/dx from slice_derivative_fd.
Quaternion apply_D_pointwise(const SliceExpr& f, const Quaternion& lambda, const Quaternion& x, double h = 1e-4);

/// Recovers (a1, a2) of f = (mu_I a2 + mu_{-I} a1) . exp_lambda from f(I) and f(-I).
std::pair<Quaternion, Quaternion> recover_constants(const SliceExpr& f, const Quaternion& lambda,
                                                    const Quaternion& unit, std::size_t N = kDefaultTruncation);

/// JSON record {"I": literal, "a1": literal, "a2": literal}; a bare literal
/// string is read as a degenerate (true) constant.
std::string slice_constant_to_json(const SliceConstant& c);
SliceConstant slice_constant_from_json(const std::string& text);

}  // namespace slicealg
