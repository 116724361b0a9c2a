#include "slicealg/slice_expr.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "slicealg/errors.hpp"

namespace slicealg {

namespace {

double odd_sign(double beta) { return std::signbit(beta) ? -1.0 : 1.0; }

}  // namespace

Stem SliceExpr::stem_at(const Quaternion& x) const {
  const SlicePoint p = decompose(x);
  if (p.on_real_axis) {
    if (domain_ == DomainKind::product) throw DomainError("real point outside a product domain");
    return evaluator_(p.alpha, 0.0, Quaternion::i());
  }
  if (check_symmetry_) check_stem_symmetry(p.alpha, p.beta, p.unit);
  return evaluator_(p.alpha, p.beta, p.unit);
}

Quaternion SliceExpr::operator()(const Quaternion& x) const {
  const SlicePoint p = decompose(x, Quaternion::i());
  if (p.on_real_axis && domain_ == DomainKind::product) throw DomainError("real point outside a product domain");
  if (!p.on_real_axis && check_symmetry_) check_stem_symmetry(p.alpha, p.beta, p.unit);
  const Stem s = evaluator_(p.alpha, p.beta, p.unit);
  return s.f1 + p.unit * s.f2;
}

void SliceExpr::check_stem_symmetry(double alpha, double beta, const Quaternion& unit) const {
  const Stem a = evaluator_(alpha, beta, unit);
  const Stem b = evaluator_(alpha, beta, orthogonal_unit(unit));
  const double scale = std::max(a.f1.norm() + a.f2.norm(), 1.0);
  const double diff = (a.f1 - b.f1).norm() + (a.f2 - b.f2).norm();
  if (diff > kSymmetryTolerance * scale) {
    throw StemSymmetryError("stem depends on the probing unit (relative deviation " + format_real(diff / scale) +
                            "); the evaluator is not a slice function");
  }
}

SliceExpr constant_expr(const Quaternion& c) {
  return SliceExpr([c](double, double, const Quaternion&) { return Stem{c, Quaternion()}; }, DomainKind::slice);
}

SliceExpr lift(const PowerSeries& f) {
  return SliceExpr(
      [f](double alpha, double beta, const Quaternion& unit) {
        const Quaternion plus = eval(f, Quaternion(alpha) + unit * beta);
        const Quaternion minus = eval(f, Quaternion(alpha) - unit * beta);
        return Stem{(plus + minus) * 0.5, -(unit * (plus - minus)) * 0.5};
      },
      DomainKind::slice);
}

SliceExpr mu(const Quaternion& unit) {
  const Quaternion I = unit_imaginary(unit);
  return SliceExpr(
      [I](double, double beta, const Quaternion&) {
        return Stem{Quaternion(0.5), I * (0.5 * odd_sign(beta))};
      },
      DomainKind::product);
}

SliceExpr SliceConstant::expr() const {
  if (degenerate) return constant_expr(a1);
  const Quaternion I = unit_imaginary(unit);
  const Quaternion f1 = (a1 + a2) * 0.5;
  const Quaternion f2 = I * (a2 - a1) * 0.5;
  return SliceExpr(
      [f1, f2](double, double beta, const Quaternion&) { return Stem{f1, f2 * odd_sign(beta)}; },
      DomainKind::product);
}

SliceExpr slice_constant_from_two_values(const Quaternion& J, const Quaternion& K, const Quaternion& a1,
                                         const Quaternion& a2) {
  const Quaternion uj = unit_imaginary(J);
  const Quaternion uk = unit_imaginary(K);
  const Quaternion diff = uj - uk;
  if (diff.norm() < 1e-12) throw DegenerateUnits("slice constant needs two distinct imaginary units");
  const Quaternion d = diff.inverse();
  // 2 mu_J J d a2 - 2 mu_K K d a1, with 2 mu_U c having stem (c, U c).
  const Quaternion f1 = uj * d * a2 - uk * d * a1;
  const Quaternion f2 = d * (a1 - a2);
  const DomainKind domain = a1 == a2 ? DomainKind::slice : DomainKind::product;
  if (domain == DomainKind::slice) return constant_expr(a1);
  return SliceExpr([f1, f2](double, double beta, const Quaternion&) { return Stem{f1, f2 * odd_sign(beta)}; },
                   domain);
}

SliceExpr slice_product(const SliceExpr& f, const SliceExpr& g) {
  const DomainKind domain =
      (f.domain() == DomainKind::product || g.domain() == DomainKind::product) ? DomainKind::product
                                                                                 : DomainKind::slice;
  return SliceExpr(
      [f, g](double alpha, double beta, const Quaternion& unit) {
        const Stem a = f.stem(alpha, beta, unit);
        const Stem b = g.stem(alpha, beta, unit);
        return Stem{a.f1 * b.f1 - a.f2 * b.f2, a.f1 * b.f2 + a.f2 * b.f1};
      },
      domain);
}

Quaternion pointwise_slice_product(const SliceExpr& f, const SliceExpr& g, const Quaternion& x) {
  return slice_product(f, g)(x);
}

SliceExpr right_mul(const SliceExpr& f, const Quaternion& c) {
  return SliceExpr(
      [f, c](double alpha, double beta, const Quaternion& unit) {
        const Stem s = f.stem(alpha, beta, unit);
        return Stem{s.f1 * c, s.f2 * c};
      },
      f.domain());
}

SliceExpr slice_derivative_fd(const SliceExpr& f, double h) {
  const DomainKind domain = f.domain();
  return SliceExpr(
      [f, h, domain](double alpha, double beta, const Quaternion& unit) {
        if (domain == DomainKind::product && std::abs(beta) <= h) {
          throw DomainError("difference stencil crosses the real axis of a product domain");
        }
        const Stem ap = f.stem(alpha + h, beta, unit);
        const Stem am = f.stem(alpha - h, beta, unit);
        const Stem bp = f.stem(alpha, beta + h, unit);
        const Stem bm = f.stem(alpha, beta - h, unit);
        const double s = 1.0 / (2.0 * h);
        const Quaternion da1 = (ap.f1 - am.f1) * s, da2 = (ap.f2 - am.f2) * s;
        const Quaternion db1 = (bp.f1 - bm.f1) * s, db2 = (bp.f2 - bm.f2) * s;
        // dF/dz = (d_alpha - i d_beta) F / 2 with F = F1 + i F2.
        return Stem{(da1 + db2) * 0.5, (da2 - db1) * 0.5};
      },
      domain);
}

Quaternion apply_D_pointwise(const SliceExpr& f, const Quaternion& lambda, const Quaternion& x, double h) {
  return slice_derivative_fd(f, h)(x) - f(x) * lambda;
}

std::pair<Quaternion, Quaternion> recover_constants(const SliceExpr& f, const Quaternion& lambda,
                                                    const Quaternion& unit, std::size_t N) {
  const Quaternion I = unit_imaginary(unit);
  const PowerSeries exp_minus = exp_series(-lambda, N);
  const PowerSeries exp_plus = exp_series(lambda, N);
  Quaternion a1, a2;
  const Quaternion f_plus = f(I);
  if (f_plus != Quaternion()) a1 = f_plus * eval(exp_minus, f_plus.inverse() * I * f_plus);
  const Quaternion f_minus = f(-I);
  if (f_minus != Quaternion()) a2 = f_minus * eval(exp_plus, f_minus.inverse() * I * f_minus);
  return {a1, a2};
}

std::string slice_constant_to_json(const SliceConstant& c) {
  if (c.degenerate) return "\"" + format_quaternion(c.a1) + "\"";
  return "{\"I\": \"" + format_quaternion(c.unit) + "\", \"a1\": \"" + format_quaternion(c.a1) +
         "\", \"a2\": \"" + format_quaternion(c.a2) + "\"}";
}

namespace {

SliceConstant slice_constant_from_node(const nlohmann::json& doc) {
  if (doc.is_string()) return SliceConstant::constant(parse_quaternion(doc.get<std::string>()));
  if (doc.is_number()) return SliceConstant::constant(doc.get<double>());
  if (!doc.is_object()) throw ParseError("slice constant must be a literal or {\"I\", \"a1\", \"a2\"} record");
  for (const char* key : {"I", "a1", "a2"}) {
    if (!doc.contains(key) || !doc[key].is_string()) {
      throw ParseError(std::string("slice constant record needs a string field '") + key + "'");
    }
  }
  const Quaternion I = parse_quaternion(doc["I"].get<std::string>());
  return SliceConstant::two_valued(unit_imaginary(I), parse_quaternion(doc["a1"].get<std::string>()),
                                   parse_quaternion(doc["a2"].get<std::string>()));
}

}  // namespace

SliceConstant slice_constant_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    // Bare literals such as 1+i are accepted without quotes.
    return SliceConstant::constant(parse_quaternion(text));
  }
  return slice_constant_from_node(doc);
}

}  // namespace slicealg
