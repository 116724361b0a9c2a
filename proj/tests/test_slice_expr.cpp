#include <doctest.h>

#include <cmath>
#include <random>

#include "slicealg/errors.hpp"
#include "slicealg/slice_expr.hpp"

using namespace slicealg;

namespace {

std::mt19937_64 rng(21);

Quaternion random_q(double r = 1.0) {
  std::uniform_real_distribution<double> d(-r, r);
  return {d(rng), d(rng), d(rng), d(rng)};
}

Quaternion on_slice(double alpha, double beta, const Quaternion& unit) { return Quaternion(alpha) + unit * beta; }

}  // namespace

TEST_CASE("lift agrees with series evaluation") {
  const PowerSeries f = PowerSeries::polynomial({random_q(), random_q(), random_q(), random_q()});
  const SliceExpr F = lift(f);
  for (int t = 0; t < 30; ++t) {
    const Quaternion x = random_q(1.5);
    CHECK(approx_equal(F(x), eval(f, x), 1e-13));
  }
  CHECK(approx_equal(F(Quaternion(0.7)), eval(f, Quaternion(0.7)), 1e-14));
}

TEST_CASE("mu_I is one on the opposite half slice and zero on its own") {
  const SliceExpr m = mu(Quaternion::i());
  CHECK(approx_equal(m(on_slice(0.3, 2.0, Quaternion::i())), Quaternion(), 1e-15));
  CHECK(approx_equal(m(on_slice(0.3, 2.0, -Quaternion::i())), Quaternion(1.0), 1e-15));
  CHECK(approx_equal(m(on_slice(-1.0, 0.5, Quaternion::j())), Quaternion(0.5, 0, 0, -0.5), 1e-15));
  CHECK(m.domain() == DomainKind::product);
  CHECK_THROWS_AS(m(Quaternion(1.0)), DomainError);
  CHECK_THROWS_AS(mu(Quaternion(2.0)), DomainError);
}

TEST_CASE("slice constants") {
  const Quaternion a1(1, 2, 0, -1), a2(0, 0, 3, 1);
  const SliceConstant g = SliceConstant::two_valued(Quaternion::j(), a1, a2);
  const SliceExpr e = g.expr();
  CHECK(approx_equal(e(on_slice(0.5, 1.0, Quaternion::j())), a1, 1e-15));
  CHECK(approx_equal(e(on_slice(-2.0, 0.1, -Quaternion::j())), a2, 1e-15));
  // equals mu_J a2 + mu_{-J} a1 everywhere
  for (int t = 0; t < 20; ++t) {
    const Quaternion x = random_q();
    const Quaternion want = mu(Quaternion::j())(x) * a2 + mu(-Quaternion::j())(x) * a1;
    CHECK(approx_equal(e(x), want, 1e-14));
  }
  CHECK(SliceConstant::constant(3.0).expr()(Quaternion(1.0)) == Quaternion(3.0));
  CHECK(SliceConstant::constant(0.0).is_zero());
}

TEST_CASE("slice constant from values on two half slices") {
  const Quaternion J = unit_imaginary(Quaternion(0, 1, 1, 0)), K = Quaternion::k();
  const Quaternion a1(2, -1, 0, 3), a2(-1, 0.5, 2, 0);
  const SliceExpr g = slice_constant_from_two_values(J, K, a1, a2);
  CHECK(approx_equal(g(on_slice(0.2, 1.3, J)), a1, 1e-14));
  CHECK(approx_equal(g(on_slice(-0.7, 0.4, K)), a2, 1e-14));
  // slice constant: value depends only on the half slice, not on (alpha, beta)
  const Quaternion L = unit_imaginary(Quaternion(0, -1, 2, 0.5));
  CHECK(approx_equal(g(on_slice(0.1, 0.2, L)), g(on_slice(5.0, 3.0, L)), 1e-14));
  CHECK_THROWS_AS(slice_constant_from_two_values(J, J, a1, a2), DegenerateUnits);
  CHECK(slice_constant_from_two_values(J, K, a1, a1).domain() == DomainKind::slice);
}

TEST_CASE("stem symmetry diagnostic rejects non-slice evaluators") {
  // Stem that depends on the probing unit: f(x) = x_1 is not a slice function.
  const SliceExpr bad([](double, double beta, const Quaternion& unit) { return Stem{Quaternion(unit.x1 * beta), {}}; },
                      DomainKind::slice);
  CHECK_THROWS_AS(bad(Quaternion(0, 0.3, 0.4, 0.0)), StemSymmetryError);
  CHECK_NOTHROW(bad.unchecked()(Quaternion(0, 0.3, 0.4, 0.0)));
}

TEST_CASE("stem products match series products") {
  const PowerSeries f = PowerSeries::polynomial({random_q(), random_q(), random_q()});
  const PowerSeries g = PowerSeries::polynomial({random_q(), random_q(), random_q(), random_q()});
  const SliceExpr fg = slice_product(lift(f), lift(g));
  const PowerSeries want = slice_product(f, g);
  for (int t = 0; t < 20; ++t) {
    const Quaternion x = random_q(1.3);
    CHECK(approx_equal(fg(x), eval(want, x), 1e-13));
    CHECK(approx_equal(pointwise_slice_product(lift(f), lift(g), x), eval(want, x), 1e-13));
  }
  const Quaternion c(0.5, -1, 2, 0);
  const Quaternion x = random_q();
  CHECK(approx_equal(right_mul(lift(f), c)(x), eval(f, x) * c, 1e-14));
}

TEST_CASE("finite-difference slice derivative") {
  const PowerSeries f = PowerSeries::polynomial({random_q(), random_q(), random_q(), random_q(), random_q()});
  const SliceExpr d = slice_derivative_fd(lift(f));
  for (int t = 0; t < 20; ++t) {
    const Quaternion x = random_q();
    CHECK(approx_equal(d(x), eval(slice_derivative(f), x), 1e-7));
  }
  // slice constants have zero derivative
  const SliceExpr dmu = slice_derivative_fd(mu(Quaternion::k()));
  CHECK(dmu(Quaternion(0.3, 0.5, 0.1, 0.2)).norm() < 1e-10);
  CHECK_THROWS_AS(dmu(Quaternion(0.3, 1e-5, 0.0, 0.0)), DomainError);
}

TEST_CASE("D_lambda kills (mu_I a2 + mu_-I a1) . exp_lambda") {
  const Quaternion lambda(0.3, 0.4, -0.2, 0.1);
  const Quaternion a1(1, 0, 2, 0), a2(0, -1, 0, 1);
  const SliceConstant g = SliceConstant::two_valued(Quaternion::i(), a1, a2);
  const SliceExpr f = slice_product(g.expr(), lift(exp_series(lambda, 40)));
  for (int t = 0; t < 10; ++t) {
    Quaternion x = random_q();
    if (x.imag_norm() < 0.2) x += Quaternion(0, 0.3, 0, 0);
    CHECK(apply_D_pointwise(f, lambda, x, 1e-4).norm() < 1e-7);
  }
  const auto [r1, r2] = recover_constants(f, lambda, Quaternion::i());
  CHECK(approx_equal(r1, a1, 1e-12));
  CHECK(approx_equal(r2, a2, 1e-12));
}

TEST_CASE("slice constant JSON") {
  const SliceConstant g = SliceConstant::two_valued(Quaternion::k(), Quaternion(1, 2, 3, 4), Quaternion(-0.5));
  const SliceConstant back = slice_constant_from_json(slice_constant_to_json(g));
  CHECK(back.unit == g.unit);
  CHECK(back.a1 == g.a1);
  CHECK(back.a2 == g.a2);
  CHECK_FALSE(back.degenerate);
  CHECK(slice_constant_from_json("1+i").a1 == Quaternion(1, 1, 0, 0));
  CHECK(slice_constant_from_json("\"2j\"").degenerate);
  CHECK(slice_constant_from_json("2.5").a1 == Quaternion(2.5));
  CHECK_THROWS_AS(slice_constant_from_json("{\"I\": \"i\", \"a1\": \"1\"}"), ParseError);
  CHECK_THROWS_AS(slice_constant_from_json("[1]"), ParseError);
}
