#include <doctest.h>

#include <array>
#include <random>

#include "slicealg/errors.hpp"
#include "slicealg/quaternion.hpp"

using namespace slicealg;

namespace {

// Left-multiplication matrix of a, an independent route to the Hamilton product.
std::array<double, 4> matrix_product(const Quaternion& a, const Quaternion& b) {
  const double m[4][4] = {{a.w, -a.x1, -a.x2, -a.x3},
                          {a.x1, a.w, -a.x3, a.x2},
                          {a.x2, a.x3, a.w, -a.x1},
                          {a.x3, -a.x2, a.x1, a.w}};
  const double v[4] = {b.w, b.x1, b.x2, b.x3};
  std::array<double, 4> r{};
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col) r[row] += m[row][col] * v[col];
  return r;
}

Quaternion random_q(std::mt19937_64& g) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return {d(g), d(g), d(g), d(g)};
}

}  // namespace

TEST_CASE("unit multiplication table") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == Quaternion(-1.0));
  CHECK(j * j == Quaternion(-1.0));
  CHECK(i * j * k == Quaternion(-1.0));
}

TEST_CASE("Hamilton product matches the matrix representation") {
  std::mt19937_64 g(1);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = random_q(g), b = random_q(g);
    const auto m = matrix_product(a, b);
    const Quaternion p = a * b;
    CHECK(p.w == doctest::Approx(m[0]).epsilon(1e-14));
    CHECK(p.x1 == doctest::Approx(m[1]).epsilon(1e-14));
    CHECK(p.x2 == doctest::Approx(m[2]).epsilon(1e-14));
    CHECK(p.x3 == doctest::Approx(m[3]).epsilon(1e-14));
  }
}

TEST_CASE("algebraic properties on random quaternions") {
  std::mt19937_64 g(2);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = random_q(g), b = random_q(g), c = random_q(g);
    CHECK(approx_equal((a * b) * c, a * (b * c), 1e-14));
    CHECK((a * b).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-14));
    CHECK(approx_equal((a * b).conj(), b.conj() * a.conj(), 1e-14));
    CHECK(approx_equal(a * a.inverse(), Quaternion(1.0), 1e-14));
    CHECK(approx_equal(a.inverse() * a, Quaternion(1.0), 1e-14));
    CHECK(a.trace() == doctest::Approx((a + a.conj()).w));
    CHECK(approx_equal(pow(a, 3), a * a * a, 1e-14));
  }
  CHECK(pow(Quaternion::i(), 0) == Quaternion(1.0));
}

TEST_CASE("commutation test") {
  CHECK(commutes(Quaternion(1, 2, 0, 0), Quaternion(3, -1, 0, 0)));
  CHECK_FALSE(commutes(Quaternion::i(), Quaternion::j()));
  CHECK(commutes(Quaternion(5.0), Quaternion(0, 1, 2, 3)));
}

TEST_CASE("slice decomposition") {
  const Quaternion x(1.5, 0.0, 3.0, 4.0);
  const SlicePoint p = decompose(x);
  CHECK(p.alpha == 1.5);
  CHECK(p.beta == doctest::Approx(5.0));
  CHECK_FALSE(p.on_real_axis);
  CHECK(approx_equal(p.unit, Quaternion(0, 0, 0.6, 0.8), 1e-15));
  CHECK(approx_equal(p.unit * p.unit, Quaternion(-1.0), 1e-15));
  CHECK(approx_equal(p.reassemble(), x, 1e-15));

  const SlicePoint r = decompose(Quaternion(-2.0));
  CHECK(r.on_real_axis);
  CHECK(r.beta == 0.0);
  CHECK(decompose(Quaternion(-2.0), Quaternion(0, 0, 2, 0)).unit == Quaternion::j());
}

TEST_CASE("imaginary units") {
  CHECK_THROWS_AS(unit_imaginary(Quaternion(3.0)), DomainError);
  CHECK(unit_imaginary(Quaternion(7, 0, -2, 0)) == -Quaternion::j());
  std::mt19937_64 g(3);
  for (int t = 0; t < 50; ++t) {
    const Quaternion u = unit_imaginary(random_q(g));
    const Quaternion v = orthogonal_unit(u);
    CHECK(v.norm() == doctest::Approx(1.0));
    CHECK(v.w == 0.0);
    CHECK(std::abs(u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3) < 1e-14);
  }
}

TEST_CASE("literal parsing") {
  CHECK(parse_quaternion("1+2i-3j+0.5k") == Quaternion(1, 2, -3, 0.5));
  CHECK(parse_quaternion("i") == Quaternion::i());
  CHECK(parse_quaternion("-k") == -Quaternion::k());
  CHECK(parse_quaternion(" 2 ") == Quaternion(2.0));
  CHECK(parse_quaternion("1e-3i") == Quaternion(0, 1e-3, 0, 0));
  CHECK(parse_quaternion("i+j") == Quaternion(0, 1, 1, 0));
  CHECK(parse_quaternion("2j+1") == Quaternion(1, 0, 2, 0));
  CHECK_THROWS_AS(parse_quaternion(""), ParseError);
  CHECK_THROWS_AS(parse_quaternion("1+x"), ParseError);
  CHECK_THROWS_AS(parse_quaternion("1+-i"), ParseError);
  CHECK_THROWS_AS(parse_quaternion("2ii"), ParseError);

  const auto list = parse_quaternion_list("i, 2j ,1+k");
  REQUIRE(list.size() == 3);
  CHECK(list[2] == Quaternion(1, 0, 0, 1));
  CHECK_THROWS_AS(parse_quaternion_list("i,,j"), ParseError);
}

TEST_CASE("formatting round trips exactly") {
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_quaternion(Quaternion(1, -2, 0, 0.5)) == "1-2i+0j+0.5k");
  CHECK_THROWS_AS(format_real(1.0 / 0.0), IoError);
  std::mt19937_64 g(4);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = random_q(g) * 1e-7;
    CHECK(parse_quaternion(format_quaternion(q)) == q);
  }
}
