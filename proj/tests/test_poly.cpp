#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sympow/poly.hpp"

using namespace sympow;

namespace {

Poly x() { return Poly::var_x(); }
Poly y() { return Poly::var_y(); }
Poly z() { return Poly::var_z(); }

Poly random_poly(std::mt19937& rng, int max_degree, int terms) {
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Poly p;
  for (int k = 0; k < terms; ++k) {
    const int a = exp(rng);
    const int b = exp(rng) % (max_degree - a + 1);
    const int c = exp(rng) % (max_degree - a - b + 1);
    p.add_term({a, b, c}, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial products") {
  CHECK(x() * y() == Poly::monomial({1, 1, 0}));
  CHECK((x() - y()) * (x() + y()) ==
        Poly::monomial({2, 0, 0}) - Poly::monomial({0, 2, 0}));
  // x(x - y)(x - 2y) = x^3 - 3x^2 y + 2x y^2
  const Poly f = x() * (x() - y()) * (x() - Rational(2) * y());
  Poly expected = Poly::monomial({3, 0, 0});
  expected.add_term({2, 1, 0}, -3);
  expected.add_term({1, 2, 0}, 2);
  CHECK(f == expected);
}

TEST_CASE("graded components") {
  Poly f = x() + x() * x();
  CHECK(f.graded_component(2) == x() * x());
  const Poly g = x() * y() * z();
  CHECK(g.graded_component(2).is_zero());
  Poly h = x() * y() + y() * z() + z() * z() * z();
  CHECK(h.graded_component(2) == x() * y() + y() * z());
}

TEST_CASE("vanishing order at points") {
  const ProjPoint origin_chart(0, 0, 1);
  CHECK(vanishing_order(Poly::monomial({2, 1, 0}), origin_chart) == 3);
  CHECK(vanishing_order(z(), origin_chart) == 0);

  const Poly f = x() * (x() - y()) * (x() - Rational(2) * y());
  CHECK(vanishing_order(f, ProjPoint(0, 1, 0)) == 1);

  CHECK_THROWS_AS(vanishing_order(Poly::zero(), origin_chart), std::domain_error);
}

TEST_CASE("vanishing order does not depend on the chart") {
  std::mt19937 rng(314);
  const std::vector<ProjPoint> points = {ProjPoint(0, 0, 1), ProjPoint(0, 1, 0),
                                         ProjPoint(2, 1, 0), ProjPoint(1, 2, 3),
                                         ProjPoint(Rational(1, 2), 1, 0)};
  for (int trial = 0; trial < 40; ++trial) {
    const Poly f = random_poly(rng, 5, 6);
    if (f.is_zero()) continue;
    for (const auto& p : points) {
      CHECK(vanishing_order(f, p, 0) == vanishing_order(f, p, 1));
    }
  }
}

TEST_CASE("vanishing order is invariant under scaling") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly f = random_poly(rng, 4, 5);
    if (f.is_zero()) continue;
    const ProjPoint p(1, 2, 1);
    CHECK(vanishing_order(f, p) == vanishing_order(Rational(-7, 3) * f, p));
  }
}

TEST_CASE("vanishing order adds under products") {
  std::mt19937 rng(555);
  const ProjPoint p(1, 1, 1);
  int checked = 0;
  while (checked < 25) {
    const Poly f = random_poly(rng, 3, 4);
    const Poly g = random_poly(rng, 3, 4);
    if (f.is_zero() || g.is_zero()) continue;
    const int of = vanishing_order(f, p);
    const int og = vanishing_order(g, p);
    if (of > 4 || og > 4) continue;
    CHECK(vanishing_order(f * g, p) == of + og);
    ++checked;
  }
}

TEST_CASE("evaluation") {
  const Poly f = x() * (x() - y()) * (x() - Rational(2) * y());
  CHECK(f.evaluate({1, 1, 0}) == 0);
  CHECK(f.evaluate({2, 1, 0}) == 0);
  CHECK(f.evaluate({1, 0, 0}) == 1);
}

TEST_CASE("rendering follows the exponent order") {
  const Poly f = x() * (x() - y()) * (x() - Rational(2) * y());
  CHECK(f.to_string() == "x^3 - 3*x^2*y + 2*x*y^2");
  CHECK(Poly::zero().to_string() == "0");
  CHECK(Poly::constant(Rational(-3, 2)).to_string() == "-3/2");
  Poly g = Poly::monomial({0, 1, 0}, Rational(1, 2));
  g.add_term({0, 0, 1}, -1);
  CHECK(g.to_string() == "1/2*y - z");
}

TEST_CASE("linear substitution is a ring map") {
  std::mt19937 rng(909);
  const std::array<std::array<Rational, 3>, 3> image = {
      std::array<Rational, 3>{Rational(1), Rational(2), Rational(0)},
      std::array<Rational, 3>{Rational(0), Rational(1), Rational(-1)},
      std::array<Rational, 3>{Rational(1), Rational(0), Rational(3)}};
  for (int trial = 0; trial < 20; ++trial) {
    const Poly f = random_poly(rng, 3, 4);
    const Poly g = random_poly(rng, 3, 4);
    CHECK((f * g).substitute_linear(image) ==
          f.substitute_linear(image) * g.substitute_linear(image));
    CHECK((f + g).substitute_linear(image) ==
          f.substitute_linear(image) + g.substitute_linear(image));
  }
}

TEST_CASE("projective points normalize the last nonzero coordinate") {
  const ProjPoint p(2, 4, 0);
  CHECK(p.coords[0] == Rational(1, 2));
  CHECK(p.coords[1] == 1);
  CHECK(p == ProjPoint(1, 2, 0));
  CHECK_THROWS_AS(ProjPoint(0, 0, 0), std::invalid_argument);
}
