#include "plucker/sparse_poly.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace plucker;

namespace {

SparsePoly random_poly(std::mt19937_64& rng, const LatticePolygon& p, LatticePoint shift) {
  std::uniform_int_distribution<int> coef(-20, 20);
  SparsePoly f;
  for (const auto& e : p.lattice_points()) {
    int c = 0;
    while (c == 0) c = coef(rng);
    f.add_term(e + shift, c);
  }
  return f;
}

}  // namespace

TEST_CASE("arithmetic and derivatives") {
  const auto x = SparsePoly::monomial(1, {1, 0});
  const auto y = SparsePoly::monomial(1, {0, 1});
  const auto one = SparsePoly::monomial(1, {0, 0});
  const auto f = x * y + y + one;
  CHECK(f.size() == 3);
  CHECK(f.dx() == y);
  CHECK(f.dy() == x + one);
  CHECK((f - f).is_zero());
  CHECK(f.eval(mpq_class(1), mpq_class(-1, 2)) == 0);
  CHECK(f.str() == "x*y + y + 1");
  CHECK((x * mpq_class(-3, 2)).str() == "-3/2*x");

  const auto g = f.shifted({2, 3});
  CHECK(g.min_exponent() == LatticePoint{2, 3});
  CHECK(g.without_monomial_factor() == f);
  CHECK(g.newton_polygon() == LatticePolygon::hull({{2, 3}, {2, 4}, {3, 4}}));
  CHECK(f.truncation(dir::up) == x * y + y);
}

TEST_CASE("hessian of a monomial") {
  for (Int a = 2; a <= 5; ++a)
    for (Int b = 2; b <= 5; ++b) {
      const mpq_class c(3, 7);
      const auto h = hessian_curve(SparsePoly::monomial(c, {a, b}));
      REQUIRE(h.size() == 1);
      // x^2 y^2 times c^3 a b (a+b) x^(3a-2) y^(3b-2).
      CHECK(h.coefficient({3 * a, 3 * b}) == c * c * c * a * b * (a + b));
    }
}

TEST_CASE("hessian Newton polygon is three times the original") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const auto p = testing::random_polygon(rng, 4, 6);
    const auto f = random_poly(rng, p, {2, 2});
    const auto h = hessian_curve(f);
    CHECK(h.newton_polygon() == dilate(f.newton_polygon(), 3));
  }
  const auto f = random_poly(rng, standard_simplex(2), {2, 2});
  CHECK(hessian_curve(f).newton_polygon() == dilate(standard_simplex(2), 3).translated({6, 6}));
}

TEST_CASE("lines have no curvature") {
  SparsePoly line;
  line.add_term({0, 0}, 1);
  line.add_term({1, 0}, 1);
  line.add_term({0, 1}, -1);
  CHECK(hessian_curve(line).is_zero());

  // After the monomial shift the Hessian curve still vanishes along the line.
  const auto h = hessian_curve(line.shifted({2, 2}));
  CHECK_FALSE(h.is_zero());
  for (int t = -3; t <= 3; ++t) CHECK(h.eval(mpq_class(t), mpq_class(t + 1)) == 0);
}
