#include "plucker/assumptions.hpp"
#include "plucker/formulas.hpp"
#include "plucker/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <complex>
#include <random>

using namespace plucker;

namespace {

SparsePoly poly(std::initializer_list<std::pair<LatticePoint, int>> terms) {
  SparsePoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

OracleConfig seeded(std::uint64_t seed) {
  OracleConfig cfg;
  cfg.seed = seed;
  return cfg;
}

using cd = std::complex<double>;

cd eval(const SparsePoly& f, cd x, cd y) {
  cd s = 0;
  for (const auto& [e, c] : f.terms())
    s += c.get_d() * std::pow(x, static_cast<int>(e.x)) * std::pow(y, static_cast<int>(e.y));
  return s;
}

// Sum of |term| at (x,y), the natural scale of a polynomial residual.
double magnitude(const SparsePoly& f, cd x, cd y) {
  double s = 0;
  for (const auto& [e, c] : f.terms())
    s += std::abs(c.get_d() * std::pow(x, static_cast<int>(e.x)) * std::pow(y, static_cast<int>(e.y)));
  return s;
}

const LatticePolygon kTriangle = LatticePolygon::hull({{0, 0}, {0, 1}, {1, 1}});

}  // namespace

TEST_CASE("sample_poly") {
  const auto f = sample_poly(standard_simplex(1), seeded(3));
  CHECK(f.size() == 3);
  CHECK(f.newton_polygon() == standard_simplex(1).translated({2, 2}));
  CHECK(sample_poly(standard_simplex(1), seeded(3)) == f);
  CHECK_FALSE(sample_poly(standard_simplex(1), seeded(4)) == f);

  const auto g = sample_poly(rectangle(3, 4), seeded(1));
  CHECK(g.size() == 20);
  for (const auto& [e, c] : g.terms()) {
    CHECK(e.x >= 2);
    CHECK(e.y >= 2);
    CHECK(c != 0);
    CHECK(abs(c) <= 1000);
    CHECK(c.get_den() == 1);
  }

  OracleConfig small = seeded(9);
  small.coeff_bound = 1;
  const auto unit = sample_poly(rectangle(2, 2), small);
  for (const auto& [e, c] : unit.terms()) CHECK((c == 1 || c == -1));

  OracleConfig bad;
  bad.coeff_bound = 0;
  CHECK_THROWS_AS(sample_poly(kTriangle, bad), std::invalid_argument);
  bad = OracleConfig{};
  bad.root_tol = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("count_torus_solutions examples") {
  const OracleConfig cfg;
  CHECK(count_torus_solutions(poly({{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, -3}}),
                              poly({{{1, 0}, 1}, {{0, 1}, -1}, {{0, 0}, -1}}), cfg) == 1);
  CHECK(count_torus_solutions(poly({{{0, 1}, 1}, {{2, 0}, -1}}), poly({{{0, 1}, 1}, {{0, 0}, -1}}), cfg) == 2);
  // Meeting only at the origin.
  CHECK(count_torus_solutions(poly({{{0, 1}, 1}, {{1, 0}, -1}}), poly({{{0, 1}, 1}, {{1, 0}, -2}}), cfg) == 0);
  // Common component.
  const auto common = poly({{{0, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}});
  CHECK_THROWS_AS(count_torus_solutions(common * poly({{{0, 1}, 1}, {{0, 0}, 2}}),
                                        common * poly({{{1, 0}, 1}, {{0, 0}, 3}}), cfg),
                  DegenerateSample);
}

TEST_CASE("generic systems have the mixed volume as solution count") {
  // Random coefficients on fixed supports are generic with overwhelming
  // probability, so the count equals the mixed volume rather than just being
  // bounded by it.
  std::mt19937_64 rng(21);
  for (int t = 0; t < 12; ++t) {
    const auto p = testing::random_polygon(rng, 3, 5);
    const auto q = testing::random_polygon(rng, 3, 5);
    const auto f = sample_poly(p, rng, 1000);
    const auto g = sample_poly(q, rng, 1000);
    const Rational mv = mixed_volume(p, q);
    const Int count = count_torus_solutions(f, g, OracleConfig{});
    CHECK(Rational(count) <= mv);
    CHECK(Rational(count) == mv);
  }
}

TEST_CASE("vertical tangent oracle") {
  CHECK(vertical_tangent_oracle(standard_simplex(2), seeded(1)) == 2);
  CHECK(vertical_tangent_oracle(kTriangle, seeded(1)) == 0);
  CHECK(vertical_tangent_oracle(rectangle(3, 4), seeded(1)) == 18);
  for (std::uint64_t seed : {1u, 2u}) CHECK(vertical_tangent_oracle(standard_simplex(4), seeded(seed)) == 12);
}

TEST_CASE("inflection oracle") {
  CHECK(inflection_oracle(kTriangle, seeded(1)) == 0);
  CHECK(inflection_oracle(standard_simplex(3), seeded(1)) == 9);
  CHECK(inflection_oracle(rectangle(3, 4), seeded(1)) == 51);
  for (std::uint64_t seed : {1u, 2u}) CHECK(inflection_oracle(standard_simplex(5), seeded(seed)) == 45);
  CHECK_THROWS_AS(inflection_oracle(segment({0, 0}, {3, 0}), seeded(1)), DegeneratePolygon);
}

TEST_CASE("oracles are deterministic per seed") {
  const auto p = LatticePolygon::hull({{0, 0}, {3, 0}, {4, 2}, {1, 3}});
  CHECK(vertical_tangent_oracle(p, seeded(5)) == vertical_tangent_oracle(p, seeded(5)));
  const auto f = sample_poly(p, seeded(5));
  const auto a = sample_dual_points(f, 6, seeded(7));
  const auto b = sample_dual_points(f, 6, seeded(7));
  REQUIRE(a.points.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(a.points[i].a == b.points[i].a);
    CHECK(a.points[i].b == b.points[i].b);
  }
}

TEST_CASE("dual points are tangent lines") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 5; ++t) {
    const auto f = sample_poly(testing::random_polygon(rng, 4, 6), rng, 1000);
    const auto fx = f.dx(), fy = f.dy();
    const auto sample = sample_dual_points(f, 20, seeded(t));
    REQUIRE(sample.points.size() == 20);
    for (const auto& pt : sample.points) {
      CHECK(std::abs(eval(f, pt.x, pt.y)) < 1e-8 * magnitude(f, pt.x, pt.y));
      CHECK(std::abs(pt.a * pt.x + pt.b * pt.y + 1.0) < 1e-8);
      // (a,b) is proportional to the gradient.
      const cd gx = eval(fx, pt.x, pt.y), gy = eval(fy, pt.x, pt.y);
      CHECK(std::abs(pt.a * gy - pt.b * gx) < 1e-8 * std::abs(pt.a) * (std::abs(gx) + std::abs(gy)));
    }
  }
  CHECK(sample_dual_points(sample_poly(kTriangle, seeded(1)), 0, seeded(1)).points.empty());
}

TEST_CASE("dual of xy + y + 1") {
  const auto f = poly({{{1, 1}, 1}, {{0, 1}, 1}, {{0, 0}, 1}});
  // The point (1,-1/2) has tangent line -x/3 + 4y/3 + 1 = 0.
  const auto fx = f.dx(), fy = f.dy();
  const cd x = 1.0, y = -0.5;
  const cd d = x * eval(fx, x, y) + y * eval(fy, x, y);
  CHECK(std::abs(-eval(fx, x, y) / d - (-1.0 / 3)) < 1e-15);
  CHECK(std::abs(-eval(fy, x, y) / d - 4.0 / 3) < 1e-15);

  auto dual_eq = [](cd a, cd b) { return a * a + 4.0 * a * b - 2.0 * a + 1.0; };
  const auto sample = sample_dual_points(f, 30, seeded(2));
  for (const auto& pt : sample.points)
    CHECK(std::abs(dual_eq(pt.a, pt.b)) < 1e-9 * (1 + std::norm(pt.a) + std::abs(pt.a * pt.b)));

  const auto res = implicitize_dual(f, dual_polygon(kTriangle), seeded(2));
  REQUIRE(res.kernel_dimension == 1);
  REQUIRE(res.matches());
  const std::map<LatticePoint, double> expected{{{2, 0}, 1}, {{1, 1}, 4}, {{1, 0}, -2}, {{0, 0}, 1}};
  REQUIRE(res.coefficients.size() == expected.size());
  const cd unit = res.coefficients.at({0, 0});
  for (const auto& [e, c] : expected) CHECK(std::abs(res.coefficients.at(e) / unit - c) < 1e-6 * std::abs(c));
}

TEST_CASE("dual implicitization matches the predicted polygon") {
  const auto conic = implicitize_dual(standard_simplex(2), seeded(1));
  CHECK(conic.matches());
  CHECK(conic.predicted == standard_simplex(2));

  const auto cubic = implicitize_dual(standard_simplex(3), seeded(1));
  CHECK(cubic.matches());
  CHECK(conic.singular_values.front() == doctest::Approx(1.0));

  std::mt19937_64 rng(17);
  int tried = 0;
  while (tried < 6) {
    const auto p = testing::random_polygon(rng, 3, 5);
    if (p.lattice_points().size() > 6 || dual_polygon(p).lattice_points().size() > 40) continue;
    ++tried;
    const auto res = implicitize_dual(p, seeded(tried));
    CHECK_MESSAGE(res.matches(), to_json_array(p));
  }

  CHECK_THROWS_AS(implicitize_dual(standard_simplex(5), seeded(1)), std::invalid_argument);
}

TEST_CASE("Hessian support of sampled curves") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto p = testing::random_polygon(rng, 5, 6);
    const auto f = sample_poly(p, rng, 1000);
    CHECK(hessian_curve(f).newton_polygon() == dilate(f.newton_polygon(), 3));
  }
}
