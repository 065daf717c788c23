#include "plucker/oracle.hpp"

#include "plucker/formulas.hpp"
#include "plucker/resultant.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace plucker {

namespace {

constexpr unsigned kWorkingBits = 256;

// Sets the MPFR default precision for the lifetime of the object.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(bits * 301 / 1000 + 1);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Complex ipow(const Complex& b, Int e) {
  Complex r(Real(1)), base = b;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

// Coefficients of f(x0, y) in y, lowest degree first.
std::vector<Complex> specialize_x(const SparsePoly& f, const Complex& x0) {
  std::vector<Complex> c(f.degree_y() + 1);
  for (const auto& [e, v] : f.terms()) c[e.y] += to_complex(v) * ipow(x0, e.x);
  return c;
}

// Relative distance from y to the nearest root of f(x, .), estimated by the
// Newton step |f / f_y| / |y|.
Real root_distance(const SparsePoly& f, const SparsePoly& fy, const Complex& x, const Complex& y) {
  const Complex v = f.eval<Complex>(x, y, to_complex);
  if (v.re == 0 && v.im == 0) return Real(0);
  const Complex d = fy.eval<Complex>(x, y, to_complex);
  if (d.re == 0 && d.im == 0) return Real(1);
  return abs(v / d) / abs(y);
}

SparsePoly transpose(const SparsePoly& f) {
  SparsePoly r;
  for (const auto& [e, c] : f.terms()) r.add_term({e.y, e.x}, c);
  return r;
}

// Drops coefficients that are negligible against the largest one at either
// end, so roots at zero and at infinity disappear.
std::vector<Complex> trim_negligible(std::vector<Complex> c) {
  Real biggest = 0;
  for (const auto& x : c) biggest = std::max(biggest, abs(x));
  const Real cut = biggest * boost::multiprecision::ldexp(Real(1), -static_cast<int>(kWorkingBits) / 2);
  while (!c.empty() && abs(c.back()) <= cut) c.pop_back();
  std::size_t lead = 0;
  while (lead < c.size() && abs(c[lead]) <= cut) ++lead;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
  return c;
}

template <class F>
auto with_retries(const OracleConfig& cfg, const char* what, F attempt) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  std::string last;
  for (int i = 0; i < cfg.retries; ++i) {
    try {
      return attempt(rng);
    } catch (const DegenerateSample& e) {
      last = e.what();
    } catch (const RootFindingError& e) {
      last = e.what();
    }
  }
  throw RetriesExhausted(std::string(what) + ": retries exhausted (last: " + last + ")");
}

SparsePoly placed_sample(const LatticePolygon& p, std::mt19937_64& rng, Int bound) {
  require_full_dimensional(p, "oracle");
  return sample_poly(p, rng, bound);
}

}  // namespace

void OracleConfig::validate() const {
  if (coeff_bound <= 0 || !(root_tol > 0) || !(torus_tol > 0) || retries <= 0)
    throw std::invalid_argument("oracle configuration bounds must be positive");
}

SparsePoly sample_poly(const LatticePolygon& p, std::mt19937_64& rng, Int coeff_bound) {
  if (coeff_bound <= 0) throw std::invalid_argument("coefficient bound must be positive");
  const LatticePoint shift = LatticePoint{2, 2} - p.min_corner();
  const auto span = static_cast<std::uint64_t>(2 * coeff_bound);
  SparsePoly f;
  for (const auto& e : p.lattice_points()) {
    const auto u = static_cast<Int>(rng() % span);  // 0 .. 2B-1
    const Int c = u < coeff_bound ? u - coeff_bound : u - coeff_bound + 1;
    f.add_term(e + shift, c);
  }
  return f;
}

SparsePoly sample_poly(const LatticePolygon& p, const OracleConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  return sample_poly(p, rng, cfg.coeff_bound);
}

Int count_torus_solutions(const SparsePoly& f_in, const SparsePoly& g_in, const OracleConfig& cfg) {
  cfg.validate();
  if (f_in.is_zero() || g_in.is_zero()) throw std::invalid_argument("count_torus_solutions: zero polynomial");
  SparsePoly f = f_in.without_monomial_factor(), g = g_in.without_monomial_factor();
  if (f.degree_y() == 0 || g.degree_y() == 0) {
    f = transpose(f);
    g = transpose(g);
  }
  if (f.degree_y() == 0 || g.degree_y() == 0)
    throw std::invalid_argument("count_torus_solutions: a polynomial is a monomial times a function of one variable");

  const SparsePoly res = resultant_y(f, g);
  if (res.is_zero()) throw DegenerateSample("resultant vanishes identically");
  ZPoly r;
  {
    mpz_class denom = 1;
    for (const auto& [e, c] : res.terms()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
    const LatticePoint lo = res.min_exponent();  // strips the power of x
    r.assign(res.degree_x() - lo.x + 1, 0);
    for (const auto& [e, c] : res.terms()) r[e.x - lo.x] = c.get_num() * (denom / c.get_den());
  }
  const ZPoly sqf = squarefree_part(r);
  if (zpoly::degree(sqf) <= 0) return 0;

  const auto xs = polynomial_roots(sqf, kWorkingBits);
  PrecisionScope scope(kWorkingBits);
  const Real torus_tol(cfg.torus_tol), root_tol(cfg.root_tol);
  // A shared root is accepted only if it also agrees to the numeric floor of
  // the working precision; distances between that and root_tol are neither
  // clearly common roots nor clearly not.
  const Real floor = boost::multiprecision::ldexp(Real(1), -static_cast<int>(kWorkingBits) / 4);
  const Real accept = std::min(root_tol, floor);
  // Use the polynomial of smaller y-degree to generate candidate y values.
  const SparsePoly& lo = f.degree_y() <= g.degree_y() ? f : g;
  const SparsePoly& hi = f.degree_y() <= g.degree_y() ? g : f;

  const SparsePoly hi_y = hi.dy();

  Int count = 0;
  for (const auto& x0 : xs) {
    if (abs(x0) <= torus_tol) continue;
    const auto coeffs = trim_negligible(specialize_x(lo, x0));
    if (coeffs.size() <= 1) continue;
    std::vector<Complex> matched;
    for (const auto& y0 : polynomial_roots_unchecked(coeffs)) {
      if (abs(y0) <= torus_tol) continue;
      const Real dist = root_distance(hi, hi_y, x0, y0);
      if (dist > root_tol) continue;
      if (dist > accept) throw DegenerateSample("ambiguous root match");
      // A multiple root of the candidate polynomial comes back as a cluster.
      const bool seen = std::any_of(matched.begin(), matched.end(), [&](const Complex& m) {
        return abs(m - y0) <= floor * (abs(m) + abs(y0));
      });
      if (!seen) matched.push_back(y0);
    }
    count += static_cast<Int>(matched.size());
  }
  return count;
}

Int inflection_oracle(const LatticePolygon& p, const OracleConfig& cfg) {
  return with_retries(cfg, "inflection_oracle", [&](std::mt19937_64& rng) {
    const SparsePoly f = placed_sample(p, rng, cfg.coeff_bound);
    const SparsePoly h = hessian_curve(f);
    if (h.is_zero() || h.newton_polygon() != dilate(f.newton_polygon(), 3))
      throw DegenerateSample("Hessian curve has a degenerate Newton polygon");
    return count_torus_solutions(f, h, cfg);
  });
}

Int vertical_tangent_oracle(const LatticePolygon& p, const OracleConfig& cfg) {
  return with_retries(cfg, "vertical_tangent_oracle", [&](std::mt19937_64& rng) {
    const SparsePoly f = placed_sample(p, rng, cfg.coeff_bound);
    return count_torus_solutions(f, f.dy(), cfg);
  });
}

DualSample sample_dual_points(const SparsePoly& f, std::size_t n, const OracleConfig& cfg) {
  cfg.validate();
  DualSample out;
  if (n == 0) return out;
  if (f.is_zero() || f.newton_polygon().dim() != 2)
    throw std::invalid_argument("sample_dual_points: Newton polygon must be two-dimensional");
  const SparsePoly g = f.without_monomial_factor();
  const SparsePoly fx = g.dx(), fy = g.dy();
  // f and g differ by a monomial, so (f_x, f_y) and (g_x, g_y) are proportional
  // on the curve; the dual map only depends on that ratio.
  std::mt19937_64 rng(cfg.seed);
  PrecisionScope scope(128);
  const Real torus_tol(cfg.torus_tol);
  const std::size_t max_tries = 20 * (n + 1) * static_cast<std::size_t>(cfg.retries);
  for (std::size_t t = 0; t < max_tries && out.points.size() < n; ++t) {
    const double angle = 2 * std::numbers::pi * uniform01(rng);
    const double radius = 1 + 0.2 * (uniform01(rng) - 0.5);
    const Complex x(Real(radius * std::cos(angle)), Real(radius * std::sin(angle)));
    const auto coeffs = trim_negligible(specialize_x(g, x));
    if (coeffs.size() <= 1) continue;
    for (const auto& y : polynomial_roots_unchecked(coeffs)) {
      if (out.points.size() >= n) break;
      if (abs(y) <= torus_tol) continue;
      const Complex vx = fx.eval<Complex>(x, y, to_complex);
      const Complex vy = fy.eval<Complex>(x, y, to_complex);
      const Complex d = x * vx + y * vy;
      if (abs(d) <= torus_tol * (abs(x * vx) + abs(y * vy))) continue;
      const Complex a = -vx / d, b = -vy / d;
      auto cd = [](const Complex& z) {
        return std::complex<double>(static_cast<double>(z.re), static_cast<double>(z.im));
      };
      out.points.push_back({cd(x), cd(y), cd(a), cd(b)});
    }
  }
  if (out.points.size() < n) throw DegenerateSample("insufficient valid dual samples");
  return out;
}

DualImplicitization implicitize_dual(const SparsePoly& f, const LatticePolygon& predicted_in,
                                     const OracleConfig& cfg) {
  DualImplicitization out{{}, predicted_in.translated(LatticePoint{0, 0} - predicted_in.min_corner()),
                          std::nullopt, 0, {}};
  const auto monomials = out.predicted.lattice_points();
  const std::size_t m = monomials.size();
  const DualSample sample = sample_dual_points(f, 2 * m + 8, cfg);

  using Mat = Eigen::MatrixXcd;
  Mat a(sample.points.size(), m);
  for (std::size_t i = 0; i < sample.points.size(); ++i) {
    const auto& pt = sample.points[i];
    for (std::size_t j = 0; j < m; ++j)
      a(i, j) = std::pow(pt.a, monomials[j].x) * std::pow(pt.b, monomials[j].y);
    a.row(i) /= a.row(i).norm();
  }
  Eigen::VectorXd colscale(m);
  for (std::size_t j = 0; j < m; ++j) {
    colscale(j) = a.col(j).norm();
    a.col(j) /= colscale(j);
  }
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) out.singular_values.push_back(sv(i) / sv(0));
  const double kernel_tol = 1e-9;
  for (double s : out.singular_values)
    if (s < kernel_tol) ++out.kernel_dimension;
  if (out.kernel_dimension != 1) return out;

  Eigen::VectorXcd v = svd.matrixV().col(m - 1);
  for (std::size_t j = 0; j < m; ++j) v(j) /= colscale(j);
  const double biggest = v.cwiseAbs().maxCoeff();
  Eigen::Index arg = 0;
  v.cwiseAbs().maxCoeff(&arg);
  const std::complex<double> norm = v(arg);
  std::vector<LatticePoint> support;
  for (std::size_t j = 0; j < m; ++j) {
    if (std::abs(v(j)) < 1e-6 * biggest) continue;
    out.coefficients[monomials[j]] = v(j) / norm;
    support.push_back(monomials[j]);
  }
  out.observed = LatticePolygon::hull(support);
  return out;
}

DualImplicitization implicitize_dual(const LatticePolygon& p, const OracleConfig& cfg) {
  const LatticePolygon predicted = dual_polygon(p);
  if (predicted.lattice_points().size() > 40)
    throw std::invalid_argument("implicitize_dual: predicted dual polygon has more than 40 lattice points");
  return with_retries(cfg, "implicitize_dual", [&](std::mt19937_64& rng) {
    const SparsePoly f = placed_sample(p, rng, cfg.coeff_bound);
    OracleConfig sub = cfg;
    sub.seed = rng();
    auto result = implicitize_dual(f, predicted, sub);
    if (result.kernel_dimension != 1)
      throw DegenerateSample("kernel dimension " + std::to_string(result.kernel_dimension));
    return result;
  });
}

}  // namespace plucker
