// Analytic cross-check of the combinatorial counts: sample a random curve
// with a given Newton polygon and count its special points numerically.
#pragma once

#include "plucker/lattice.hpp"
#include "plucker/sparse_poly.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace plucker {

struct OracleConfig {
  std::uint64_t seed = 0;
  Int coeff_bound = 1000;
  /// Relative residual under which two polynomials are taken to share a root.
  double root_tol = 1e-6;
  /// Solutions with |x| or |y| below this are not in the torus.
  double torus_tol = 1e-8;
  int retries = 5;

  /// Throws std::invalid_argument unless every bound is positive.
  void validate() const;
};

/// The random sample was not generic enough to count reliably; resample.
struct DegenerateSample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every attempt produced a degenerate sample.
struct RetriesExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One nonzero integer coefficient in [-bound, bound] per lattice point of P,
/// with the support translated so all exponents are at least 2.
SparsePoly sample_poly(const LatticePolygon& p, std::mt19937_64& rng, Int coeff_bound);
SparsePoly sample_poly(const LatticePolygon& p, const OracleConfig& cfg);

/// Number of distinct common zeros of f and g in (C^*)^2. Throws
/// DegenerateSample when the resultant vanishes or a root match is ambiguous.
Int count_torus_solutions(const SparsePoly& f, const SparsePoly& g, const OracleConfig& cfg);

/// Inflection points of a random curve supported on P, counted as the torus
/// intersections with its Hessian curve.
Int inflection_oracle(const LatticePolygon& p, const OracleConfig& cfg);
/// Points of a random curve supported on P with vertical tangent.
Int vertical_tangent_oracle(const LatticePolygon& p, const OracleConfig& cfg);

/// A point (x,y) of the curve and the coefficients (a,b) of its tangent line
/// a X + b Y + 1 = 0.
struct DualPoint {
  std::complex<double> x, y, a, b;
};

struct DualSample {
  std::vector<DualPoint> points;
};

DualSample sample_dual_points(const SparsePoly& f, std::size_t n, const OracleConfig& cfg);

struct DualImplicitization {
  /// Kernel polynomial in (a,b), scaled so its largest coefficient has modulus 1.
  std::map<LatticePoint, std::complex<double>> coefficients;
  /// Predicted dual polygon, translated to touch both axes.
  LatticePolygon predicted;
  /// Newton polygon of the kernel polynomial; set when the kernel is one-dimensional.
  std::optional<LatticePolygon> observed;
  std::size_t kernel_dimension = 0;
  std::vector<double> singular_values;  // descending, normalised by the largest
  bool matches() const { return kernel_dimension == 1 && observed && *observed == predicted; }
};

/// Implicit equation of the dual of a random curve supported on P, fitted on
/// the lattice points of the predicted dual polygon.
DualImplicitization implicitize_dual(const LatticePolygon& p, const OracleConfig& cfg);
/// Same for a fixed curve f, with an explicit predicted dual polygon.
DualImplicitization implicitize_dual(const SparsePoly& f, const LatticePolygon& predicted,
                                     const OracleConfig& cfg);

}  // namespace plucker
