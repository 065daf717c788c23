// Plücker-type invariants of a generic curve computed from its Newton
// polygon alone.
#pragma once

#include "plucker/fan.hpp"
#include "plucker/lattice.hpp"

namespace plucker {

struct PluckerReport {
  LatticePolygon polygon;
  Rational vol;
  Int inflections = 0;
  Rational bitangents;
  WeightedFan dual_fan;
  LatticePolygon dual_polygon;
  Rational dual_vol;
  Int euler_char = 0;
  Int genus = 0;
  Int vertical_tangents = 0;
};

/// 6 vol(P) - 2 sum_{down,ne,left} len(P^g) - sum_{up,sw,right} len(P^g).
Int inflection_count(const LatticePolygon& p);

/// Tropical fan of the dual curve. Throws std::logic_error if it fails to
/// balance.
WeightedFan dual_fan(const LatticePolygon& p);

/// Newton polygon of the dual curve, lexicographically smallest vertex at
/// the origin.
LatticePolygon dual_polygon(const LatticePolygon& p);

/// vol(P^dual) from the closed formula in S = vol(P), vol(Delta, -P) and the
/// arrow face lengths. Throws std::logic_error if it disagrees with the area
/// of dual_polygon(p).
Rational dual_area_closed(const LatticePolygon& p);

/// The closed formula alone, without the cross-check.
Rational dual_area_formula(const LatticePolygon& p);

/// -10 vol(P) + vol(P^dual) + 3 sum_{down,ne,left} len + sum_{up,sw,right} len.
Rational bitangent_count(const LatticePolygon& p);

/// 2 vol(P) - len(P^down) - len(P^up)
Int vertical_tangent_count(const LatticePolygon& p);

/// -2 vol(P) + lattice perimeter
Int euler_characteristic(const LatticePolygon& p);

/// 3P, the Newton polygon of x^2 y^2 Hess(f) when P sits far from the axes.
LatticePolygon hessian_polytope(const LatticePolygon& p);

PluckerReport plucker_report(const LatticePolygon& p);

}  // namespace plucker
