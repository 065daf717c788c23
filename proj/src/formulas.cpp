#include "plucker/formulas.hpp"

#include <stdexcept>

namespace plucker {

namespace {

Int arrow_sum(const LatticePolygon& p, std::span<const Covector> arrows) {
  Int s = 0;
  for (const auto& g : arrows) s += face_length(p, g);
  return s;
}

// Unit edge of the standard triangle whose outer normal is g.
LatticePolygon simplex_edge(const Covector& g) {
  if (g == dir::down) return segment({0, 0}, {1, 0});
  if (g == dir::northeast) return segment({1, 0}, {0, 1});
  if (g == dir::left) return segment({0, 0}, {0, 1});
  throw std::invalid_argument("no edge of the standard triangle has normal " + g.str());
}

}  // namespace

Int inflection_count(const LatticePolygon& p) {
  require_full_dimensional(p, "inflection_count");
  return 3 * doubled_area(p) - 2 * arrow_sum(p, primary_arrows()) -
         arrow_sum(p, opposite_arrows());
}

WeightedFan dual_fan(const LatticePolygon& p) {
  require_full_dimensional(p, "dual_fan");
  const Int twice_vol = doubled_area(p);
  WeightedFan fan;
  for (const auto& g : primary_arrows())
    fan.add(g, twice_vol - face_length(p, g) + face_length(p, -g));
  for (const auto& g : opposite_arrows()) fan.add(g, 0);
  const WeightedFan primal = edge_fan(p);
  for (const auto& [normal, len] : primal.rays()) {
    const Covector g = -normal;
    if (is_arrow(g)) continue;
    fan.add(g, face_length(p, -g));
  }
  if (!fan.balanced())
    throw std::logic_error("dual fan does not balance for polygon " + to_json_array(p));
  if (!fan.nonnegative())
    throw std::logic_error("dual fan has a negative weight for polygon " + to_json_array(p));
  return fan.normalized();
}

LatticePolygon dual_polygon(const LatticePolygon& p) { return polygon_from_fan(dual_fan(p)); }

Rational dual_area_formula(const LatticePolygon& p) {
  require_full_dimensional(p, "dual_area_closed");
  const Rational s = area(p);
  const Rational mixed = mixed_volume(standard_simplex(), negate(p));
  const Int ld = face_length(p, dir::down);
  const Int lne = face_length(p, dir::northeast);
  const Int ll = face_length(p, dir::left);
  Rational edge_terms = Rational(0);
  for (const auto& g : primary_arrows())
    edge_terms += face_length(p, g) * mixed_volume(p, simplex_edge(g));
  return 2 * s * s + 2 * s * mixed - 2 * s * Rational(ld + lne + ll) + s - edge_terms +
         Rational(ld * lne + lne * ll + ll * ld);
}

Rational dual_area_closed(const LatticePolygon& p) {
  const Rational closed = dual_area_formula(p);
  const Rational walked = area(dual_polygon(p));
  if (closed != walked)
    throw std::logic_error("closed dual area " + to_string(closed) +
                           " differs from reconstructed " + to_string(walked));
  return closed;
}

Rational bitangent_count(const LatticePolygon& p) {
  require_full_dimensional(p, "bitangent_count");
  return Rational(-10) * area(p) + area(dual_polygon(p)) +
         Rational(3 * arrow_sum(p, primary_arrows()) + arrow_sum(p, opposite_arrows()));
}

Int vertical_tangent_count(const LatticePolygon& p) {
  require_full_dimensional(p, "vertical_tangent_count");
  return doubled_area(p) - face_length(p, dir::down) - face_length(p, dir::up);
}

Int euler_characteristic(const LatticePolygon& p) {
  require_full_dimensional(p, "euler_characteristic");
  return -doubled_area(p) + lattice_perimeter(p);
}

LatticePolygon hessian_polytope(const LatticePolygon& p) {
  require_full_dimensional(p, "hessian_polytope");
  return dilate(p, 3);
}

PluckerReport plucker_report(const LatticePolygon& p) {
  require_full_dimensional(p, "plucker_report");
  PluckerReport r{.polygon = p,
                  .vol = area(p),
                  .inflections = inflection_count(p),
                  .bitangents = bitangent_count(p),
                  .dual_fan = dual_fan(p),
                  .dual_polygon = dual_polygon(p),
                  .dual_vol = dual_area_closed(p),
                  .euler_char = euler_characteristic(p),
                  .genus = interior_lattice_points(p),
                  .vertical_tangents = vertical_tangent_count(p)};
  if (r.dual_vol != area(r.dual_polygon))
    throw std::logic_error("dual area mismatch in report");
  return r;
}

}  // namespace plucker
