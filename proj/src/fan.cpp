#include "plucker/fan.hpp"

#include <algorithm>
#include <stdexcept>

namespace plucker {

namespace {

int half(const Covector& d) { return (d.v() < 0 || (d.v() == 0 && d.u() < 0)) ? 1 : 0; }

}  // namespace

void WeightedFan::add(const Covector& g, Int w) { rays_[g] += w; }

Int WeightedFan::weight(const Covector& g) const {
  auto it = rays_.find(g);
  return it == rays_.end() ? 0 : it->second;
}

WeightedFan WeightedFan::normalized() const {
  WeightedFan out;
  for (const auto& [g, w] : rays_)
    if (w != 0) out.rays_.emplace(g, w);
  return out;
}

LatticePoint WeightedFan::moment() const {
  LatticePoint s{0, 0};
  for (const auto& [g, w] : rays_) s = s + LatticePoint{g.u(), g.v()} * w;
  return s;
}

bool WeightedFan::balanced() const { return moment() == LatticePoint{0, 0}; }

bool WeightedFan::nonnegative() const {
  return std::all_of(rays_.begin(), rays_.end(), [](const auto& r) { return r.second >= 0; });
}

std::vector<std::pair<Covector, Int>> WeightedFan::ccw() const {
  std::vector<std::pair<Covector, Int>> out(rays_.begin(), rays_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int ha = half(a.first), hb = half(b.first);
    if (ha != hb) return ha < hb;
    return a.first.u() * b.first.v() - a.first.v() * b.first.u() > 0;
  });
  return out;
}

WeightedFan edge_fan(const LatticePolygon& p) {
  require_full_dimensional(p, "edge_fan");
  WeightedFan fan;
  for (const auto& e : p.edges()) {
    const LatticePoint d = e.b - e.a;
    // Counterclockwise traversal: the outer normal is d rotated by -90 degrees.
    fan.add(Covector(d.y, -d.x), lattice_length(e));
  }
  return fan;
}

LatticePolygon polygon_from_fan(const WeightedFan& fan) {
  const WeightedFan f = fan.normalized();
  std::vector<LatticePoint> pts{{0, 0}};
  for (const auto& [g, w] : f.ccw()) {
    if (w < 0) throw std::logic_error("fan has a negative weight " + g.str());
    // Edge with outer normal g, walked counterclockwise: g rotated by +90 degrees.
    pts.push_back(pts.back() + LatticePoint{-g.v(), g.u()} * w);
  }
  if (pts.back() != LatticePoint{0, 0})
    throw std::logic_error("edge walk of the fan does not close");
  return LatticePolygon::hull(pts).canonical();
}

}  // namespace plucker
