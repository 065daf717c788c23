#pragma once

#include "plucker/lattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace plucker {

/// Finite set of rays (primitive covector, integer weight).
///
/// Zero-weight rays may be present while a fan is being assembled;
/// normalized() drops them.
class WeightedFan {
 public:
  WeightedFan() = default;

  /// Adds w to the weight of direction g.
  void add(const Covector& g, Int w);
  Int weight(const Covector& g) const;
  const std::map<Covector, Int>& rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }

  WeightedFan normalized() const;
  /// Sum of weight * direction; zero for a tropical fan.
  LatticePoint moment() const;
  bool balanced() const;
  bool nonnegative() const;
  /// Rays sorted by the angle of their direction, counterclockwise from (1,0).
  std::vector<std::pair<Covector, Int>> ccw() const;

  friend bool operator==(const WeightedFan& a, const WeightedFan& b) {
    return a.normalized().rays_ == b.normalized().rays_;
  }

 private:
  std::map<Covector, Int> rays_;
};

/// Outer edge normals of P weighted by lattice lengths (the tropical fan of a
/// generic curve with Newton polygon P).
WeightedFan edge_fan(const LatticePolygon& p);

/// Polygon whose outer normal fan, weighted by edge lattice lengths, is the
/// given balanced fan; canonically translated. Throws std::logic_error if the
/// edge walk does not close.
LatticePolygon polygon_from_fan(const WeightedFan& fan);

}  // namespace plucker
