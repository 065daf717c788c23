// Exact planar lattice geometry: lattice polygons, faces, lattice lengths,
// Minkowski sums, mixed volumes and the order-3 exponent map used to move
// statements between the three coordinate directions.
#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace plucker {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

struct LatticePoint {
  Int x = 0;
  Int y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
  LatticePoint operator-() const { return {-x, -y}; }
  LatticePoint operator*(Int k) const { return {x * k, y * k}; }
};

/// Linear functional (x, y) -> u*x + v*y, always stored primitive.
class Covector {
 public:
  /// Divides out gcd(|u|, |v|). Throws std::invalid_argument on (0, 0).
  Covector(Int u, Int v);

  Int u() const { return u_; }
  Int v() const { return v_; }
  Int operator()(const LatticePoint& p) const { return u_ * p.x + v_ * p.y; }
  Covector operator-() const { return Covector(-u_, -v_); }
  std::string str() const;

  friend auto operator<=>(const Covector&, const Covector&) = default;

 private:
  Int u_;
  Int v_;
};

// The six named directions. down/northeast/left are the ones a
// nondegenerate line can meet at infinity; the other three are their negatives.
namespace dir {
inline const Covector down{0, -1};
inline const Covector northeast{1, 1};
inline const Covector left{-1, 0};
inline const Covector up{0, 1};
inline const Covector southwest{-1, -1};
inline const Covector right{1, 0};
}  // namespace dir

/// {down, northeast, left}
std::span<const Covector> primary_arrows();
/// {up, southwest, right}
std::span<const Covector> opposite_arrows();
bool is_arrow(const Covector& g);

/// A vertex or an edge of a polygon.
struct Face {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  LatticePoint a;
  LatticePoint b;  // equals a for a vertex

  bool is_edge() const { return kind == Kind::Edge; }
  friend bool operator==(const Face&, const Face&) = default;
};

/// Finite set of lattice points, kept sorted and free of duplicates.
class LatticeDiagram {
 public:
  explicit LatticeDiagram(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const LatticePoint& p) const;

  friend bool operator==(const LatticeDiagram&, const LatticeDiagram&) = default;

 private:
  std::vector<LatticePoint> points_;
};

/// Convex lattice polygon, possibly degenerate (a point or a segment).
///
/// Vertices are strictly convex and listed counterclockwise starting at the
/// lexicographically smallest one, so two polygons are equal exactly when
/// their vertex lists are.
class LatticePolygon {
 public:
  /// Hull of the given points. Throws std::invalid_argument if empty.
  static LatticePolygon hull(std::span<const LatticePoint> points);
  static LatticePolygon hull(std::initializer_list<LatticePoint> points) {
    return hull(std::span<const LatticePoint>(points.begin(), points.size()));
  }

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  /// 0 for a point, 1 for a segment, 2 otherwise.
  int dim() const;

  /// Edge i runs from vertex i to vertex i+1 (cyclically). Only for dim 2.
  std::vector<Face> edges() const;
  /// Every lattice point in the closed polygon, sorted.
  std::vector<LatticePoint> lattice_points() const;
  bool contains(const LatticePoint& p) const;
  /// Smallest and largest coordinates of the vertices.
  LatticePoint min_corner() const;
  LatticePoint max_corner() const;

  LatticePolygon translated(const LatticePoint& t) const;
  /// Translate so the first (lexicographically smallest) vertex is the origin.
  LatticePolygon canonical() const;
  bool is_translate_of(const LatticePolygon& other) const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  explicit LatticePolygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}
  std::vector<LatticePoint> vertices_;
};

/// Thrown when an operation that needs a two-dimensional polygon gets a
/// point or a segment.
class DegeneratePolygon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_full_dimensional(const LatticePolygon& p, const char* what);

// Common shapes.
LatticePolygon standard_simplex(Int k = 1);        // k * conv{(0,0),(1,0),(0,1)}
LatticePolygon rectangle(Int c, Int d);             // [0,c] x [0,d]
LatticePolygon quasihomogeneous(Int c, Int d);      // conv{(0,0),(c,0),(0,d)}
LatticePolygon segment(LatticePoint a, LatticePoint b);

LatticePolygon convex_hull(std::span<const LatticePoint> points);
Face support_set(const LatticePolygon& p, const Covector& g);
Int lattice_length(const Face& f);
Int lattice_length(const LatticePoint& a, const LatticePoint& b);
/// len(P^g)
Int face_length(const LatticePolygon& p, const Covector& g);
Int doubled_area(const LatticePolygon& p);
Rational area(const LatticePolygon& p);
/// Sum of the lattice lengths of all edges; twice the segment length for a segment.
Int lattice_perimeter(const LatticePolygon& p);
LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q);
/// vol(P+Q) - vol(P) - vol(Q)
Rational mixed_volume(const LatticePolygon& p, const LatticePolygon& q);
LatticePolygon dilate(const LatticePolygon& p, Int k);
LatticePolygon negate(const LatticePolygon& p);
/// Image under (a,b) -> (b, -a-b), canonically translated.
LatticePolygon rotate_r(const LatticePolygon& p);
LatticePolygon rotate_r(const LatticePolygon& p, int power);
/// Exponent map of the rotation, without translation.
LatticePoint rotate_r(const LatticePoint& p);
/// Covector g' with g'(r(p)) = g(p), i.e. the face of r(P) at g' is r(P^g).
Covector rotate_r(const Covector& g);

/// Some integer t with Q + t inside P, if one exists.
std::optional<LatticePoint> contains_translate(const LatticePolygon& p, const LatticePolygon& q);
std::optional<LatticePoint> contains_translate(const LatticePolygon& p, const LatticeDiagram& q);

Int interior_lattice_points(const LatticePolygon& p);
Int boundary_lattice_points(const LatticePolygon& p);

/// Parses "[[x,y], ...]" into the hull of the listed points.
LatticePolygon parse_polygon_json(const std::string& text);
std::string to_json_array(const LatticePolygon& p);

std::string to_string(const Rational& r);

}  // namespace plucker
