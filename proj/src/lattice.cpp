#include "plucker/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace plucker {

namespace {

Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Int cross(const LatticePoint& a, const LatticePoint& b) { return a.x * b.y - a.y * b.x; }

// Half-plane index for angular sorting: directions with angle in [0, pi) first.
int half(const LatticePoint& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; }

bool angle_less(const LatticePoint& a, const LatticePoint& b) {
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Edge vectors in counterclockwise order, starting from the lowest (then
// leftmost) vertex so the first edge has angle in [0, pi).
std::pair<LatticePoint, std::vector<LatticePoint>> edge_sequence(const LatticePolygon& p) {
  const auto& v = p.vertices();
  std::size_t start = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].y < v[start].y || (v[i].y == v[start].y && v[i].x < v[start].x)) start = i;
  }
  std::vector<LatticePoint> edges;
  if (v.size() >= 2) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      const auto& a = v[(start + k) % v.size()];
      const auto& b = v[(start + k + 1) % v.size()];
      edges.push_back(b - a);
    }
  }
  return {v[start], edges};
}

}  // namespace

Covector::Covector(Int u, Int v) {
  if (u == 0 && v == 0) throw std::invalid_argument("covector must be nonzero");
  const Int g = std::gcd(u, v);
  u_ = u / g;
  v_ = v / g;
}

std::string Covector::str() const {
  std::ostringstream os;
  os << '(' << u_ << ',' << v_ << ')';
  return os.str();
}

std::span<const Covector> primary_arrows() {
  static const std::array<Covector, 3> arrows{dir::down, dir::northeast, dir::left};
  return arrows;
}

std::span<const Covector> opposite_arrows() {
  static const std::array<Covector, 3> arrows{dir::up, dir::southwest, dir::right};
  return arrows;
}

bool is_arrow(const Covector& g) {
  for (const auto& a : primary_arrows())
    if (a == g || -a == g) return true;
  return false;
}

LatticeDiagram::LatticeDiagram(std::vector<LatticePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("lattice diagram must be nonempty");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool LatticeDiagram::contains(const LatticePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

LatticePolygon LatticePolygon::hull(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return LatticePolygon(pts);

  // Andrew's monotone chain; collinear points are dropped.
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  // All points collinear: the chain collapses to the two endpoints.
  if (h.size() == 2) return LatticePolygon({pts.front(), pts.back()});
  return LatticePolygon(std::move(h));
}

int LatticePolygon::dim() const {
  if (vertices_.size() == 1) return 0;
  if (vertices_.size() == 2) return 1;
  return 2;
}

std::vector<Face> LatticePolygon::edges() const {
  std::vector<Face> out;
  if (dim() < 2) return out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    out.push_back({Face::Kind::Edge, vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  return out;
}

bool LatticePolygon::contains(const LatticePoint& p) const {
  switch (dim()) {
    case 0:
      return p == vertices_[0];
    case 1: {
      const auto& a = vertices_[0];
      const auto& b = vertices_[1];
      if (cross(a, b, p) != 0) return false;
      return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
             std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
    }
    default:
      for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) < 0) return false;
      return true;
  }
}

LatticePoint LatticePolygon::min_corner() const {
  LatticePoint m = vertices_[0];
  for (const auto& v : vertices_) {
    m.x = std::min(m.x, v.x);
    m.y = std::min(m.y, v.y);
  }
  return m;
}

LatticePoint LatticePolygon::max_corner() const {
  LatticePoint m = vertices_[0];
  for (const auto& v : vertices_) {
    m.x = std::max(m.x, v.x);
    m.y = std::max(m.y, v.y);
  }
  return m;
}

std::vector<LatticePoint> LatticePolygon::lattice_points() const {
  std::vector<LatticePoint> out;
  const auto lo = min_corner();
  const auto hi = max_corner();
  for (Int x = lo.x; x <= hi.x; ++x)
    for (Int y = lo.y; y <= hi.y; ++y)
      if (contains({x, y})) out.push_back({x, y});
  return out;
}

LatticePolygon LatticePolygon::translated(const LatticePoint& t) const {
  std::vector<LatticePoint> v = vertices_;
  for (auto& p : v) p = p + t;
  return LatticePolygon(std::move(v));
}

LatticePolygon LatticePolygon::canonical() const { return translated(-vertices_.front()); }

bool LatticePolygon::is_translate_of(const LatticePolygon& other) const {
  return canonical() == other.canonical();
}

void require_full_dimensional(const LatticePolygon& p, const char* what) {
  if (p.dim() < 2)
    throw DegeneratePolygon(std::string(what) + ": polygon must be two-dimensional");
}

LatticePolygon standard_simplex(Int k) { return LatticePolygon::hull({{0, 0}, {k, 0}, {0, k}}); }

LatticePolygon rectangle(Int c, Int d) {
  return LatticePolygon::hull({{0, 0}, {c, 0}, {c, d}, {0, d}});
}

LatticePolygon quasihomogeneous(Int c, Int d) {
  return LatticePolygon::hull({{0, 0}, {c, 0}, {0, d}});
}

LatticePolygon segment(LatticePoint a, LatticePoint b) { return LatticePolygon::hull({a, b}); }

LatticePolygon convex_hull(std::span<const LatticePoint> points) {
  return LatticePolygon::hull(points);
}

Face support_set(const LatticePolygon& p, const Covector& g) {
  const auto& v = p.vertices();
  Int best = g(v[0]);
  for (const auto& q : v) best = std::max(best, g(q));
  std::vector<LatticePoint> hits;
  for (const auto& q : v)
    if (g(q) == best) hits.push_back(q);
  if (hits.size() == 1) return {Face::Kind::Vertex, hits[0], hits[0]};
  // A strictly convex polygon attains a maximum on at most two vertices, and
  // for dim 2 they are adjacent.
  return {Face::Kind::Edge, hits[0], hits[1]};
}

Int lattice_length(const LatticePoint& a, const LatticePoint& b) {
  return std::gcd(b.x - a.x, b.y - a.y);
}

Int lattice_length(const Face& f) { return f.is_edge() ? lattice_length(f.a, f.b) : 0; }

Int face_length(const LatticePolygon& p, const Covector& g) {
  return lattice_length(support_set(p, g));
}

Int doubled_area(const LatticePolygon& p) {
  const auto& v = p.vertices();
  if (v.size() < 3) return 0;
  Int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return s < 0 ? -s : s;
}

Rational area(const LatticePolygon& p) { return Rational(doubled_area(p), 2); }

Int lattice_perimeter(const LatticePolygon& p) {
  const auto& v = p.vertices();
  if (v.size() == 1) return 0;
  Int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += lattice_length(v[i], v[(i + 1) % v.size()]);
  return s;
}

LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
  auto [ps, pe] = edge_sequence(p);
  auto [qs, qe] = edge_sequence(q);
  std::vector<LatticePoint> out{ps + qs};
  std::size_t i = 0, j = 0;
  while (i < pe.size() || j < qe.size()) {
    LatticePoint step;
    if (j == qe.size() || (i < pe.size() && angle_less(pe[i], qe[j]))) {
      step = pe[i++];
    } else if (i == pe.size() || angle_less(qe[j], pe[i])) {
      step = qe[j++];
    } else {
      step = pe[i++] + qe[j++];
    }
    out.push_back(out.back() + step);
  }
  out.pop_back();  // back at the start
  return LatticePolygon::hull(out);
}

Rational mixed_volume(const LatticePolygon& p, const LatticePolygon& q) {
  return Rational(doubled_area(minkowski_sum(p, q)) - doubled_area(p) - doubled_area(q), 2);
}

LatticePolygon dilate(const LatticePolygon& p, Int k) {
  if (k < 1) throw std::invalid_argument("dilation factor must be positive");
  std::vector<LatticePoint> v = p.vertices();
  for (auto& x : v) x = x * k;
  return LatticePolygon::hull(v);
}

LatticePolygon negate(const LatticePolygon& p) {
  std::vector<LatticePoint> v = p.vertices();
  for (auto& x : v) x = -x;
  return LatticePolygon::hull(v);
}

LatticePoint rotate_r(const LatticePoint& p) { return {p.y, -p.x - p.y}; }

Covector rotate_r(const Covector& g) { return Covector(g.v() - g.u(), -g.u()); }

LatticePolygon rotate_r(const LatticePolygon& p) {
  std::vector<LatticePoint> v = p.vertices();
  for (auto& x : v) x = rotate_r(x);
  return LatticePolygon::hull(v).canonical();
}

LatticePolygon rotate_r(const LatticePolygon& p, int power) {
  LatticePolygon out = p;
  for (int i = 0; i < ((power % 3) + 3) % 3; ++i) out = rotate_r(out);
  return out;
}

namespace {

std::optional<LatticePoint> find_translation(const LatticePolygon& p,
                                             std::span<const LatticePoint> q) {
  LatticePoint qlo = q[0], qhi = q[0];
  for (const auto& x : q) {
    qlo = {std::min(qlo.x, x.x), std::min(qlo.y, x.y)};
    qhi = {std::max(qhi.x, x.x), std::max(qhi.y, x.y)};
  }
  const auto plo = p.min_corner();
  const auto phi = p.max_corner();
  for (Int tx = plo.x - qlo.x; tx <= phi.x - qhi.x; ++tx) {
    for (Int ty = plo.y - qlo.y; ty <= phi.y - qhi.y; ++ty) {
      const LatticePoint t{tx, ty};
      if (std::all_of(q.begin(), q.end(), [&](const auto& x) { return p.contains(x + t); }))
        return t;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<LatticePoint> contains_translate(const LatticePolygon& p, const LatticePolygon& q) {
  return find_translation(p, q.vertices());
}

std::optional<LatticePoint> contains_translate(const LatticePolygon& p, const LatticeDiagram& q) {
  return find_translation(p, q.points());
}

Int boundary_lattice_points(const LatticePolygon& p) {
  switch (p.dim()) {
    case 0:
      return 1;
    case 1:
      return lattice_length(p.vertices()[0], p.vertices()[1]) + 1;
    default:
      return lattice_perimeter(p);
  }
}

Int interior_lattice_points(const LatticePolygon& p) {
  require_full_dimensional(p, "interior_lattice_points");
  // Pick: 2A = 2I + B - 2
  return (doubled_area(p) - lattice_perimeter(p) + 2) / 2;
}

LatticePolygon parse_polygon_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("polygon is not valid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("polygon must be a nonempty JSON array of [x,y] pairs");
  std::vector<LatticePoint> pts;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("polygon entries must be integer pairs [x,y]");
    pts.push_back({e[0].get<Int>(), e[1].get<Int>()});
  }
  return LatticePolygon::hull(pts);
}

std::string to_json_array(const LatticePolygon& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : p.vertices()) j.push_back({v.x, v.y});
  return j.dump();
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator() << '/' << r.denominator();
  return os.str();
}

}  // namespace plucker
