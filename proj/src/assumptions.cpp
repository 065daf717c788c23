#include "plucker/assumptions.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace plucker {

namespace {

std::string describe(const std::vector<LatticePoint>& pts) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < pts.size(); ++i)
    os << (i ? "," : "") << '(' << pts[i].x << ',' << pts[i].y << ')';
  os << '}';
  return os.str();
}

std::string describe(const LatticePoint& p) { return describe(std::vector<LatticePoint>{p}); }

// The six lattice symmetries of the standard triangle (up to translation):
// powers of r, optionally followed by the swap of coordinates.
LatticePoint apply_symmetry(int s, LatticePoint p) {
  for (int i = 0; i < s % 3; ++i) p = rotate_r(p);
  if (s >= 3) std::swap(p.x, p.y);
  return p;
}

std::vector<LatticePoint> normalized(std::vector<LatticePoint> pts) {
  LatticePoint lo = pts[0];
  for (const auto& p : pts) lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
  for (auto& p : pts) p = p - lo;
  std::sort(pts.begin(), pts.end());
  return pts;
}

// Shapes that are known to pass the Q_d criterion; tried before brute force.
// The pictured tritangent diagrams and the staircase come first.
std::vector<std::vector<LatticePoint>> templates(int d) {
  std::vector<std::vector<LatticePoint>> out;
  if (d == 6) {
    out.push_back({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}});
    out.push_back({{0, 4}, {1, 3}, {2, 2}, {2, 1}, {2, 0}, {3, 2}});
    out.push_back({{0, 0}, {1, 0}, {2, 0}, {0, 3}, {0, 4}, {0, 5}});
  }
  // Staircase (0,0),(1,0),(1,1),(2,1),...
  std::vector<LatticePoint> stair;
  LatticePoint cur{0, 0};
  for (int i = 0; i < d; ++i) {
    stair.push_back(cur);
    cur = (i % 2 == 0) ? cur + LatticePoint{1, 0} : cur + LatticePoint{0, 1};
  }
  out.push_back(stair);
  // L shapes: a horizontal arm meeting a vertical arm at its right end.
  for (int a = 1; a < d - 1; ++a) {
    const int h = d - 1 - a;
    std::vector<LatticePoint> l;
    for (int i = 0; i <= a; ++i) l.push_back({i, h});
    for (int j = 0; j < h; ++j) l.push_back({a, j});
    out.push_back(l);
  }
  return out;
}

// The four standard Q6 shapes; any other certified diagram is
// reported as coming from the generalized Q6 criterion.
bool is_pictured_Q6(const LatticeDiagram& q) {
  static const std::array<std::vector<LatticePoint>, 4> pictured{{
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}},
      {{0, 4}, {1, 3}, {2, 2}, {2, 1}, {2, 0}, {3, 2}},
      {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}},
      {{0, 0}, {1, 0}, {2, 0}, {0, 3}, {0, 4}, {0, 5}},
  }};
  const auto n = normalized(q.points());
  return std::any_of(pictured.begin(), pictured.end(),
                     [&](const auto& pic) { return normalized(pic) == n; });
}

bool fits_in_simplex(const std::vector<LatticePoint>& pts, Int k) {
  Int minx = pts[0].x, miny = pts[0].y, maxsum = pts[0].x + pts[0].y;
  for (const auto& p : pts) {
    minx = std::min(minx, p.x);
    miny = std::min(miny, p.y);
    maxsum = std::max(maxsum, p.x + p.y);
  }
  return maxsum - minx - miny <= k;
}

bool satisfies_face_constraint(const std::vector<LatticePoint>& q, const LatticePolygon& p,
                               const std::optional<Covector>& g) {
  if (!g) return true;
  const Int pmax = (*g)(support_set(p, *g).a);
  Int qmax = (*g)(q[0]);
  for (const auto& x : q) qmax = std::max(qmax, (*g)(x));
  return qmax == pmax;
}

std::set<Int> ordinates(const LatticePolygon& p) {
  std::set<Int> ys;
  for (const auto& pt : p.lattice_points()) ys.insert(pt.y);
  return ys;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "Verified";
    case Verdict::Unknown:
      return "Unknown";
    case Verdict::FailsKnown:
      return "FailsKnown";
  }
  return "?";
}

std::size_t default_search_budget() {
  if (const char* env = std::getenv("PLUCKER_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200'000;
}

LatticePolygon thin_triangle(Int k) { return LatticePolygon::hull({{1, 0}, {2, 0}, {1 - k, 1 + 2 * k}}); }

std::optional<ThinTriangleWitness> is_thin(const LatticePolygon& p) {
  if (p.size() != 3) return std::nullopt;
  const Face bottom = support_set(p, dir::down);
  if (!bottom.is_edge() || lattice_length(bottom) != 1 || bottom.a.y != bottom.b.y)
    return std::nullopt;
  const LatticePoint left = std::min(bottom.a, bottom.b);
  LatticePoint apex;
  for (const auto& v : p.vertices())
    if (v != bottom.a && v != bottom.b) apex = v;
  const Int rise = apex.y - left.y;
  if (rise < 1 || rise % 2 == 0) return std::nullopt;
  const Int k = (rise - 1) / 2;
  if (apex.x - left.x != -k) return std::nullopt;
  return ThinTriangleWitness{k, left - LatticePoint{1, 0}, 0};
}

std::pair<Verdict, std::optional<ThinTriangleWitness>> assumption2_holds(const LatticePolygon& p) {
  require_full_dimensional(p, "assumption2_holds");
  for (int k = 0; k < 3; ++k) {
    if (auto w = is_thin(rotate_r(p, k))) {
      w->rotation_power = k;
      return {Verdict::FailsKnown, w};
    }
  }
  return {Verdict::Verified, std::nullopt};
}

bool has_simplex_summand(const LatticePolygon& k) {
  if (k.dim() < 2) return false;
  for (const auto& g : primary_arrows())
    if (!support_set(k, g).is_edge()) return false;
  return true;
}

bool is_class_Qd(const LatticeDiagram& q, int d) {
  if (d < 1 || q.size() != static_cast<std::size_t>(d)) return false;
  const auto& pts = q.points();
  if (!fits_in_simplex(pts, d - 1)) return false;
  const unsigned n = static_cast<unsigned>(pts.size());
  std::vector<LatticePoint> sub;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 3) continue;
    sub.clear();
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(pts[i]);
    if (has_simplex_summand(LatticePolygon::hull(sub))) return false;
  }
  return true;
}

QdSearchResult find_Qd_subdiagram(const LatticePolygon& p, int d,
                                  std::optional<Covector> face_constraint, std::size_t budget) {
  QdSearchResult result;
  const auto points = p.lattice_points();
  if (points.size() < static_cast<std::size_t>(d)) return result;

  // Returns true when the search should stop (found or out of budget).
  auto try_candidate = [&](std::vector<LatticePoint> cand) {
    if (result.evaluated >= budget) {
      result.budget_exhausted = true;
      return true;
    }
    ++result.evaluated;
    if (!std::all_of(cand.begin(), cand.end(), [&](const auto& x) { return p.contains(x); }))
      return false;
    if (!satisfies_face_constraint(cand, p, face_constraint)) return false;
    LatticeDiagram q(std::move(cand));
    if (!is_class_Qd(q, d)) return false;
    result.diagram = std::move(q);
    return true;
  };

  // Segments parallel to the three sides of the standard triangle.
  for (const auto& start : points) {
    for (const LatticePoint step : {LatticePoint{1, 0}, LatticePoint{0, 1}, LatticePoint{1, -1}}) {
      std::vector<LatticePoint> cand;
      for (int i = 0; i < d; ++i) cand.push_back(start + step * i);
      if (!p.contains(cand.back())) continue;
      if (try_candidate(std::move(cand))) return result;
    }
  }

  // Templates under the symmetries of the triangle, at every placement.
  std::vector<std::vector<LatticePoint>> shapes;
  std::set<std::vector<LatticePoint>> seen;
  for (const auto& t : templates(d))
    for (int s = 0; s < 6; ++s) {
      std::vector<LatticePoint> img;
      for (const auto& x : t) img.push_back(apply_symmetry(s, x));
      if (seen.insert(normalized(img)).second) shapes.push_back(normalized(img));
    }
  const LatticePoint lo = p.min_corner();
  const LatticePoint hi = p.max_corner();
  for (const auto& shape : shapes) {
    for (Int tx = lo.x; tx <= hi.x; ++tx)
      for (Int ty = lo.y; ty <= hi.y; ++ty) {
        std::vector<LatticePoint> cand;
        for (const auto& x : shape) cand.push_back(x + LatticePoint{tx, ty});
        if (!std::all_of(cand.begin(), cand.end(), [&](const auto& x) { return p.contains(x); }))
          continue;
        if (try_candidate(std::move(cand))) return result;
      }
  }

  // Exhaustive: d-subsets of the lattice points inside each window (d-1)*Delta + w.
  const Int k = d - 1;
  for (Int wx = lo.x - k; wx <= hi.x; ++wx) {
    for (Int wy = lo.y - k; wy <= hi.y; ++wy) {
      std::vector<LatticePoint> window;
      for (const auto& x : points)
        if (x.x >= wx && x.y >= wy && x.x + x.y <= wx + wy + k) window.push_back(x);
      if (window.size() < static_cast<std::size_t>(d)) continue;
      std::vector<std::size_t> idx(d);
      for (int i = 0; i < d; ++i) idx[i] = i;
      while (true) {
        std::vector<LatticePoint> cand;
        for (auto i : idx) cand.push_back(window[i]);
        if (try_candidate(std::move(cand))) return result;
        // Next combination in lexicographic order.
        int i = d - 1;
        while (i >= 0 && idx[i] == window.size() - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return result;
}

std::optional<ParallelogramWitness> find_5R(const LatticePolygon& p) {
  const LatticePoint span = p.max_corner() - p.min_corner();
  const Int diam = std::max(span.x, span.y);
  const Int bound = (diam + 4) / 5;
  for (Int ux = -bound; ux <= bound; ++ux)
    for (Int uy = -bound; uy <= bound; ++uy)
      for (Int vx = -bound; vx <= bound; ++vx)
        for (Int vy = -bound; vy <= bound; ++vy) {
          if (ux * vy - uy * vx != 1) continue;
          const LatticePoint u{ux, uy}, v{vx, vy};
          const auto r5 = LatticePolygon::hull({{0, 0}, u * 5, v * 5, (u + v) * 5});
          if (auto t = contains_translate(p, r5)) return ParallelogramWitness{u, v, *t};
        }
  return std::nullopt;
}

CheckResult check_assumption1(const LatticePolygon& p, const CheckOptions& opts) {
  require_full_dimensional(p, "check_assumption1");
  CheckResult out;
  bool ok = true;
  auto record = [&](std::string cond, int direction, std::string outcome, bool passed) {
    out.evidence.push_back({std::move(cond), direction, std::move(outcome), passed});
    ok = ok && passed;
  };
  auto budget_note = [](const QdSearchResult& r) {
    return r.budget_exhausted ? std::string(" (budget exhausted after ") +
                                    std::to_string(r.evaluated) + " candidates)"
                              : std::string();
  };

  // No tritangents.
  const auto q6 = find_Qd_subdiagram(p, 6, std::nullopt, opts.budget);
  if (q6.diagram) {
    std::string what = "Q6 diagram " + describe(q6.diagram->points());
    if (!is_pictured_Q6(*q6.diagram)) what += " Q6-generalized";
    record("no-tritangents", 0, what, true);
  } else if (auto r = find_5R(p)) {
    record("no-tritangents-5R", 0,
           "5R with R spanned by " + describe(r->u) + "," + describe(r->v) + " at " +
               describe(r->translation),
           true);
  } else {
    record("no-tritangents", 0, "no Q6 diagram and no 5R found" + budget_note(q6), false);
  }

  // A bitangent never touches at an inflection point.
  const auto q5 = find_Qd_subdiagram(p, 5, std::nullopt, opts.budget);
  record("no-inflection-bitangents", 0,
         q5.diagram ? "Q5 diagram " + describe(q5.diagram->points())
                    : "no Q5 diagram found" + budget_note(q5),
         q5.diagram.has_value());

  // Contact order at most 3.
  const auto q4 = find_Qd_subdiagram(p, 4, std::nullopt, opts.budget);
  record("no-higher-inflections", 0,
         q4.diagram ? "Q4 diagram " + describe(q4.diagram->points())
                    : "no Q4 diagram found" + budget_note(q4),
         q4.diagram.has_value());

  for (int k = 0; k < 3; ++k) {
    const LatticePolygon rp = rotate_r(p, k);

    // Tangency at a torus point and at a point of the bottom orbit.
    const Face bottom = support_set(rp, dir::down);
    if (!bottom.is_edge()) {
      record("no-orbit-bitangents", k, "bottom face is a vertex", true);
    } else {
      const Int y0 = bottom.a.y;
      std::map<Int, int> row_count;
      for (const auto& pt : rp.lattice_points()) ++row_count[pt.y];
      const auto row = std::find_if(row_count.begin(), row_count.end(),
                                    [&](const auto& r) { return r.first >= y0 + 2 && r.second >= 2; });
      if (row != row_count.end()) {
        record("no-orbit-bitangents", k,
               "two lattice points at height " + std::to_string(row->first - y0) +
                   " above the bottom edge",
               true);
      } else {
        const auto q = find_Qd_subdiagram(rp, 4, dir::down, opts.budget);
        record("no-orbit-bitangents", k,
               q.diagram ? "Q4 diagram touching the bottom edge " + describe(q.diagram->points())
                         : "no condition applies" + budget_note(q),
               q.diagram.has_value());
      }
    }

    // Tangency at points of two different orbits.
    const bool simplex = p.is_translate_of(standard_simplex());
    record("no-two-orbit-bitangents", k,
           simplex ? "polygon is the standard triangle" : "polygon is not the standard triangle",
           !simplex);

    // No contact of order 3 on the orbits at infinity.
    if (auto w = is_thin(rp)) {
      record("no-inflection-at-infinity", k, "thin triangle, k=" + std::to_string(w->k), false);
    } else {
      record("no-inflection-at-infinity", k, "not a thin triangle", true);
    }
  }

  out.verdict = ok ? Verdict::Verified : Verdict::Unknown;
  return out;
}

CheckResult check_assumption3(const LatticePolygon& p) {
  require_full_dimensional(p, "check_assumption3");
  CheckResult out;
  bool ok = true;
  auto record = [&](std::string cond, int direction, std::string outcome, bool passed) {
    out.evidence.push_back({std::move(cond), direction, std::move(outcome), passed});
    ok = ok && passed;
  };

  for (int k = 0; k < 3; ++k) {
    const LatticePolygon rp = rotate_r(p, k);
    const auto ys = ordinates(rp);
    bool four_in_a_row = false;
    for (Int y : ys)
      if (ys.count(y + 1) && ys.count(y + 2) && ys.count(y + 3)) four_in_a_row = true;
    const Int span = rp.max_corner().y - rp.min_corner().y;

    if (span <= 3) {
      record("no-vertical-bitangents", k, "y-degree " + std::to_string(span), true);
    } else if (four_in_a_row) {
      record("no-vertical-bitangents", k, "four consecutive ordinates", true);
    } else {
      record("no-vertical-bitangents", k, "fewer than four consecutive ordinates", false);
    }

    const bool three_rows = ys.size() >= 3;
    record("no-vertical-inflection-tangents", k,
           std::to_string(ys.size()) + " distinct ordinates", three_rows);

    const bool top_vertex = !support_set(rp, dir::up).is_edge();
    record("no-vertical-asymptote-tangents", k,
           three_rows ? "at least three ordinates"
                      : (top_vertex ? "top face is a vertex" : "neither condition holds"),
           three_rows || top_vertex);
  }
  out.verdict = ok ? Verdict::Verified : Verdict::Unknown;
  return out;
}

AssumptionReport full_assumption_report(const LatticePolygon& p, const CheckOptions& opts) {
  require_full_dimensional(p, "full_assumption_report");
  AssumptionReport report;
  if (opts.fast_path) {
    if (auto t = contains_translate(p, standard_simplex(5))) {
      report.a1 = report.a2 = report.a3 = Verdict::Verified;
      report.evidence.push_back({"contains-5-simplex", 0, "5*Delta at " + describe(*t), true});
      return report;
    }
  }
  auto a1 = check_assumption1(p, opts);
  auto [a2, witness] = assumption2_holds(p);
  auto a3 = check_assumption3(p);
  report.a1 = a1.verdict;
  report.a2 = a2;
  report.a3 = a3.verdict;
  report.thin = witness;
  report.evidence = std::move(a1.evidence);
  report.evidence.push_back(
      {"inflections-at-infinity-classification", witness ? witness->rotation_power : 0,
       witness ? "r^" + std::to_string(witness->rotation_power) + "(P) is thin with k=" +
                     std::to_string(witness->k)
               : "none of P, r(P), r^2(P) is thin",
       !witness});
  for (auto& e : a3.evidence) report.evidence.push_back(std::move(e));
  return report;
}

void check_bitangent_integrality(const PluckerReport& report, const AssumptionReport& assumptions) {
  if (assumptions.all_verified() && report.bitangents.denominator() != 1)
    throw std::logic_error("bitangent count " + to_string(report.bitangents) +
                           " is not integral although all assumptions hold");
}

}  // namespace plucker
