// Acceptance run: one PASS/FAIL line per criterion, each with its time
// budget. Exits nonzero if any criterion fails.
#include "plucker/assumptions.hpp"
#include "plucker/formulas.hpp"
#include "plucker/oracle.hpp"
#include "test_util.hpp"

#include <chrono>
#include <complex>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace plucker;

namespace {

// Collects the first few failures of a criterion.
struct Check {
  int failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) detail << (failures > 1 ? "; " : "") << what;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

std::string str(const LatticePolygon& p) { return to_json_array(p); }

void classical(Check& c) {
  for (Int d = 5; d <= 10; ++d) {
    const auto p = standard_simplex(d);
    c.expect(inflection_count(p) == 3 * d * (d - 2), "inflections of " + std::to_string(d) + "Delta");
    c.expect(bitangent_count(p) == Rational(d * (d + 3) * (d - 3) * (d - 2), 2),
             "bitangents of " + std::to_string(d) + "Delta");
  }
}

void rectangles(Check& c) {
  for (Int a = 1; a <= 8; ++a)
    for (Int b = 1; b <= 8; ++b) {
      const auto r = rectangle(a, b);
      const std::string tag = "rect " + std::to_string(a) + "x" + std::to_string(b);
      c.expect(inflection_count(r) == 6 * a * b - 3 * a - 3 * b, tag + " inflections");
      c.expect(bitangent_count(r) == Rational(2 * a * a * b * b - 10 * a * b + 4 * a + 4 * b), tag + " bitangents");
      c.expect(dual_polygon(r).is_translate_of(standard_simplex(2 * a * b)), tag + " dual polygon");
    }
}

void quasihomogeneous_table(Check& c) {
  for (Int a = 1; a <= 8; ++a)
    for (Int b = 1; b <= 8; ++b) {
      if (a == b) continue;
      const auto q = quasihomogeneous(a, b);
      const std::string tag = "quasihomogeneous " + std::to_string(a) + "," + std::to_string(b);
      c.expect(inflection_count(q) == 3 * a * b - 2 * a - 2 * b, tag + " inflections");
      c.expect(bitangent_count(q) == Rational(a * a * b * b - 11 * a * b + 6 * a + 6 * b, 2), tag + " bitangents");
      const auto expected = LatticePolygon::hull({{a, 0}, {0, b}, {0, a * b}, {a * b, 0}});
      c.expect(dual_polygon(q).is_translate_of(expected), tag + " dual polygon");
    }
}

void golden(Check& c) {
  const auto p = LatticePolygon::hull({{0, 0}, {0, 1}, {1, 1}});
  WeightedFan fan;
  fan.add(Covector(0, -1), 2);
  fan.add(Covector(1, 1), 1);
  fan.add(Covector(-1, 1), 1);
  c.expect(dual_fan(p) == fan, "dual fan");
  const auto predicted = dual_polygon(p);
  c.expect(predicted.is_translate_of(LatticePolygon::hull({{0, 0}, {2, 0}, {1, 1}})), "dual polygon");

  SparsePoly f;
  f.add_term({1, 1}, 1);
  f.add_term({0, 1}, 1);
  f.add_term({0, 0}, 1);
  OracleConfig cfg;
  cfg.seed = 1;
  const auto res = implicitize_dual(f, predicted, cfg);
  c.expect(res.kernel_dimension == 1, "kernel dimension " + std::to_string(res.kernel_dimension));
  c.expect(res.matches(), "observed polygon differs from the prediction");
  // a^2 + 4ab - 2a + 1
  const std::map<LatticePoint, double> expected{{{2, 0}, 1}, {{1, 1}, 4}, {{1, 0}, -2}, {{0, 0}, 1}};
  c.expect(res.coefficients.size() == expected.size(), "support size");
  if (!res.coefficients.contains({0, 0})) return;
  const std::complex<double> unit = res.coefficients.at({0, 0});
  for (const auto& [e, v] : expected) {
    const auto it = res.coefficients.find(e);
    const double err = it == res.coefficients.end() ? 1.0 : std::abs(it->second / unit - v) / std::abs(v);
    c.expect(err < 1e-6, "coefficient of a^" + std::to_string(e.x) + " b^" + std::to_string(e.y));
  }
}

void dual_area(Check& c) {
  std::mt19937_64 rng(5005);
  for (int i = 0; i < 200; ++i) {
    const auto p = testing::random_polygon(rng, 10, 8);
    c.expect(dual_area_formula(p) == area(dual_polygon(p)), "closed dual area of " + str(p));
    c.expect(dual_fan(p).balanced(), "unbalanced fan for " + str(p));
  }
}

void oracle_agreement(Check& c) {
  std::mt19937_64 rng(606);
  const std::vector<LatticePolygon> polygons{standard_simplex(5), standard_simplex(6), rectangle(3, 4),
                                             rectangle(5, 5), testing::random_polygon_over_5simplex(rng, 6)};
  for (const auto& p : polygons) {
    c.expect(full_assumption_report(p).all_verified(), "assumptions not verified for " + str(p));
    for (std::uint64_t seed : {1u, 2u}) {
      OracleConfig cfg;
      cfg.seed = seed;
      const std::string tag = str(p) + " seed " + std::to_string(seed);
      try {
        const Int infl = inflection_oracle(p, cfg);
        c.expect(infl == inflection_count(p), tag + ": inflection oracle " + std::to_string(infl));
        const Int vert = vertical_tangent_oracle(p, cfg);
        const Int expected = doubled_area(p) - face_length(p, Covector(0, -1)) - face_length(p, Covector(0, 1));
        c.expect(vert == expected, tag + ": vertical oracle " + std::to_string(vert));
      } catch (const RetriesExhausted& e) {
        c.expect(false, tag + ": " + e.what());
      }
    }
  }
}

void battery(Check& c) {
  c.expect(full_assumption_report(standard_simplex(5)).all_verified(), "5Delta");
  c.expect(full_assumption_report(rectangle(3, 4)).all_verified(), "[0,3]x[0,4]");
  c.expect(full_assumption_report(LatticePolygon::hull({{0, 3}, {1, 0}, {2, 0}})).a2 == Verdict::FailsKnown,
           "conv{(0,3),(1,0),(2,0)}");
  for (Int k = 0; k <= 5; ++k)
    c.expect(full_assumption_report(thin_triangle(k)).a2 == Verdict::FailsKnown, "thin triangle k=" + std::to_string(k));
  std::mt19937_64 rng(707);
  CheckOptions slow;
  slow.fast_path = false;
  for (int i = 0; i < 50; ++i) {
    const auto p = testing::random_polygon_over_5simplex(rng);
    c.expect(full_assumption_report(p, slow).all_verified(), "without fast path: " + str(p));
  }
}

void summands(Check& c) {
  const auto pts = standard_simplex(3).lattice_points();
  const unsigned n = static_cast<unsigned>(pts.size());
  // Every lattice polygon inside 3*Delta is the hull of a subset of its
  // points, so these sums are all M + Delta with M inside 3*Delta.
  std::set<std::vector<LatticePoint>> sums;
  std::vector<LatticePolygon> hulls;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<LatticePoint> s;
    for (unsigned i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(pts[i]);
    hulls.push_back(LatticePolygon::hull(s));
    sums.insert(minkowski_sum(hulls.back(), standard_simplex(1)).vertices());
  }
  for (const auto& k : hulls) {
    // M + Delta = K forces M inside K, which lies in 3*Delta.
    const bool brute = sums.contains(k.vertices());
    c.expect(has_simplex_summand(k) == brute, "summand test on " + str(k));
  }
}

void rotation(Check& c) {
  std::mt19937_64 rng(909);
  for (int i = 0; i < 50; ++i) {
    const auto p = testing::random_polygon(rng);
    const auto q = rotate_r(p);
    c.expect(inflection_count(q) == inflection_count(p), "inflections of r(" + str(p) + ")");
    c.expect(bitangent_count(q) == bitangent_count(p), "bitangents of r(" + str(p) + ")");
    c.expect(doubled_area(q) == doubled_area(p), "area of r(" + str(p) + ")");
    c.expect(rotate_r(p, 3).is_translate_of(p), "r^3 of " + str(p));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "classical Plucker counts for d*Delta, d=5..10", 1, classical},
      {2, "rectangle table, 1<=c,d<=8", 1, rectangles},
      {3, "quasihomogeneous table, 1<=c!=d<=8", 1, quasihomogeneous_table},
      {4, "xy+y+1: dual fan, dual polygon and implicit dual equation", 1, golden},
      {5, "dual area closed form vs dual polygon on 200 random polygons", 10, dual_area},
      {6, "oracle counts agree with formulas on verified polygons", 300, oracle_agreement},
      {7, "assumption battery", 30, battery},
      {8, "Delta-summand test vs brute force on subsets of 3*Delta", 30, summands},
      {9, "rotation invariance on 50 random polygons", 1, rotation},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.budget_seconds)
      check.expect(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(cr.budget_seconds) + " s");
    const bool ok = check.failures == 0;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " (" << secs << " s)";
    if (!ok) std::cout << " -- " << check.failures << " failure(s): " << check.detail.str();
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
