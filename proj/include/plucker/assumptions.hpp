// Tri-state decision of the three genericity assumptions (dual curve has
// only nodes and cusps; no inflections at infinity; degenerate tangent lines
// behave) from combinatorial sufficient conditions on the Newton polygon.
#pragma once

#include "plucker/formulas.hpp"
#include "plucker/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plucker {

enum class Verdict { Verified, Unknown, FailsKnown };
std::string to_string(Verdict v);

/// One fired (or failed) sufficient condition. `direction` is the power of
/// the rotation r the condition was applied through.
struct Evidence {
  std::string condition;
  int direction = 0;
  std::string outcome;
  bool passed = false;
};

/// rotate_r^rotation_power(P) - translation == conv{(1,0),(2,0),(1-k,1+2k)}.
struct ThinTriangleWitness {
  Int k = 0;
  LatticePoint translation;
  int rotation_power = 0;
};

LatticePolygon thin_triangle(Int k);

struct CheckResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<Evidence> evidence;
};

struct AssumptionReport {
  Verdict a1 = Verdict::Unknown;
  Verdict a2 = Verdict::Unknown;
  Verdict a3 = Verdict::Unknown;
  std::optional<ThinTriangleWitness> thin;
  std::vector<Evidence> evidence;

  bool all_verified() const {
    return a1 == Verdict::Verified && a2 == Verdict::Verified && a3 == Verdict::Verified;
  }
};

struct CheckOptions {
  /// Maximum number of candidate subsets the class-Q_d search may evaluate.
  std::size_t budget = 200'000;
  /// Shortcut through "P contains a translate of 5*Delta".
  bool fast_path = true;
};

/// Budget from $PLUCKER_BUDGET when set to a positive integer, else 200000.
std::size_t default_search_budget();

/// Present iff P is a lattice translate of conv{(1,0),(2,0),(1-k,1+2k)}, k >= 0.
std::optional<ThinTriangleWitness> is_thin(const LatticePolygon& p);

/// FailsKnown (with witness) iff one of P, r(P), r^2(P) is thin; never Unknown.
std::pair<Verdict, std::optional<ThinTriangleWitness>> assumption2_holds(const LatticePolygon& p);

/// Delta is a Minkowski summand of the lattice polygon K iff K is
/// two-dimensional and its faces at down, northeast and left are all edges.
bool has_simplex_summand(const LatticePolygon& k);

/// Sufficient criterion for class Q_d: d points, fits in a translate of
/// (d-1)*Delta, and no subset of at least three points has Delta as a
/// Minkowski summand of its hull.
bool is_class_Qd(const LatticeDiagram& q, int d);

struct QdSearchResult {
  std::optional<LatticeDiagram> diagram;
  std::size_t evaluated = 0;
  bool budget_exhausted = false;
};

/// d-point subdiagram of P's lattice points of class Q_d. With a face
/// constraint g the diagram must also satisfy Q^g inside P^g. Segments and
/// staircase shapes are tried before a budgeted exhaustive search.
QdSearchResult find_Qd_subdiagram(const LatticePolygon& p, int d,
                                  std::optional<Covector> face_constraint = std::nullopt,
                                  std::size_t budget = 200'000);

/// Translate of some 5R (R a unimodular lattice parallelogram) inside P.
struct ParallelogramWitness {
  LatticePoint u;
  LatticePoint v;
  LatticePoint translation;
};
std::optional<ParallelogramWitness> find_5R(const LatticePolygon& p);

CheckResult check_assumption1(const LatticePolygon& p, const CheckOptions& opts = {});
CheckResult check_assumption3(const LatticePolygon& p);
AssumptionReport full_assumption_report(const LatticePolygon& p, const CheckOptions& opts = {});

/// Throws std::logic_error if all three assumptions are verified but the
/// bitangent count is not an integer.
void check_bitangent_integrality(const PluckerReport& report, const AssumptionReport& assumptions);

}  // namespace plucker
