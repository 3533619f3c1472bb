#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pick3d/counting.hpp"
#include "pick3d/rng.hpp"

namespace pick3d {

/// The closed-form plane constant k = (a^3 + a*b^2) * sqrt(a^2+b^2+c^2).
/// zero_constant flags a == 0, where k = 0 and the area identity it feeds
/// degenerates; surfaced rather than hidden.
struct FormulaConstant {
  SurdValue value;
  bool zero_constant;
};

FormulaConstant formula_constant(const Normal& n);

/// k * (I + B/2 - 1) with oracle counts: the area the closed-form constant
/// predicts. May or may not equal polygon_area; both are reported.
SurdValue predicted_area(const LatticePolygon& P, const PickCounts& counts);
SurdValue predicted_area(const LatticePolygon& P);

/// polygon_area / (I + B/2 - 1): the unique constant making the area
/// identity hold for this polygon. Throws DegeneratePickValue when the
/// Pick value is zero.
SurdValue empirical_constant(const LatticePolygon& P, const PickCounts& counts);
SurdValue empirical_constant(const LatticePolygon& P);

/// Per-polygon reconciliation record.
struct PickReport {
  std::size_t vertex_count;
  Normal normal;
  Int offset;
  PickCounts counts;
  Rat pick;
  SurdValue area_exact;
  SurdValue k_formula;
  bool k_formula_zero;
  SurdValue area_formula;
  SurdValue k_empirical;
  SurdValue covolume;
  bool formula_match;
  bool covolume_match;
  std::optional<Rat> formula_ratio;
};

PickReport analyze_polygon(const LatticePolygon& P);

/// Deterministic in all arguments. Samples distinct chart points, takes
/// their convex hull, then trims or dents (inward lattice notches,
/// re-validated exactly) until the polygon has exactly target_vertices.
/// Throws GenerationFailed when the box cannot support the request.
LatticePolygon random_simple_polygon(const Normal& n, int size_bound,
                                     int target_vertices, std::uint64_t seed);

struct SurveyTrial {
  int index;
  std::size_t vertex_count;
  Int area_multiple;
  PickCounts counts;
  Rat empirical_coeff;
};

struct SurveyRecord {
  Normal normal;
  int trials;
  int size_bound;
  std::uint64_t seed;
  bool formula_applicable;  // a != 0
  SurdValue k_formula;
  SurdValue covolume;
  bool all_equal;
  std::optional<SurdValue> common_constant;
  std::optional<Rat> formula_ratio;  // k_formula / common constant, when defined
  bool covolume_match;
  std::vector<SurveyTrial> rows;
};

/// trials random polygons in plane n; exact per-trial empirical constants,
/// their common value (when constant), the closed-form constant, the kernel
/// covolume, and the exact ratio between the two constants.
SurveyRecord constant_survey(const Normal& n, int trials, int size_bound,
                             std::uint64_t seed);

/// Reeve tetrahedron (0,0,0), (1,0,0), (0,1,0), (1,1,r): total lattice
/// points by exhaustive box scan with exact half-space tests, volume r/6.
struct ReeveTetrahedron {
  Int r;
  std::array<IntVec3, 4> vertices;
  Int total_lattice_points;
  Rat volume;
};

ReeveTetrahedron reeve_report(const Int& r);

}  // namespace pick3d
