#include "pick3d/experiments.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pick3d/errors.hpp"

namespace pick3d {

FormulaConstant formula_constant(const Normal& n) {
  // Canonical orientation makes a >= 0, so the coefficient is never negative.
  Int coeff = n.a() * n.a() * n.a() + n.a() * n.b() * n.b();
  return FormulaConstant{SurdValue(Rat(coeff), n.norm_sq()), n.a() == 0};
}

SurdValue predicted_area(const LatticePolygon& P, const PickCounts& counts) {
  Rat pick = pick_value(counts);
  if (pick < 0)
    fail(Errc::InternalInconsistency, "negative Pick value for a valid polygon");
  return formula_constant(P.normal()).value.times(pick);
}

SurdValue predicted_area(const LatticePolygon& P) {
  PlaneLattice L = kernel_basis(P.normal());
  return predicted_area(P, oracle_counts(P, L));
}

SurdValue empirical_constant(const LatticePolygon& P, const PickCounts& counts) {
  Rat pick = pick_value(counts);
  if (pick == 0)
    fail(Errc::DegeneratePickValue, "I + B/2 - 1 is zero; constant undefined");
  if (pick < 0)
    fail(Errc::InternalInconsistency, "negative Pick value for a valid polygon");
  return polygon_area(P).divided_by(pick);
}

SurdValue empirical_constant(const LatticePolygon& P) {
  PlaneLattice L = kernel_basis(P.normal());
  return empirical_constant(P, oracle_counts(P, L));
}

PickReport analyze_polygon(const LatticePolygon& P) {
  PlaneLattice L = kernel_basis(P.normal());
  PickCounts counts = oracle_counts(P, L);
  FormulaConstant k = formula_constant(P.normal());
  SurdValue area = polygon_area(P);
  SurdValue area_formula = predicted_area(P, counts);
  SurdValue k_emp = empirical_constant(P, counts);

  PickReport report{
      P.size(),
      P.normal(),
      P.offset(),
      counts,
      pick_value(counts),
      area,
      k.value,
      k.zero_constant,
      area_formula,
      k_emp,
      L.covolume,
      area_formula == area,
      k_emp == L.covolume,
      std::nullopt,
  };
  if (!k.zero_constant) report.formula_ratio = surd_ratio(k.value, k_emp);
  return report;
}

namespace {

// Strict convex hull (extreme points only, CCW), Andrew's monotone chain.
std::vector<IntVec2> convex_hull(std::vector<IntVec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const IntVec2& a, const IntVec2& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.w < b.w;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return {};
  std::vector<IntVec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper
    while (k >= lower && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) return {};
  return hull;
}

struct Vec2Less {
  bool operator()(const IntVec2& a, const IntVec2& b) const {
    if (a.u != b.u) return a.u < b.u;
    return a.w < b.w;
  }
};

// One inward lattice notch on edge hull[e] -> hull[e+1]: replaces the edge
// by two edges through an off-edge copy of one of its interior lattice
// points. Returns false when the edge has no interior point or every
// candidate breaks simplicity.
bool try_dent(std::vector<IntVec2>& coords, std::size_t e, SplitMix64& rng) {
  const std::size_t n = coords.size();
  const IntVec2& p = coords[e];
  const IntVec2& q = coords[(e + 1) % n];
  Int du = q.u - p.u, dw = q.w - p.w;
  Int g = gcd3(du, dw, Int(0));
  if (g < 2) return false;
  Int su = du / g, sw = dw / g;
  std::uint64_t gg = g.get_ui() > 64 ? 64 : g.get_ui();
  std::uint64_t j0 = 1 + rng.below(gg - 1);
  for (std::uint64_t probe = 0; probe < gg - 1; ++probe) {
    Int j((static_cast<unsigned long>((j0 - 1 + probe) % (gg - 1))) + 1);
    // Interior of a CCW polygon is to the left of the edge; one lattice step
    // left of direction (su,sw) is (-sw,su).
    IntVec2 m{p.u + j * su - sw, p.w + j * sw + su};
    std::vector<IntVec2> candidate;
    candidate.reserve(n + 1);
    candidate.insert(candidate.end(), coords.begin(), coords.begin() + static_cast<long>(e) + 1);
    candidate.push_back(m);
    candidate.insert(candidate.end(), coords.begin() + static_cast<long>(e) + 1, coords.end());
    if (is_simple(candidate) && shoelace_doubled(candidate) != 0) {
      coords = std::move(candidate);
      return true;
    }
  }
  return false;
}

}  // namespace

LatticePolygon random_simple_polygon(const Normal& n, int size_bound,
                                     int target_vertices, std::uint64_t seed) {
  if (size_bound < 1) throw std::invalid_argument("size_bound must be >= 1");
  if (target_vertices < 3) throw std::invalid_argument("target_vertices must be >= 3");

  const std::uint64_t side = 2 * static_cast<std::uint64_t>(size_bound) + 1;
  if (side * side < static_cast<std::uint64_t>(target_vertices))
    fail(Errc::GenerationFailed, "box of side " + std::to_string(side) +
                                     " cannot hold " + std::to_string(target_vertices) +
                                     " distinct vertices");

  PlaneLattice L = kernel_basis(n);
  SplitMix64 rng(seed);
  const int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    // Distinct random chart points in [-size_bound, size_bound]^2.
    std::set<IntVec2, Vec2Less> sample;
    std::size_t want = static_cast<std::size_t>(target_vertices) + 4;
    want = std::min<std::size_t>(want, side * side);
    for (int guard = 0; sample.size() < want && guard < 10000; ++guard) {
      sample.insert(IntVec2{Int(rng.range(-size_bound, size_bound)),
                            Int(rng.range(-size_bound, size_bound))});
    }
    std::vector<IntVec2> coords =
        convex_hull(std::vector<IntVec2>(sample.begin(), sample.end()));
    if (coords.size() < 3) continue;

    // Removing a hull vertex keeps the rest in convex position, so the
    // polygon stays simple.
    while (coords.size() > static_cast<std::size_t>(target_vertices)) {
      std::size_t victim = rng.below(coords.size());
      coords.erase(coords.begin() + static_cast<long>(victim));
    }

    bool stuck = false;
    while (coords.size() < static_cast<std::size_t>(target_vertices) && !stuck) {
      stuck = true;
      std::size_t start = rng.below(coords.size());
      for (std::size_t off = 0; off < coords.size(); ++off) {
        if (try_dent(coords, (start + off) % coords.size(), rng)) {
          stuck = false;
          break;
        }
      }
    }
    if (coords.size() != static_cast<std::size_t>(target_vertices)) continue;

    std::vector<IntVec3> vertices;
    vertices.reserve(coords.size());
    for (const IntVec2& c : coords) {
      vertices.push_back(c.u * L.b1 + c.w * L.b2);
    }
    try {
      return polygon_from_vertices(std::move(vertices), n.vec());
    } catch (const Error&) {
      continue;
    }
  }
  fail(Errc::GenerationFailed, "no valid polygon after " + std::to_string(kAttempts) +
                                   " rounds (size_bound " + std::to_string(size_bound) +
                                   ", target " + std::to_string(target_vertices) + ")");
}

SurveyRecord constant_survey(const Normal& n, int trials, int size_bound,
                             std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (size_bound < 1) throw std::invalid_argument("size_bound must be >= 1");

  PlaneLattice L = kernel_basis(n);
  FormulaConstant k = formula_constant(n);

  SurveyRecord record{n,
                      trials,
                      size_bound,
                      seed,
                      !k.zero_constant,
                      k.value,
                      L.covolume,
                      true,
                      std::nullopt,
                      std::nullopt,
                      false,
                      {}};

  // Per-trial seeds and vertex targets come off one master stream, so trial
  // i is reproducible regardless of how the trials are executed.
  SplitMix64 master(seed);
  std::vector<std::pair<std::uint64_t, int>> plans;
  plans.reserve(static_cast<std::size_t>(trials));
  for (int i = 0; i < trials; ++i) {
    std::uint64_t trial_seed = master.next();
    int target = 3 + static_cast<int>(master.below(8));
    plans.emplace_back(trial_seed, target);
  }

  std::optional<SurdValue> common;
  for (int i = 0; i < trials; ++i) {
    LatticePolygon P =
        random_simple_polygon(n, size_bound, plans[static_cast<std::size_t>(i)].second,
                              plans[static_cast<std::size_t>(i)].first);
    PickCounts counts = oracle_counts(P, L);
    SurdValue emp = empirical_constant(P, counts);
    if (!common) {
      common = emp;
    } else if (!(*common == emp)) {
      record.all_equal = false;
    }
    record.rows.push_back(SurveyTrial{i, P.size(), P.area_multiple(), counts,
                                      Rat(emp.coeff())});
  }

  if (record.all_equal) {
    record.common_constant = common;
    record.covolume_match = *common == L.covolume;
    if (record.formula_applicable) record.formula_ratio = surd_ratio(k.value, *common);
  }
  return record;
}

ReeveTetrahedron reeve_report(const Int& r) {
  if (r < 1) fail(Errc::InvalidR, "Reeve parameter must be a positive integer");
  std::array<IntVec3, 4> vs = {IntVec3{Int(0), Int(0), Int(0)},
                               IntVec3{Int(1), Int(0), Int(0)},
                               IntVec3{Int(0), Int(1), Int(0)},
                               IntVec3{Int(1), Int(1), r}};

  // orient(a,b,c,d): sign of det(b-a, c-a, d-a).
  auto orient3 = [](const IntVec3& a, const IntVec3& b, const IntVec3& c,
                    const IntVec3& d) { return sign_of(dot(cross(b - a, c - a), d - a)); };

  struct Face {
    int i0, i1, i2, opp;
  };
  const std::array<Face, 4> faces = {Face{1, 2, 3, 0}, Face{0, 2, 3, 1},
                                     Face{0, 1, 3, 2}, Face{0, 1, 2, 3}};
  std::array<int, 4> ref{};
  for (std::size_t f = 0; f < 4; ++f) {
    ref[f] = orient3(vs[static_cast<std::size_t>(faces[f].i0)],
                     vs[static_cast<std::size_t>(faces[f].i1)],
                     vs[static_cast<std::size_t>(faces[f].i2)],
                     vs[static_cast<std::size_t>(faces[f].opp)]);
  }

  Int count = 0;
  for (Int x = 0; x <= 1; ++x) {
    for (Int y = 0; y <= 1; ++y) {
      for (Int z = 0; z <= r; ++z) {
        IntVec3 p{x, y, z};
        bool in = true;
        for (std::size_t f = 0; f < 4 && in; ++f) {
          int s = orient3(vs[static_cast<std::size_t>(faces[f].i0)],
                          vs[static_cast<std::size_t>(faces[f].i1)],
                          vs[static_cast<std::size_t>(faces[f].i2)], p);
          if (s != 0 && s != ref[f]) in = false;
        }
        if (in) ++count;
      }
    }
  }

  Rat volume = make_rat(r, Int(6));
  return ReeveTetrahedron{r, vs, count, volume};
}

}  // namespace pick3d
