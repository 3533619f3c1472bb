#pragma once

#include <string>
#include <vector>

#include "pick3d/experiments.hpp"

namespace pick3d {

/// Report documents: canonical JSON (sorted keys, two-space indent, trailing
/// newline, no timestamps) wrapped with the tool version and an input
/// digest, so identical inputs produce byte-identical reports. All exact
/// values are strings: integers decimal, rationals "p/q", surds
/// {"coeff","radicand"}; no floating point anywhere.

std::string pick_report_document(const PickReport& report, const std::string& digest,
                                 const std::optional<IntVec3>& declared_normal);

std::string survey_document(const SurveyRecord& record, const IntVec3& raw_normal,
                            const std::string& digest);

/// One row per trial: index, vertex count, doubled-area multiple t, I, B,
/// empirical coefficient "p/q".
std::string survey_csv(const SurveyRecord& record);

std::string reeve_document(const std::vector<ReeveTetrahedron>& rows,
                           const std::string& digest);

/// Bases of one plane: solution pair, orthogonal pair, kernel basis, their
/// areas and sublattice indices. When a == 0 the solution/orthogonal
/// sections are marked inapplicable (the kernel section always prints).
std::string basis_document(const Normal& n, const IntVec3& raw_normal,
                           const std::string& digest);

/// I + B/2 - 1 for bare counts. For the counts (60, 15) the document also
/// carries the source text's value 74 with a discrepancy note.
std::string pick_value_document(const PickCounts& counts, const std::string& digest);

}  // namespace pick3d
