#pragma once

#include <string>

#include "pick3d/polygon.hpp"

namespace pick3d {

/// Static SVG 1.1 figure of the polygon in chart coordinates: outline,
/// boundary lattice points (open markers), interior lattice points (filled
/// markers), and an "I = ..., B = ..." caption. Deterministic, all-integer
/// geometry, no timestamps.
std::string render_svg(const LatticePolygon& P);

}  // namespace pick3d
