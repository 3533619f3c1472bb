#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pick3d/polygon.hpp"

namespace pick3d {

/// On-disk polygon document. Integers serialize as JSON numbers when they
/// fit 53 bits and as decimal strings otherwise; the reader accepts both.
struct PolygonFile {
  int format_version = 1;
  std::vector<IntVec3> vertices;
  std::optional<IntVec3> normal;
  std::map<std::string, std::string> metadata;
};

/// Throws ParseError on malformed JSON, wrong version, or lossy numbers.
PolygonFile parse_polygon_file(const std::string& text);

/// Deterministic canonical serialization (sorted keys, two-space indent,
/// trailing newline). parse -> serialize is idempotent on its own output.
std::string serialize_polygon_file(const PolygonFile& file);

/// Validates into a LatticePolygon (normal passed through when declared).
LatticePolygon to_polygon(const PolygonFile& file);

}  // namespace pick3d
