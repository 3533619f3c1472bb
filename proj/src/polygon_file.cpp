#include "pick3d/polygon_file.hpp"

#include <json.hpp>

#include "pick3d/errors.hpp"

namespace pick3d {

namespace {

using nlohmann::json;

Int int_from_json(const json& j, const char* where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
    return Int(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return int_from_string(j.get<std::string>());
  if (j.is_number_float())
    fail(Errc::ParseError, std::string(where) +
                               ": number too large for exact JSON parsing; use a decimal string");
  fail(Errc::ParseError, std::string(where) + ": expected integer or decimal string");
}

json int_to_json(const Int& v) {
  if (fits_json_number(v)) return json(static_cast<std::int64_t>(v.get_si()));
  return json(to_string(v));
}

IntVec3 vec_from_json(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 3)
    fail(Errc::ParseError, std::string(where) + ": expected an array of 3 integers");
  return IntVec3{int_from_json(j[0], where), int_from_json(j[1], where),
                 int_from_json(j[2], where)};
}

json vec_to_json(const IntVec3& v) {
  return json::array({int_to_json(v.x), int_to_json(v.y), int_to_json(v.z)});
}

}  // namespace

PolygonFile parse_polygon_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(Errc::ParseError, "top level must be a JSON object");
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer())
    fail(Errc::ParseError, "missing integer format_version");
  PolygonFile file;
  file.format_version = doc["format_version"].get<int>();
  if (file.format_version != 1)
    fail(Errc::ParseError,
         "unsupported format_version " + std::to_string(file.format_version));
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    fail(Errc::ParseError, "missing vertices array");
  for (const json& v : doc["vertices"]) {
    file.vertices.push_back(vec_from_json(v, "vertices"));
  }
  if (file.vertices.size() < 3)
    fail(Errc::ParseError, "vertices array must have at least 3 entries");
  if (doc.contains("normal") && !doc["normal"].is_null()) {
    file.normal = vec_from_json(doc["normal"], "normal");
  }
  if (doc.contains("metadata") && !doc["metadata"].is_null()) {
    if (!doc["metadata"].is_object())
      fail(Errc::ParseError, "metadata must be an object of strings");
    for (auto it = doc["metadata"].begin(); it != doc["metadata"].end(); ++it) {
      if (!it.value().is_string())
        fail(Errc::ParseError, "metadata values must be strings");
      file.metadata[it.key()] = it.value().get<std::string>();
    }
  }
  return file;
}

std::string serialize_polygon_file(const PolygonFile& file) {
  json doc;
  doc["format_version"] = file.format_version;
  json verts = json::array();
  for (const IntVec3& v : file.vertices) verts.push_back(vec_to_json(v));
  doc["vertices"] = std::move(verts);
  if (file.normal) doc["normal"] = vec_to_json(*file.normal);
  if (!file.metadata.empty()) {
    json meta = json::object();
    for (const auto& [k, v] : file.metadata) meta[k] = v;
    doc["metadata"] = std::move(meta);
  }
  return doc.dump(2) + "\n";
}

LatticePolygon to_polygon(const PolygonFile& file) {
  return polygon_from_vertices(file.vertices, file.normal);
}

}  // namespace pick3d
