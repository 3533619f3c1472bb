#include "pick3d/report.hpp"

#include <json.hpp>

#include "pick3d/version.hpp"

namespace pick3d {

namespace {

using nlohmann::json;

json j_int(const Int& v) { return json(to_string(v)); }
json j_rat(const Rat& v) { return json(to_string(v)); }

json j_surd(const SurdValue& s) {
  return json{{"coeff", to_string(s.coeff())},
              {"radicand", to_string(s.radicand())},
              {"value", s.str()}};
}

json j_vec(const IntVec3& v) {
  return json::array({to_string(v.x), to_string(v.y), to_string(v.z)});
}

std::string envelope(const char* type, const std::string& digest, json body) {
  json doc{{"digest", digest},
           {"tool", std::string(kToolName) + " " + kVersion},
           {"type", type},
           {"report", std::move(body)}};
  return doc.dump(2) + "\n";
}

json counts_json(const PickCounts& counts) {
  return json{{"interior", j_int(counts.interior)}, {"boundary", j_int(counts.boundary)}};
}

// The worked example with I=60, B=15: its source text computes I + B - 1;
// the formula gives I + B/2 - 1. Both are recorded, no position taken.
void maybe_annotate_text_value(json& body, const PickCounts& counts) {
  if (counts.interior == 60 && counts.boundary == 15) {
    body["text_value"] = "74";
    body["note"] =
        "source text evaluates these counts as I + B - 1 = 74; "
        "the formula I + B/2 - 1 gives 133/2";
  }
}

}  // namespace

std::string pick_report_document(const PickReport& report, const std::string& digest,
                                 const std::optional<IntVec3>& declared_normal) {
  json body{
      {"polygon",
       json{{"vertex_count", report.vertex_count},
            {"normal", j_vec(report.normal.vec())},
            {"offset", j_int(report.offset)}}},
      {"counts", counts_json(report.counts)},
      {"pick_value", j_rat(report.pick)},
      {"area_exact", j_surd(report.area_exact)},
      {"k_formula", j_surd(report.k_formula)},
      {"k_formula_zero", report.k_formula_zero},
      {"area_formula", j_surd(report.area_formula)},
      {"k_empirical", j_surd(report.k_empirical)},
      {"covolume", j_surd(report.covolume)},
      {"verdicts",
       json{{"formula_match", report.formula_match},
            {"covolume_match", report.covolume_match}}},
  };
  if (declared_normal) body["polygon"]["normal_declared"] = j_vec(*declared_normal);
  body["formula_ratio"] =
      report.formula_ratio ? json(to_string(*report.formula_ratio)) : json(nullptr);
  maybe_annotate_text_value(body, report.counts);
  return envelope("pick_report", digest, std::move(body));
}

std::string survey_document(const SurveyRecord& record, const IntVec3& raw_normal,
                            const std::string& digest) {
  json rows = json::array();
  for (const SurveyTrial& t : record.rows) {
    rows.push_back(json{{"index", t.index},
                        {"vertices", t.vertex_count},
                        {"t", j_int(t.area_multiple)},
                        {"interior", j_int(t.counts.interior)},
                        {"boundary", j_int(t.counts.boundary)},
                        {"empirical_coeff", j_rat(t.empirical_coeff)}});
  }
  json body{
      {"normal_raw", j_vec(raw_normal)},
      {"normal", j_vec(record.normal.vec())},
      {"trials", record.trials},
      {"size_bound", record.size_bound},
      {"seed", std::to_string(record.seed)},
      {"formula_applicable", record.formula_applicable},
      {"k_formula", j_surd(record.k_formula)},
      {"covolume", j_surd(record.covolume)},
      {"all_equal", record.all_equal},
      {"empirical_constant",
       record.common_constant ? j_surd(*record.common_constant) : json(nullptr)},
      {"formula_ratio",
       record.formula_ratio ? json(to_string(*record.formula_ratio)) : json(nullptr)},
      {"covolume_match", record.covolume_match},
      {"rows", std::move(rows)},
  };
  return envelope("survey", digest, std::move(body));
}

std::string survey_csv(const SurveyRecord& record) {
  std::string out = "index,vertices,t,interior,boundary,empirical_coeff\n";
  for (const SurveyTrial& t : record.rows) {
    out += std::to_string(t.index);
    out += ',';
    out += std::to_string(t.vertex_count);
    out += ',';
    out += to_string(t.area_multiple);
    out += ',';
    out += to_string(t.counts.interior);
    out += ',';
    out += to_string(t.counts.boundary);
    out += ',';
    out += to_string(t.empirical_coeff);
    out += '\n';
  }
  return out;
}

std::string reeve_document(const std::vector<ReeveTetrahedron>& rows,
                           const std::string& digest) {
  json arr = json::array();
  for (const ReeveTetrahedron& t : rows) {
    json verts = json::array();
    for (const IntVec3& v : t.vertices) verts.push_back(j_vec(v));
    arr.push_back(json{{"r", j_int(t.r)},
                       {"vertices", std::move(verts)},
                       {"lattice_points", j_int(t.total_lattice_points)},
                       {"volume", j_rat(t.volume)}});
  }
  return envelope("reeve", digest, json{{"rows", std::move(arr)}});
}

std::string basis_document(const Normal& n, const IntVec3& raw_normal,
                           const std::string& digest) {
  PlaneLattice L = kernel_basis(n);
  json body{
      {"normal_raw", j_vec(raw_normal)},
      {"normal", j_vec(n.vec())},
      {"kernel_basis",
       json{{"b1", j_vec(L.b1)},
            {"b2", j_vec(L.b2)},
            {"covolume", j_surd(L.covolume)},
            {"index", "1"}}},
  };
  if (n.a() != 0) {
    auto [alpha, beta] = solution_basis(n);
    auto [eta1, eta2] = orthogonal_basis(n);
    body["solution_basis"] =
        json{{"alpha", j_vec(alpha)},
             {"beta", j_vec(beta)},
             {"area", j_surd(parallelogram_area(n, alpha, beta))},
             {"index", to_string(sublattice_index(L, alpha, beta))}};
    body["orthogonal_basis"] =
        json{{"eta1", j_vec(eta1)},
             {"eta2", j_vec(eta2)},
             {"area", j_surd(parallelogram_area(n, eta1, eta2))},
             {"index", to_string(sublattice_index(L, eta1, eta2))}};
    body["formula_applicable"] = true;
  } else {
    body["solution_basis"] = json(nullptr);
    body["orthogonal_basis"] = json(nullptr);
    body["formula_applicable"] = false;
  }
  return envelope("basis", digest, std::move(body));
}

std::string pick_value_document(const PickCounts& counts, const std::string& digest) {
  json body{{"counts", counts_json(counts)},
            {"pick_value", j_rat(pick_value(counts))}};
  maybe_annotate_text_value(body, counts);
  return envelope("pick_value", digest, std::move(body));
}

}  // namespace pick3d
