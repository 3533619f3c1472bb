#include "pick3d/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "pick3d/digest.hpp"
#include "pick3d/errors.hpp"
#include "pick3d/polygon_file.hpp"
#include "pick3d/report.hpp"
#include "pick3d/svg.hpp"
#include "pick3d/version.hpp"

namespace pick3d {

namespace {

IntVec3 parse_normal_flag(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) parts.push_back(token);
  if (parts.size() != 3)
    fail(Errc::ParseError, "--normal expects three comma-separated integers");
  return IntVec3{int_from_string(parts[0]), int_from_string(parts[1]),
                 int_from_string(parts[2])};
}

std::pair<Int, Int> parse_r_range(const std::string& text) {
  auto dots = text.find("..");
  Int lo, hi;
  if (dots == std::string::npos) {
    lo = int_from_string(text);
    hi = lo;
  } else {
    lo = int_from_string(text.substr(0, dots));
    hi = int_from_string(text.substr(dots + 2));
  }
  if (lo < 1) fail(Errc::ParseError, "--r values must be >= 1");
  if (hi < lo) fail(Errc::ParseError, "--r range is empty");
  return {lo, hi};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail(Errc::IoError, "cannot write " + out_path);
  f << content;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::DegenerateBasis:
    case Errc::GenerationFailed:
      return 2;
    default:
      return 1;
  }
}

struct Options {
  std::string normal;
  std::string polygon_path;
  std::string out_path;
  std::string csv_path;
  std::string r_range;
  int trials = 30;
  int size = 12;
  int vertices = 6;
  std::int64_t seed = 1;
  std::int64_t interior = 0;
  std::int64_t boundary = 3;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Pick-style analysis of lattice polygons in rational planes of Z^3"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);
  Options opt;

  CLI::App* basis = app.add_subcommand("basis", "bases and areas of one plane lattice");
  basis->add_option("--normal", opt.normal, "plane normal a,b,c")->required();

  CLI::App* check = app.add_subcommand("check", "full reconciliation report for a polygon file");
  check->add_option("file", opt.polygon_path, "polygon JSON file")->required();
  check->add_option("--out", opt.out_path, "write the report here instead of stdout");

  CLI::App* survey = app.add_subcommand("survey", "random-polygon constant survey in one plane");
  survey->add_option("--normal", opt.normal, "plane normal a,b,c")->required();
  survey->add_option("--trials", opt.trials, "number of polygons")->check(CLI::PositiveNumber);
  survey->add_option("--size", opt.size, "chart coordinate bound")->check(CLI::PositiveNumber);
  survey->add_option("--seed", opt.seed, "survey seed");
  survey->add_option("--csv", opt.csv_path, "also write one CSV row per trial");
  survey->add_option("--out", opt.out_path, "write the report here instead of stdout");

  CLI::App* reeve = app.add_subcommand("reeve", "Reeve tetrahedron point counts and volumes");
  reeve->add_option("--r", opt.r_range, "parameter r, a value or inclusive lo..hi")->required();
  reeve->add_option("--out", opt.out_path, "write the report here instead of stdout");

  CLI::App* gen = app.add_subcommand("gen", "generate a random simple lattice polygon file");
  gen->add_option("--normal", opt.normal, "plane normal a,b,c")->required();
  gen->add_option("--size", opt.size, "chart coordinate bound")->check(CLI::PositiveNumber);
  gen->add_option("--vertices", opt.vertices, "exact vertex count")->check(CLI::Range(3, 1 << 20));
  gen->add_option("--seed", opt.seed, "generator seed");
  gen->add_option("--out", opt.out_path, "write the polygon file here instead of stdout");

  CLI::App* render = app.add_subcommand("render", "render a polygon file as a static SVG figure");
  render->add_option("file", opt.polygon_path, "polygon JSON file")->required();
  render->add_option("--out", opt.out_path, "write the SVG here instead of stdout");

  CLI::App* pick = app.add_subcommand("pick", "evaluate I + B/2 - 1 for bare counts");
  pick->add_option("--interior", opt.interior, "interior count I")->required();
  pick->add_option("--boundary", opt.boundary, "boundary count B")->required();
  pick->add_option("--out", opt.out_path, "write the report here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (basis->parsed()) {
      IntVec3 raw = parse_normal_flag(opt.normal);
      Normal n = primitive_normal(raw);
      std::string digest = digest_string("basis;normal=" + opt.normal);
      emit(basis_document(n, raw, digest), opt.out_path, out);
      if (n.a() == 0) {
        err << "DegenerateBasis: solution basis is undefined for a = 0\n";
        return 2;
      }
      return 0;
    }

    if (check->parsed()) {
      std::string bytes = slurp(opt.polygon_path);
      PolygonFile file = parse_polygon_file(bytes);
      LatticePolygon P = to_polygon(file);
      PickReport report = analyze_polygon(P);
      emit(pick_report_document(report, digest_string(bytes), file.normal),
           opt.out_path, out);
      return 0;
    }

    if (survey->parsed()) {
      IntVec3 raw = parse_normal_flag(opt.normal);
      Normal n = primitive_normal(raw);
      SurveyRecord record = constant_survey(n, opt.trials, opt.size,
                                            static_cast<std::uint64_t>(opt.seed));
      std::string digest = digest_string("survey;normal=" + opt.normal +
                                         ";trials=" + std::to_string(opt.trials) +
                                         ";size=" + std::to_string(opt.size) +
                                         ";seed=" + std::to_string(opt.seed));
      emit(survey_document(record, raw, digest), opt.out_path, out);
      if (!opt.csv_path.empty()) emit(survey_csv(record), opt.csv_path, out);
      return 0;
    }

    if (reeve->parsed()) {
      auto [lo, hi] = parse_r_range(opt.r_range);
      std::vector<ReeveTetrahedron> rows;
      for (Int r = lo; r <= hi; ++r) rows.push_back(reeve_report(r));
      std::string digest = digest_string("reeve;r=" + opt.r_range);
      emit(reeve_document(rows, digest), opt.out_path, out);
      return 0;
    }

    if (gen->parsed()) {
      IntVec3 raw = parse_normal_flag(opt.normal);
      Normal n = primitive_normal(raw);
      LatticePolygon P = random_simple_polygon(n, opt.size, opt.vertices,
                                               static_cast<std::uint64_t>(opt.seed));
      PolygonFile file;
      file.vertices = P.vertices();
      file.normal = n.vec();
      file.metadata = {{"generator", std::string(kToolName) + " " + kVersion},
                       {"seed", std::to_string(opt.seed)},
                       {"size_bound", std::to_string(opt.size)},
                       {"target_vertices", std::to_string(opt.vertices)}};
      emit(serialize_polygon_file(file), opt.out_path, out);
      return 0;
    }

    if (render->parsed()) {
      std::string bytes = slurp(opt.polygon_path);
      LatticePolygon P = to_polygon(parse_polygon_file(bytes));
      emit(render_svg(P), opt.out_path, out);
      return 0;
    }

    if (pick->parsed()) {
      PickCounts counts{Int(static_cast<long>(opt.interior)),
                        Int(static_cast<long>(opt.boundary))};
      std::string digest = digest_string("pick;interior=" + std::to_string(opt.interior) +
                                         ";boundary=" + std::to_string(opt.boundary));
      emit(pick_value_document(counts, digest), opt.out_path, out);
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 1;
}

}  // namespace pick3d
