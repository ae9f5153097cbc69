#include "ptgeom/checks.hpp"
#include "ptgeom/cone.hpp"
#include "ptgeom/invariants.hpp"
#include "ptgeom/lattice.hpp"
#include "ptgeom/perm.hpp"
#include "ptgeom/ptsum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ptgeom::LatticePointSet;
using ptgeom::Permutation;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Permutation> wreath_2_3() {
  return {Permutation::from_cycles(6, {{1, 2}}),
          Permutation::from_cycles(6, {{3, 4}}),
          Permutation::from_cycles(6, {{5, 6}}),
          Permutation::from_cycles(6, {{1, 3}, {2, 4}}),
          Permutation::from_cycles(6, {{3, 5}, {4, 6}})};
}

std::vector<Permutation> symmetric_6() {
  return {Permutation::from_cycles(6, {{1, 2}}),
          Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}})};
}

std::vector<Permutation> wreath_3_4() {
  return {Permutation::from_cycles(12, {{1, 2}}),
          Permutation::from_cycles(12, {{2, 3}}),
          Permutation::from_cycles(12, {{4, 5}}),
          Permutation::from_cycles(12, {{5, 6}}),
          Permutation::from_cycles(12, {{7, 8}}),
          Permutation::from_cycles(12, {{8, 9}}),
          Permutation::from_cycles(12, {{10, 11}}),
          Permutation::from_cycles(12, {{11, 12}}),
          Permutation::from_cycles(12, {{1, 4}, {2, 5}, {3, 6}}),
          Permutation::from_cycles(12, {{4, 7}, {5, 8}, {6, 9}}),
          Permutation::from_cycles(12, {{7, 10}, {8, 11}, {9, 12}})};
}

LatticePointSet named_orbit(const std::string& target) {
  if (target == "weight-perm")
    return ptgeom::orbit_points({0, 0, 1, 1, 2, 2}, symmetric_6());
  if (target == "newton-c")
    return ptgeom::orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  if (target == "newton-sl4")
    return ptgeom::orbit_points({0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1},
                                wreath_3_4());
  throw CLI::ValidationError("--target", "unknown polytope: " + target);
}

nlohmann::ordered_json points_json(const LatticePointSet& pts) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : pts.points) arr.push_back(p);
  return arr;
}

void emit(const nlohmann::ordered_json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

std::vector<ptgeom::QVec> parse_seed_points(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array() || j.empty())
    throw std::runtime_error("seed-points file must be a nonempty JSON array");
  std::vector<ptgeom::QVec> pts;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 6)
      throw std::runtime_error("each seed point must have 6 integer entries");
    ptgeom::QVec p;
    for (const auto& x : row) p.emplace_back(x.get<long long>());
    pts.push_back(std::move(p));
  }
  return pts;
}

int run_verify(const std::string& suite, const std::string& caseName,
               const std::string& format,
               const std::optional<std::string>& seedFile) {
  ptgeom::CheckOptions options;
  if (seedFile) options.seedPoints = parse_seed_points(read_file(*seedFile));
  ptgeom::VerificationReport report;
  try {
    report = ptgeom::run_checks(suite, caseName, options);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << (format == "json" ? ptgeom::report_to_json(report)
                                 : ptgeom::report_to_text(report));
  return ptgeom::report_all_pass(report) ? 0 : kExitVerificationFailure;
}

int run_polytope(const std::string& action, const std::string& target,
                 const std::string& format, const std::string& dotPath) {
  using nlohmann::ordered_json;
  if (action == "edges") {
    LatticePointSet pts = named_orbit(target);
    ptgeom::RootEdgeGraph g = ptgeom::root_edge_graph(pts);
    if (!dotPath.empty()) {
      std::ofstream out(dotPath);
      if (!out) throw std::runtime_error("cannot write " + dotPath);
      out << ptgeom::to_dot(g);
    }
    ordered_json j;
    j["target"] = target;
    j["vertexCount"] = g.vertices.points.size();
    j["edgeCount"] = g.edges.size();
    if (!dotPath.empty()) j["dotFile"] = dotPath;
    emit(j, format);
    return 0;
  }
  if (action == "growth") {
    ordered_json j;
    j["target"] = target;
    if (target == "dilation") {
      auto counts = ptgeom::dilation_counts(8);
      j["counts"] = counts;
      j["numerator"] = std::vector<long long>{1, 6, 16, 6, 1};
      j["denominatorExponent"] = 6;
      bool ok = ptgeom::expand_numerator({1, 6, 16, 6, 1}, 6, 8) == counts;
      j["numeratorReproducesCounts"] = ok;
      emit(j, format);
      return ok ? 0 : kExitVerificationFailure;
    }
    std::vector<std::vector<int>> gens;
    if (target == "hexagon") {
      gens = ptgeom::diplo_simplex_generators(2);
    } else if (target == "diplo") {
      gens = ptgeom::diplo_simplex_generators(5);
    } else if (target == "doubled-c") {
      for (const auto& v : named_orbit("newton-c").points) {
        std::vector<int> g(6);
        for (int i = 0; i < 6; ++i) g[i] = 2 * v[i] - 1;
        gens.push_back(std::move(g));
      }
    } else {
      throw CLI::ValidationError("--target", "unknown growth target: " + target);
    }
    ptgeom::GrowthSeries s = ptgeom::growth_series(gens, 8);
    j["counts"] = s.counts;
    j["rank"] = s.rank;
    j["numeratorAtRank"] = s.numeratorAtRank;
    j["numeratorAtRankPlusOne"] = s.numeratorAtRankPlusOne;
    emit(j, format);
    return 0;
  }
  if (action == "lumping") {
    LatticePointSet pts = named_orbit(target);
    std::vector<std::vector<int>> blocks;
    if (target == "newton-sl4")
      blocks = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}};
    else
      blocks = {{1, 2}, {3, 4}, {5, 6}};
    LatticePointSet image = ptgeom::lumping_projection(pts, blocks);
    ordered_json j;
    j["target"] = target;
    j["imageDimension"] = image.dimension;
    j["imagePoints"] = points_json(image);
    emit(j, format);
    return 0;
  }
  if (action == "support") {
    ordered_json j;
    j["target"] = target;
    bool equal = false;
    if (target == "newton-c") {
      equal = ptgeom::support_equals_orbit(
          ptgeom::build_C(ptgeom::Pairing({1, 2}, {3, 4}, {5, 6})),
          named_orbit("newton-c"));
    } else if (target == "newton-sl4") {
      equal = ptgeom::support_equals_orbit(
          ptgeom::build_C({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}}, 3, 12),
          named_orbit("newton-sl4"));
    } else if (target == "control") {
      equal = ptgeom::support_equals_orbit(
          ptgeom::build_C(ptgeom::Pairing({1, 2}, {3, 4}, {5, 6})),
          ptgeom::orbit_points({0, 0, 0, 0, 1, 2}, wreath_2_3()));
    } else {
      throw CLI::ValidationError("--target", "unknown support target: " + target);
    }
    j["supportEqualsOrbit"] = equal;
    emit(j, format);
    // The control target is expected to differ; the Newton targets must match.
    bool ok = (target == "control") ? !equal : equal;
    return ok ? 0 : kExitVerificationFailure;
  }
  throw CLI::ValidationError("action", "unknown polytope action: " + action);
}

int run_sum_nine(const std::string& constraintsPath, const std::string& format) {
  ptgeom::ConstraintFile file =
      ptgeom::parse_constraint_file(read_file(constraintsPath));
  if (file.n != 9)
    throw std::runtime_error("constraint file must declare n = 9");
  ptgeom::NineParticleReport r;
  if (file.positions)
    r = ptgeom::nine_particle_sum(*file.positions);
  else if (file.triples)
    r = ptgeom::nine_particle_sum(*file.triples);
  else
    r = ptgeom::nine_particle_sum(ptgeom::PositionConstraintSet{});

  nlohmann::ordered_json j;
  j["termCount"] = r.termCount;
  j["distinctCycles"] = r.distinctCycles;
  j["groupCount"] = r.groupCount;
  j["survivingGroups"] = r.survivingGroups;
  j["folded"] = r.folded;
  if (r.value) j["value"] = r.value->to_string();
  if (r.squareRoot) j["squareRoot"] = r.squareRoot->to_string();
  emit(j, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification tool for Parke-Taylor sums, determinantal "
               "invariants, and permutohedral geometry"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  std::string dotPath;
  app.add_option("--dot", dotPath, "Write a DOT graph file (polytope edges)");
  std::string seedFile;
  app.add_option("--seed-points", seedFile,
                 "JSON file with rational 6-tuples for the jacobian checks");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::vector<std::string> suiteChoices = ptgeom::check_suites();
  suiteChoices.insert(suiteChoices.begin(), "all");
  verify->add_option("suite", suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember(suiteChoices));
  std::string caseName;
  verify->add_option("--case", caseName, "Run a single named case");

  auto* polytope = app.add_subcommand("polytope", "Lattice-polytope reports");
  std::string action;
  polytope->add_option("action", action, "edges | growth | lumping | support")
      ->required()
      ->check(CLI::IsMember({"edges", "growth", "lumping", "support"}));
  std::string target = "weight-perm";
  polytope->add_option("--target", target, "Named polytope or generator family");

  auto* sum = app.add_subcommand("sum", "Constrained Parke-Taylor sums");
  std::string which;
  sum->add_option("kind", which, "nine")
      ->required()
      ->check(CLI::IsMember({"nine"}));
  std::string constraintsPath;
  sum->add_option("--constraints", constraintsPath,
                  "JSON constraint file ({\"n\":9, ...})")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed())
      return run_verify(suite, caseName, format,
                        seedFile.empty()
                            ? std::nullopt
                            : std::optional<std::string>(seedFile));
    if (polytope->parsed()) return run_polytope(action, target, format, dotPath);
    if (sum->parsed()) return run_sum_nine(constraintsPath, format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
