#include "ptgeom/checks.hpp"

#include "ptgeom/cone.hpp"
#include "ptgeom/invariants.hpp"
#include "ptgeom/lattice.hpp"
#include "ptgeom/perm.hpp"
#include "ptgeom/ptsum.hpp"
#include "ptgeom/ratfun.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ptgeom {

namespace {

using Outcome = std::pair<bool, std::string>;
using CheckFn = std::function<Outcome(const CheckOptions&)>;

struct CheckDef {
  std::string suite;
  std::string caseName;
  CheckFn fn;
};

const CyclicSubwordConstraintSet& paper_triples() {
  static const CyclicSubwordConstraintSet c{
      {{1, 2, 3}, {2, 5, 6}, {3, 4, 6}, {4, 5, 1}}};
  return c;
}

const PositionConstraintSet& paper_pairs() {
  static const PositionConstraintSet c{
      {{1, 2}, {1, 4}, {6, 2}, {6, 4}, {2, 3}, {2, 5}, {4, 3}, {4, 5}}};
  return c;
}

const std::vector<std::vector<int>>& seven_cycles() {
  static const std::vector<std::vector<int>> w = {
      {1, 2, 3, 4, 5, 6}, {1, 2, 4, 5, 6, 3}, {1, 4, 2, 5, 6, 3},
      {1, 4, 5, 6, 2, 3}, {1, 4, 6, 2, 3, 5}, {1, 4, 6, 2, 5, 3},
      {1, 6, 2, 3, 4, 5}};
  return w;
}

const std::vector<std::vector<int>>& eight_words() {
  static const std::vector<std::vector<int>> w = {
      {1, 6, 2, 4, 3, 5}, {1, 6, 2, 4, 5, 3}, {1, 6, 4, 2, 3, 5},
      {1, 6, 4, 2, 5, 3}, {6, 1, 2, 4, 3, 5}, {6, 1, 2, 4, 5, 3},
      {6, 1, 4, 2, 3, 5}, {6, 1, 4, 2, 5, 3}};
  return w;
}

FactorMultiset d12() {
  static const std::vector<std::pair<int, int>> pairs = {
      {1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 5},
      {2, 5}, {4, 5}, {2, 6}, {3, 6}, {4, 6}, {5, 6}};
  FactorMultiset d;
  for (auto [i, j] : pairs) ++d[LinearFactor::difference(i, j)];
  return d;
}

Polynomial c_16_24_35() { return build_C(Pairing({1, 6}, {2, 4}, {3, 5})); }

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

Outcome check_six_cyclic_triples(const CheckOptions&) {
  auto cycles = enumerate_cycles_with_subcycles(6, paper_triples());
  if (cycles != seven_cycles())
    return {false, "cycle filter produced " + std::to_string(cycles.size()) +
                       " cycles instead of the 7 displayed ones"};
  FactoredRational sum = pt_sum(cycles).reduce();
  Polynomial c = c_16_24_35();
  Polynomial minusCsq = -(c * c);
  FactoredRational target(minusCsq, d12());
  if (!rf_equal(sum, target)) return {false, "sum differs from -C^2/D12"};
  if (!(sum.denominator() == d12()) || sum.numerator() != minusCsq)
    return {false, "reduced form is not literally -C^2/D12: " + sum.to_string()};
  return {true, "7 cycles; reduced sum equals -C_{16,24,35}^2 / D12"};
}

Outcome check_six_ordered_pairs(const CheckOptions&) {
  auto words = enumerate_position_constrained(6, paper_pairs());
  if (words != eight_words())
    return {false, "position filter produced " + std::to_string(words.size()) +
                       " words instead of the 8 displayed ones"};
  FactoredRational sum = pt_sum(words).reduce();
  Polynomial c = c_16_24_35();
  Polynomial csq = c * c;
  FactoredRational target(csq, d12());
  if (!rf_equal(sum, target)) return {false, "sum differs from +C^2/D12"};
  if (!(sum.denominator() == d12()) || sum.numerator() != csq)
    return {false, "reduced form is not literally C^2/D12: " + sum.to_string()};
  auto root = verify_square_numerator(sum);
  if (!root || (*root != c && *root != -c))
    return {false, "square-root detection missed C_{16,24,35}"};
  return {true, "8 words; reduced sum equals C_{16,24,35}^2 / D12"};
}

Outcome check_six_pair_orbit(const CheckOptions&) {
  std::set<std::vector<int>> orbit;
  const std::vector<int> seed = {1, 6, 2, 4, 3, 5};
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> w = seed;
    if (mask & 1) std::swap(w[0], w[1]);
    if (mask & 2) std::swap(w[2], w[3]);
    if (mask & 4) std::swap(w[4], w[5]);
    orbit.insert(std::move(w));
  }
  std::set<std::vector<int>> expected(eight_words().begin(), eight_words().end());
  if (orbit != expected) return {false, "slot-swap orbit differs from the 8 words"};
  return {true, "8 words = (Z/2)^3 slot-swap orbit of 162435"};
}

Outcome check_nine_full_telescope(const CheckOptions&) {
  NineParticleReport r = nine_particle_sum(PositionConstraintSet{});
  std::ostringstream os;
  os << "terms=" << r.termCount << " cycles=" << r.distinctCycles
     << " surviving=" << r.survivingGroups;
  if (r.termCount != 362880 || r.distinctCycles != 40320)
    return {false, "enumeration off: " + os.str()};
  if (r.survivingGroups != 0 || !r.folded || !r.value || !r.value->is_zero() ||
      !r.squareRoot || !r.squareRoot->is_zero())
    return {false, "full S9 sum did not telescope to zero: " + os.str()};
  return {true, os.str() + " value=0"};
}

Outcome check_x_factorization(const CheckOptions&) {
  for (const auto& pairing : Pairing::all()) {
    if (build_X(pairing) != build_g(pairing) * build_C(pairing))
      return {false, "X != g*C at " + pairing.to_string()};
  }
  QVec ones = {1, 2, 3, 4, 5, 6};
  Rational v = build_C(Pairing({1, 2}, {3, 4}, {5, 6})).evaluate(ones);
  if (v != 32) return {false, "C_{12,34,56}(1..6) != 32"};
  return {true, "X = g*C for all 15 pairings; C_{12,34,56}(1..6) = 32"};
}

Outcome relation_outcome(Family f, std::size_t expected) {
  auto results = verify_linear_relations(f);
  if (results.size() != expected)
    return {false, "expected " + std::to_string(expected) + " relations, saw " +
                       std::to_string(results.size())};
  for (const auto& r : results)
    if (!r.pass) return {false, r.name + " fails: " + r.witness};
  return {true, std::to_string(expected) + " relations hold exactly"};
}

Outcome check_x_relations(const CheckOptions&) {
  return relation_outcome(Family::X, 10);
}

Outcome check_c_relations(const CheckOptions&) {
  return relation_outcome(Family::C, 9);
}

Outcome check_sign_control(const CheckOptions&) {
  const LinearRelation& rel = x_relations().front();
  const auto& basis = good_basis();
  Polynomial delta = build_X(rel.lhs);
  bool first = true;
  for (auto [coeff, idx] : rel.rhs) {
    int c = first ? -coeff : coeff;
    first = false;
    delta = delta - build_X(basis[idx]).scale(Rational(c));
  }
  if (delta.is_zero()) return {false, "sign-perturbed relation still vanished"};
  return {true, "perturbed relation leaves " +
                    std::to_string(delta.term_count()) + " monomials"};
}

Outcome check_complementary_splits(const CheckOptions&) {
  int tested = 0;
  for (int mask = 0; mask < 64; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != 3) continue;
    std::vector<int> lhs, rhs;
    for (int i = 1; i <= 6; ++i)
      (mask & (1 << (i - 1)) ? lhs : rhs).push_back(i);
    if (!verify_straightening(lhs[0], lhs[1], lhs[2], rhs[0], rhs[1], rhs[2]))
      return {false, "straightening fails for split " +
                         std::to_string(lhs[0]) + std::to_string(lhs[1]) +
                         std::to_string(lhs[2])};
    ++tested;
  }
  return {true, std::to_string(tested) + " ordered complementary splits hold"};
}

Outcome check_delta_expansions(const CheckOptions&) {
  static const int table[5][5] = {{-1, 1, 1, -1, -1},
                                  {1, 1, 1, -1, -1},
                                  {1, 1, -1, -1, 1},
                                  {1, 1, 1, 1, 1},
                                  {-1, 1, 1, -1, 1}};
  for (int which = 0; which < 5; ++which) {
    QVec coords = delta_expansion_coordinates(which);
    for (int i = 0; i < 5; ++i) {
      if (coords[i] != Rational(table[which][i]) / 2) {
        std::ostringstream os;
        os << "d" << which + 1 << " coordinate " << i << " is " << coords[i];
        return {false, os.str()};
      }
    }
  }
  return {true,
          "all five expansions have +-1/2 coordinates; note d5 at X_{15,24,36} "
          "computes to -1/2 where the printed table shows +1/2"};
}

Outcome check_printed_involution(const CheckOptions&) {
  Permutation g = Permutation::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}});
  QMat m = representation_matrix(g, Family::C);
  const int expected[5][5] = {{1, -1, 1, -1, 1},
                              {0, -1, 0, 0, 0},
                              {0, 0, -1, 0, 0},
                              {0, 0, 0, -1, 0},
                              {0, 0, 0, 0, -1}};
  Rational trace(0);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      if (m[r][c] != expected[r][c])
        return {false, "matrix entry (" + std::to_string(r) + "," +
                           std::to_string(c) + ") differs from the printed one"};
    }
    trace += m[r][r];
  }
  if (trace != -3) return {false, "trace is not -3"};
  return {true, "printed matrix reproduced; trace -3"};
}

Outcome check_irrep_identification(const CheckOptions&) {
  auto c = identify_irrep(Family::C);
  auto g = identify_irrep(Family::G);
  auto x = identify_irrep(Family::X);
  if (c != std::vector<int>{3, 3}) return {false, "C-span is not V_(3,3)"};
  if (g != std::vector<int>{3, 3}) return {false, "g-span is not V_(3,3)"};
  if (x != std::vector<int>{2, 2, 2}) return {false, "X-span is not V_(2,2,2)"};
  return {true, "C -> (3,3), g -> (3,3), X -> (2,2,2) via Murnaghan-Nakayama"};
}

Outcome check_stabilizer_order(const CheckOptions&) {
  const Pairing good0({1, 2}, {3, 4}, {5, 6});
  std::vector<int> img = {1, 2, 3, 4, 5, 6};
  int fix = 0, plusX = 0, plusC = 0;
  std::set<Pairing> orbit;
  do {
    Permutation g(img);
    Pairing image = good0.apply(g);
    orbit.insert(image);
    if (image == good0) {
      ++fix;
      if (family_sign(g, good0, Family::X) == 1) ++plusX;
      if (family_sign(g, good0, Family::C) == 1) ++plusC;
    }
  } while (std::next_permutation(img.begin(), img.end()));
  std::ostringstream os;
  os << "stabilizer " << fix << ", sign-+1 subgroups X:" << plusX
     << " C:" << plusC << ", orbit " << orbit.size();
  if (fix != 48 || plusX != 24 || plusC != 24 || orbit.size() != 15)
    return {false, os.str()};
  return {true, os.str()};
}

Outcome check_cyclic_orbits(const CheckOptions&) {
  auto group = subgroup_closure({Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}})});
  const auto& basis = good_basis();
  auto orbit_of = [&](const Pairing& p) {
    std::set<Pairing> o;
    for (const auto& g : group) o.insert(p.apply(g));
    return o;
  };
  std::set<Pairing> two = orbit_of(basis[0]);
  std::set<Pairing> three = orbit_of(basis[2]);
  if (two != std::set<Pairing>{basis[0], basis[1]})
    return {false, "orbit of the first basis element is not {good0, good1}"};
  if (three != std::set<Pairing>{basis[2], basis[3], basis[4]})
    return {false, "orbit of the third basis element is not {good2..good4}"};
  return {true, "cyclic group splits the good basis into orbits of sizes 2 and 3"};
}

const std::vector<QVec>& seed_points(const CheckOptions& options) {
  return options.seedPoints ? *options.seedPoints : jacobian_seed_points();
}

Outcome check_jacobian_x(const CheckOptions& options) {
  int r = jacobian_rank(good_basis_polynomials(Family::X), seed_points(options));
  if (r != 4) return {false, "X-map rank " + std::to_string(r)};
  return {true, "rank 4 at " + std::to_string(seed_points(options).size()) +
                    " points"};
}

Outcome check_jacobian_c(const CheckOptions& options) {
  int r = jacobian_rank(good_basis_polynomials(Family::C), seed_points(options));
  if (r != 4) return {false, "C-map rank " + std::to_string(r)};
  return {true, "rank 4 at " + std::to_string(seed_points(options).size()) +
                    " points"};
}

Outcome check_jacobian_control(const CheckOptions& options) {
  std::vector<Polynomial> projections;
  for (int i = 1; i <= 5; ++i) projections.push_back(Polynomial::variable(6, i));
  int r = jacobian_rank(projections, seed_points(options));
  if (r != 5) return {false, "projection control rank " + std::to_string(r)};
  return {true, "coordinate projection has rank 5"};
}

Outcome check_segre_twisted(const CheckOptions&) {
  if (!verify_segre_cubic())
    return {false, "5 s1^3 - 18 s1 s2 + 27 s3 does not vanish with the twist"};
  if (!segre_permutation_invariant())
    return {false, "cubic expression is not symmetric in its five inputs"};
  return {true, "twisted Segre cubic expands to zero"};
}

Outcome check_segre_control(const CheckOptions&) {
  Rational v = segre_untwisted_control();
  if (v == 0) return {false, "untwisted control unexpectedly vanished"};
  std::ostringstream os;
  os << "untwisted value at (1,2,3,5,7,11) = " << v;
  return {true, os.str()};
}

Outcome check_igusa_zero(const CheckOptions&) {
  QVec ones = {1, 2, 3, 4, 5, 6};
  if (igusa_value_at(ones) != 0) return {false, "smoke value at (1..6) nonzero"};
  if (!verify_igusa_quartic())
    return {false, "degree-24 expansion left a nonzero polynomial"};
  return {true, "quartic expression expands to the zero polynomial"};
}

Outcome check_igusa_control(const CheckOptions&) {
  Rational v = igusa_negative_control();
  if (v == 0) return {false, "d5 -> -d5 control unexpectedly vanished"};
  std::ostringstream os;
  os << "d5-flipped value at (1,2,3,5,7,11) = " << v;
  return {true, os.str()};
}

Outcome check_plate_extreme_rays(const CheckOptions&) {
  ConeV computed = extreme_rays(nonplanar_plate());
  std::set<ZVec> got(computed.rays.begin(), computed.rays.end());
  const ConeV roots = plate_roots();
  std::set<ZVec> expected(roots.rays.begin(), roots.rays.end());
  if (got != expected)
    return {false, "extreme rays differ from the 8 roots (" +
                       std::to_string(got.size()) + " computed)"};
  for (const auto& r : roots.rays) {
    Int sum(0);
    for (const auto& x : r) sum += x;
    if (sum != 0) return {false, "a root leaves the sum-zero hyperplane"};
  }
  if (!cone_equal(nonplanar_plate(), roots))
    return {false, "cone_equal rejects the plate against its roots"};
  return {true, "plate cone = conical hull of the 8 roots"};
}

Outcome check_plate_redundancy(const CheckOptions&) {
  if (!redundant_inequality(nonplanar_plate(true), 2))
    return {false, "x12 >= 0 not detected as redundant"};
  if (redundant_inequality(nonplanar_plate(), 0))
    return {false, "x1 >= 0 wrongly reported redundant"};
  return {true, "x12 >= 0 redundant; x1 >= 0 essential"};
}

nlohmann::ordered_json mat_json(const ZMat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : m) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& x : r) row.push_back(x.convert_to<long long>());
    rows.push_back(std::move(row));
  }
  return rows;
}

Outcome check_plate_descriptions(const CheckOptions&) {
  ConeH h = nonplanar_plate();
  nlohmann::ordered_json hj;
  hj["ineq"] = mat_json(h.inequalities);
  hj["eq"] = mat_json(h.equalities);
  nlohmann::ordered_json vj;
  vj["rays"] = mat_json(plate_roots().rays);
  return {true, hj.dump() + " " + vj.dump()};
}

Outcome check_edge_directions(const CheckOptions&) {
  if (!edge_directions_match_neighbors())
    return {false, "in-orbit root moves differ from the 8 plate roots"};
  return {true, "orbit neighbors of (0,0,1,1,2,2) are exactly the 8 roots"};
}

Outcome check_weight_perm_growth(const CheckOptions&) {
  LatticePointSet orbit = orbit_points({0, 0, 1, 1, 2, 2}, symmetric_6());
  RootEdgeGraph g = root_edge_graph(orbit);
  auto layers = graph_growth(g, {0, 0, 1, 1, 2, 2});
  long long total = 0;
  for (long long s : layers) total += s;
  std::ostringstream os;
  os << "s(0..)=";
  for (std::size_t i = 0; i < layers.size(); ++i)
    os << (i ? "," : "") << layers[i];
  if (orbit.points.size() != 90 || layers.size() < 2 || layers[1] != 8 ||
      total != 90)
    return {false, os.str()};
  return {true, os.str()};
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"pt-sum", "six-cyclic-triples", check_six_cyclic_triples},
      {"pt-sum", "six-ordered-pairs", check_six_ordered_pairs},
      {"pt-sum", "six-pair-orbit", check_six_pair_orbit},
      {"pt-sum", "nine-full-telescope", check_nine_full_telescope},
      {"relations", "x-factorization", check_x_factorization},
      {"relations", "x-relations", check_x_relations},
      {"relations", "c-relations", check_c_relations},
      {"relations", "sign-control", check_sign_control},
      {"straightening", "complementary-splits", check_complementary_splits},
      {"straightening", "delta-expansions", check_delta_expansions},
      {"rep", "printed-involution", check_printed_involution},
      {"rep", "irrep-identification", check_irrep_identification},
      {"rep", "stabilizer-order", check_stabilizer_order},
      {"rep", "cyclic-orbits", check_cyclic_orbits},
      {"jacobian", "x-rank", check_jacobian_x},
      {"jacobian", "c-rank", check_jacobian_c},
      {"jacobian", "projection-control", check_jacobian_control},
      {"segre", "twisted-zero", check_segre_twisted},
      {"segre", "untwisted-control", check_segre_control},
      {"igusa", "quartic-zero", check_igusa_zero},
      {"igusa", "negative-control", check_igusa_control},
      {"plate", "extreme-rays", check_plate_extreme_rays},
      {"plate", "redundancy", check_plate_redundancy},
      {"plate", "cone-descriptions", check_plate_descriptions},
      {"corollary", "edge-directions", check_edge_directions},
      {"corollary", "weight-perm-growth", check_weight_perm_growth},
  };
  return defs;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> suites = [] {
    std::vector<std::string> s;
    for (const auto& def : registry())
      if (s.empty() || s.back() != def.suite) s.push_back(def.suite);
    return s;
  }();
  return suites;
}

VerificationReport run_checks(const std::string& suite,
                              const std::string& caseName,
                              const CheckOptions& options) {
  const auto& suites = check_suites();
  if (suite != "all" &&
      std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw std::invalid_argument("unknown suite: " + suite);

  VerificationReport report;
  report.toolVersion = kToolVersion;
  for (const auto& def : registry()) {
    if (suite != "all" && def.suite != suite) continue;
    if (!caseName.empty() && def.caseName != caseName) continue;
    CheckResult result;
    result.name = def.suite + "/" + def.caseName;
    auto start = std::chrono::steady_clock::now();
    try {
      auto [pass, witness] = def.fn(options);
      result.status = pass ? "pass" : "fail";
      result.witness = std::move(witness);
    } catch (const std::exception& e) {
      result.status = "fail";
      result.witness = std::string("exception: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    result.wallMillis =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
            .count();
    report.entries.push_back(std::move(result));
  }
  if (report.entries.empty())
    throw std::invalid_argument(caseName.empty()
                                    ? "no checks matched"
                                    : "unknown case: " + caseName);

  std::uint64_t h = 14695981039346656037ULL;
  for (const auto& e : report.entries) {
    h = fnv1a(h, e.name);
    h = fnv1a(h, "\x1f");
    h = fnv1a(h, e.status);
    h = fnv1a(h, "\x1f");
    h = fnv1a(h, e.witness);
    h = fnv1a(h, "\x1e");
  }
  h = fnv1a(h, report.toolVersion);
  std::ostringstream os;
  os << std::hex << h;
  report.inputDigest = os.str();
  return report;
}

bool report_all_pass(const VerificationReport& r) {
  return std::all_of(r.entries.begin(), r.entries.end(),
                     [](const CheckResult& e) { return e.status != "fail"; });
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json entry;
    entry["name"] = e.name;
    entry["status"] = e.status;
    if (!e.witness.empty()) entry["witness"] = e.witness;
    entry["wallMillis"] = e.wallMillis;
    j["entries"].push_back(std::move(entry));
  }
  j["toolVersion"] = r.toolVersion;
  j["inputDigest"] = r.inputDigest;
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& e : r.entries) {
    if (e.status == "fail") ++failed;
    os << "[" << e.status << "] " << e.name;
    if (!e.witness.empty()) os << "  " << e.witness;
    os << "\n";
  }
  os << r.entries.size() << " checks, " << r.entries.size() - failed
     << " passed, " << failed << " failed (digest " << r.inputDigest << ")\n";
  return os.str();
}

}  // namespace ptgeom
