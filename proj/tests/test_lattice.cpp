#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ptgeom/invariants.hpp"
#include "ptgeom/lattice.hpp"
#include "ptgeom/perm.hpp"

#include <algorithm>
#include <set>

using namespace ptgeom;

namespace {

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

std::vector<int> root6(int i, int j) {
  std::vector<int> v(6, 0);
  v[i - 1] = 1;
  v[j - 1] = -1;
  return v;
}

}  // namespace

TEST_CASE("orbits close at the right sizes and stay on a sphere") {
  LatticePointSet small = orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  CHECK(small.points.size() == 12);
  CHECK(points_on_common_sphere(small));

  LatticePointSet big = orbit_points({0, 0, 1, 1, 2, 2}, symmetric_6());
  CHECK(big.points.size() == 90);
  CHECK(points_on_common_sphere(big));

  LatticePointSet twelve =
      orbit_points({0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1}, wreath_3_4());
  CHECK(twelve.points.size() == 216);
  CHECK(points_on_common_sphere(twelve));

  CHECK_THROWS_AS(orbit_points({0, 1}, symmetric_6()), std::invalid_argument);

  // Orbits are sorted and every permuted point stays inside.
  CHECK(std::is_sorted(big.points.begin(), big.points.end()));
  for (const auto& g : symmetric_6())
    for (const auto& p : big.points)
      CHECK(std::binary_search(big.points.begin(), big.points.end(),
                               permute_vector(g, p)));
}

TEST_CASE("monomial support of the determinant invariants is a single orbit") {
  Pairing good({1, 2}, {3, 4}, {5, 6});
  LatticePointSet small = orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  CHECK(support_equals_orbit(build_C(good), small));

  Polynomial big = build_C({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}}, 3, 12);
  LatticePointSet twelve =
      orbit_points({0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1}, wreath_3_4());
  CHECK(support_equals_orbit(big, twelve));

  LatticePointSet wrong = orbit_points({0, 0, 0, 0, 1, 2}, wreath_2_3());
  CHECK_FALSE(support_equals_orbit(build_C(good), wrong));
}

TEST_CASE("edge directions at a vertex of the twelve-point polytope") {
  LatticePointSet small = orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  RootEdgeGraph g = root_edge_graph(small);
  std::vector<std::vector<int>> expected = {root6(1, 4), root6(2, 4), root6(3, 4),
                                            root6(3, 5), root6(3, 6)};
  std::sort(expected.begin(), expected.end());
  CHECK(neighbor_directions(g, {0, 0, 0, 1, 1, 1}) == expected);
  CHECK_THROWS_AS(neighbor_directions(g, {9, 9, 9, 9, 9, 9}),
                  std::invalid_argument);
}

TEST_CASE("neighbors in the ninety-point graph are the eight roots") {
  LatticePointSet big = orbit_points({0, 0, 1, 1, 2, 2}, symmetric_6());
  RootEdgeGraph g = root_edge_graph(big);
  std::vector<std::vector<int>> expected = {
      root6(1, 3), root6(1, 4), root6(2, 3), root6(2, 4),
      root6(3, 5), root6(3, 6), root6(4, 5), root6(4, 6)};
  std::sort(expected.begin(), expected.end());
  CHECK(neighbor_directions(g, {0, 0, 1, 1, 2, 2}) == expected);

  auto layers = graph_growth(g, {0, 0, 1, 1, 2, 2});
  CHECK(layers[0] == 1);
  CHECK(layers[1] == 8);
  long long total = 0;
  for (long long s : layers) total += s;
  CHECK(total == 90);  // the graph is connected
  CHECK_THROWS_AS(graph_growth(g, {1, 1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("generators act as graph automorphisms") {
  LatticePointSet small = orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  RootEdgeGraph g = root_edge_graph(small);
  std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < small.points.size(); ++i)
    index[small.points[i]] = static_cast<int>(i);
  for (const auto& perm : wreath_2_3()) {
    for (auto [a, b] : g.edges) {
      int u = index.at(permute_vector(perm, small.points[a]));
      int v = index.at(permute_vector(perm, small.points[b]));
      CHECK(edges.count({std::min(u, v), std::max(u, v)}) == 1);
    }
  }
}

TEST_CASE("dot output lists every vertex and edge") {
  LatticePointSet small = orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  RootEdgeGraph g = root_edge_graph(small);
  std::string dot = to_dot(g);
  CHECK(dot.rfind("graph G {", 0) == 0);
  CHECK(dot.find("\"0,0,0,1,1,1\"") != std::string::npos);
  std::size_t links = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos;
       pos = dot.find(" -- ", pos + 1))
    ++links;
  CHECK(links == g.edges.size());
}

TEST_CASE("four-cycle census of the twelve-point graph") {
  LatticePointSet small = orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  FourCycleReport report = four_cycle_affine_rank(root_edge_graph(small));
  CHECK(report.cycleQuads == 30);
  CHECK(report.chordlessQuads == 0);
  CHECK(report.rank2 == 0);
  CHECK(report.rank3 == 30);
}

TEST_CASE("a planar square and a triangle give the degenerate censuses") {
  // Unit square in root steps e1-e2 and e3-e4: affine rank 2, no chords.
  LatticePointSet square;
  square.dimension = 4;
  square.points = {{0, 0, 0, 0}, {0, 0, 1, -1}, {1, -1, 0, 0}, {1, -1, 1, -1}};
  std::sort(square.points.begin(), square.points.end());
  FourCycleReport flat = four_cycle_affine_rank(root_edge_graph(square));
  CHECK(flat.cycleQuads == 1);
  CHECK(flat.chordlessQuads == 1);
  CHECK(flat.rank2 == 1);
  CHECK(flat.rank3 == 0);

  LatticePointSet triangle;
  triangle.dimension = 3;
  triangle.points = {{0, 0, 0}, {1, 0, -1}, {1, -1, 0}};
  std::sort(triangle.points.begin(), triangle.points.end());
  FourCycleReport none = four_cycle_affine_rank(root_edge_graph(triangle));
  CHECK(none.cycleQuads == 0);
  CHECK(none.chordlessQuads == 0);
}

TEST_CASE("lumping the supports onto block sums") {
  LatticePointSet small = orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  LatticePointSet lumped = lumping_projection(small, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(lumped.dimension == 3);
  CHECK(lumped.points.size() == 6);
  for (const auto& p : lumped.points) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2});
  }

  LatticePointSet twelve =
      orbit_points({0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1}, wreath_3_4());
  LatticePointSet big =
      lumping_projection(twelve, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}});
  CHECK(big.dimension == 4);
  CHECK(big.points.size() == 24);
  for (const auto& p : big.points) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3});
  }

  LatticePointSet same = lumping_projection(small, {{1}, {2}, {3}, {4}, {5}, {6}});
  CHECK(same.points == small.points);

  CHECK_THROWS_AS(lumping_projection(small, {{1, 2}, {3, 4}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lumping_projection(small, {{1, 2}, {2, 3}, {4, 5, 6}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lumping_projection(small, {{1, 2}, {3, 4}, {5, 6, 7}}),
                  std::invalid_argument);
}

TEST_CASE("lumping commutes with a block-preserving relabeling") {
  LatticePointSet small = orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  Permutation inner = Permutation::from_cycles(6, {{1, 2}, {5, 6}});
  LatticePointSet moved;
  moved.dimension = 6;
  for (const auto& p : small.points) moved.points.push_back(permute_vector(inner, p));
  std::sort(moved.points.begin(), moved.points.end());
  auto blocks = std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5, 6}};
  CHECK(lumping_projection(moved, blocks).points ==
        lumping_projection(small, blocks).points);
}

TEST_CASE("hypersimplex membership") {
  LatticePointSet small = orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  for (const auto& p : small.points) CHECK(hypersimplex_contains(p, 3, 3));
  CHECK_FALSE(hypersimplex_contains({0, 0, 1, 1, 2, 2}, 3, 3));
  CHECK_FALSE(hypersimplex_contains({1, 1, 1, 1, 0, 0}, 3, 3));
  CHECK_FALSE(hypersimplex_contains({1, 1, 1}, 3, 3));
  CHECK(hypersimplex_contains({1, 0, 1, 0}, 2, 2));
}

TEST_CASE("hexagon growth series") {
  auto gens = diplo_simplex_generators(2);
  CHECK(gens.size() == 6);
  GrowthSeries s = growth_series(gens, 6);
  CHECK(s.rank == 2);
  CHECK(s.counts == std::vector<long long>{1, 6, 12, 18, 24, 30, 36});
  CHECK(s.numeratorAtRank == std::vector<long long>{1, 4, 1});
  CHECK(expand_numerator(s.numeratorAtRank, 2, 6) == s.counts);
}

TEST_CASE("diplo-simplex growth equals the doubled centered polytope growth") {
  auto diplo = diplo_simplex_generators(5);
  CHECK(diplo.size() == 12);
  for (const auto& g : diplo) {
    int sum = 0;
    for (int x : g) sum += x;
    CHECK(sum == 0);
  }
  GrowthSeries ds = growth_series(diplo, 8);
  CHECK(ds.rank == 5);
  std::vector<long long> expected = {1,    12,   72,   272,  762,
                                     1752, 3512, 6372, 10722};
  CHECK(ds.counts == expected);
  CHECK(ds.numeratorAtRank == std::vector<long long>{1, 7, 22, 22, 7, 1});
  CHECK(ds.numeratorAtRankPlusOne ==
        std::vector<long long>{1, 6, 15, 0, -15, -6, -1});
  CHECK(expand_numerator(ds.numeratorAtRank, 5, 8) == ds.counts);
  CHECK(expand_numerator(ds.numeratorAtRankPlusOne, 6, 8) == ds.counts);

  LatticePointSet small = orbit_points({0, 0, 0, 1, 1, 1}, wreath_2_3());
  std::vector<std::vector<int>> doubled;
  for (const auto& v : small.points) {
    std::vector<int> g(6);
    for (int i = 0; i < 6; ++i) g[i] = 2 * v[i] - 1;
    doubled.push_back(std::move(g));
  }
  GrowthSeries dc = growth_series(doubled, 8);
  CHECK(dc.rank == 5);
  CHECK(dc.counts == expected);
  CHECK(dc.numeratorAtRank == ds.numeratorAtRank);
}

TEST_CASE("growth counts are invariant under coordinate relabeling") {
  auto diplo = diplo_simplex_generators(5);
  Permutation g = Permutation::from_cycles(6, {{1, 4, 2}, {3, 6}});
  std::vector<std::vector<int>> moved;
  for (const auto& v : diplo) moved.push_back(permute_vector(g, v));
  CHECK(growth_series(moved, 6).counts == growth_series(diplo, 6).counts);
}

TEST_CASE("growth series rejects bad input") {
  CHECK_THROWS_AS(growth_series({}, 4), std::invalid_argument);
  CHECK_THROWS_AS(growth_series({{0, 0, 0}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(growth_series(diplo_simplex_generators(2), 11),
                  std::invalid_argument);
  CHECK_THROWS_AS(growth_series({{1, 0}, {0, 1, 0}}, 3), std::invalid_argument);
  CHECK(growth_series({{1, 0}}, 0).counts == std::vector<long long>{1});
}

TEST_CASE("dilation counts of the twelve-vertex polytope") {
  std::vector<long long> counts = dilation_counts(8);
  std::vector<long long> expected = {1,    12,   73,   284,  835,
                                     2036, 4347, 8408, 15069};
  CHECK(counts == expected);
  std::vector<long long> ehrhart = {1, 6, 16, 6, 1};
  CHECK(expand_numerator(ehrhart, 6, 8) == expected);
  CHECK_THROWS_AS(dilation_counts(11), std::invalid_argument);
}

TEST_CASE("diplo-simplex generators in low dimension") {
  CHECK(diplo_simplex_generators(1) ==
        std::vector<std::vector<int>>{{1, -1}, {-1, 1}, {-1, 1}, {1, -1}});
  auto hex = diplo_simplex_generators(2);
  std::set<std::vector<int>> asSet(hex.begin(), hex.end());
  std::set<std::vector<int>> expected = {{2, -1, -1},  {-2, 1, 1}, {-1, 2, -1},
                                         {1, -2, 1},   {-1, -1, 2}, {1, 1, -2}};
  CHECK(asSet == expected);
  CHECK_THROWS_AS(diplo_simplex_generators(0), std::invalid_argument);
}
