#pragma once

#include "ptgeom/perm.hpp"
#include "ptgeom/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ptgeom {

struct LatticePointSet {
  int dimension = 0;
  std::vector<std::vector<int>> points;  // sorted, deduplicated
};

// Closure of start under the given coordinate permutations (treated as
// generators of the acting group).
LatticePointSet orbit_points(const std::vector<int>& start,
                             const std::vector<Permutation>& generators);

// Equal squared distance from the centroid for every point; this is what
// makes an orbit its own vertex set.
bool points_on_common_sphere(const LatticePointSet& pts);

// support(p) as exponent vectors == pts, as sets.
bool support_equals_orbit(const Polynomial& p, const LatticePointSet& pts);

// Edges between points whose difference is e_i - e_j.
struct RootEdgeGraph {
  LatticePointSet vertices;
  std::vector<std::pair<int, int>> edges;  // index pairs i<j into vertices
};
RootEdgeGraph root_edge_graph(const LatticePointSet& pts);

// Sorted difference vectors (neighbor - v) for the neighbors of v.
std::vector<std::vector<int>> neighbor_directions(const RootEdgeGraph& g,
                                                  const std::vector<int>& v);

// BFS layer sizes of the graph from start; layers[k] counts vertices at
// graph distance exactly k.
std::vector<long long> graph_growth(const RootEdgeGraph& g,
                                    const std::vector<int>& start);

std::string to_dot(const RootEdgeGraph& g);

// Quadruples of vertices carrying a spanning 4-cycle, their chordless
// subcount, and the affine ranks of the quadruples.
struct FourCycleReport {
  long long cycleQuads = 0;
  long long chordlessQuads = 0;
  long long rank2 = 0;
  long long rank3 = 0;
};
FourCycleReport four_cycle_affine_rank(const RootEdgeGraph& g);

// Coordinate sums per block, deduplicated. Blocks must partition 1..dim.
LatticePointSet lumping_projection(const LatticePointSet& pts,
                                   const std::vector<std::vector<int>>& blocks);

// Lattice-point membership in the hypersimplex B_{a,b}: length a+b, entries
// in {0,1}, exactly a ones.
bool hypersimplex_contains(const std::vector<int>& point, int a, int b);

// s(k) = lattice points of minimal generator word length exactly k, with the
// numerator fits against both denominator conventions (1-t)^rank and
// (1-t)^(rank+1). Trailing zero coefficients are trimmed.
struct GrowthSeries {
  std::vector<long long> counts;
  int rank = 0;
  std::vector<long long> numeratorAtRank;
  std::vector<long long> numeratorAtRankPlusOne;
};
GrowthSeries growth_series(const std::vector<std::vector<int>>& generators, int K);

// Power-series coefficients 0..K of numerator / (1-t)^d.
std::vector<long long> expand_numerator(const std::vector<long long>& numerator,
                                        int d, int K);

// The 2d+2 integer vectors +-((d+1) e_i - all-ones) in Z^(d+1).
std::vector<std::vector<int>> diplo_simplex_generators(int d);

// E(k) = lattice points of the k-fold dilated C-polytope (12-vertex orbit
// polytope on the slice sum == 3k), counted through its facet description.
std::vector<long long> dilation_counts(int maxK);

}  // namespace ptgeom
