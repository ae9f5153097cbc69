#include "ptgeom/lattice.hpp"

#include "ptgeom/cone.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ptgeom {

namespace {

std::vector<long long> binomial_row(int d) {
  std::vector<long long> row(d + 1, 1);
  for (int i = 1; i <= d; ++i) row[i] = row[i - 1] * (d - i + 1) / i;
  return row;
}

std::vector<long long> fit_numerator(const std::vector<long long>& counts, int d) {
  auto binom = binomial_row(d);
  std::vector<long long> num(counts.size(), 0);
  for (std::size_t j = 0; j < counts.size(); ++j) {
    long long c = 0;
    for (int i = 0; i <= d && i <= static_cast<int>(j); ++i)
      c += (i % 2 == 0 ? 1 : -1) * binom[i] * counts[j - i];
    num[j] = c;
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  return num;
}

int affine_rank_of_quad(const std::vector<std::vector<int>>& pts,
                        int a, int b, int c, int d) {
  ZMat diffs;
  for (int other : {b, c, d}) {
    ZVec row;
    row.reserve(pts[a].size());
    for (std::size_t i = 0; i < pts[a].size(); ++i)
      row.push_back(pts[other][i] - pts[a][i]);
    diffs.push_back(std::move(row));
  }
  return bareiss_rank(std::move(diffs));
}

}  // namespace

LatticePointSet orbit_points(const std::vector<int>& start,
                             const std::vector<Permutation>& generators) {
  for (const auto& g : generators) {
    if (g.n() != static_cast<int>(start.size()))
      throw std::invalid_argument("generator degree does not match the point");
  }
  std::set<std::vector<int>> seen{start};
  std::queue<std::vector<int>> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    std::vector<int> p = std::move(frontier.front());
    frontier.pop();
    for (const auto& g : generators) {
      std::vector<int> q = permute_vector(g, p);
      if (seen.insert(q).second) frontier.push(std::move(q));
    }
  }
  LatticePointSet out;
  out.dimension = static_cast<int>(start.size());
  out.points.assign(seen.begin(), seen.end());
  return out;
}

bool points_on_common_sphere(const LatticePointSet& pts) {
  if (pts.points.empty()) return true;
  const long long n = static_cast<long long>(pts.points.size());
  std::vector<long long> sums(pts.dimension, 0);
  for (const auto& p : pts.points)
    for (int i = 0; i < pts.dimension; ++i) sums[i] += p[i];
  // n^2 |x - centroid|^2 == n^2 |x|^2 - 2 n <x, sums> + |sums|^2; compare the
  // point-dependent part.
  bool first = true;
  long long want = 0;
  for (const auto& p : pts.points) {
    long long q = 0;
    for (int i = 0; i < pts.dimension; ++i)
      q += n * static_cast<long long>(p[i]) * p[i] - 2 * sums[i] * p[i];
    if (first) {
      want = q;
      first = false;
    } else if (q != want) {
      return false;
    }
  }
  return true;
}

bool support_equals_orbit(const Polynomial& p, const LatticePointSet& pts) {
  if (p.variable_count() != pts.dimension) return false;
  auto support = p.support();
  std::set<std::vector<int>> s(support.begin(), support.end());
  std::set<std::vector<int>> o(pts.points.begin(), pts.points.end());
  return s == o;
}

RootEdgeGraph root_edge_graph(const LatticePointSet& pts) {
  RootEdgeGraph g;
  g.vertices = pts;
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < pts.points.size(); ++i)
    index[pts.points[i]] = static_cast<int>(i);
  std::set<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < pts.points.size(); ++u) {
    for (int i = 0; i < pts.dimension; ++i) {
      for (int j = 0; j < pts.dimension; ++j) {
        if (i == j) continue;
        std::vector<int> moved = pts.points[u];
        ++moved[i];
        --moved[j];
        auto it = index.find(moved);
        if (it == index.end()) continue;
        int v = it->second;
        edges.insert({std::min<int>(u, v), std::max<int>(u, v)});
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::vector<std::vector<int>> neighbor_directions(const RootEdgeGraph& g,
                                                  const std::vector<int>& v) {
  auto it = std::find(g.vertices.points.begin(), g.vertices.points.end(), v);
  if (it == g.vertices.points.end())
    throw std::invalid_argument("vertex not in the graph");
  int idx = static_cast<int>(it - g.vertices.points.begin());
  std::vector<std::vector<int>> dirs;
  for (auto [a, b] : g.edges) {
    int other = a == idx ? b : (b == idx ? a : -1);
    if (other < 0) continue;
    std::vector<int> diff(g.vertices.dimension);
    for (int i = 0; i < g.vertices.dimension; ++i)
      diff[i] = g.vertices.points[other][i] - v[i];
    dirs.push_back(std::move(diff));
  }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

std::vector<long long> graph_growth(const RootEdgeGraph& g,
                                    const std::vector<int>& start) {
  auto it = std::find(g.vertices.points.begin(), g.vertices.points.end(), start);
  if (it == g.vertices.points.end())
    throw std::invalid_argument("vertex not in the graph");
  const int n = static_cast<int>(g.vertices.points.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  int s = static_cast<int>(it - g.vertices.points.begin());
  dist[s] = 0;
  q.push(s);
  int maxDist = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    maxDist = std::max(maxDist, dist[u]);
    for (int w : adj[u]) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      q.push(w);
    }
  }
  std::vector<long long> layers(maxDist + 1, 0);
  for (int d : dist)
    if (d >= 0) ++layers[d];
  return layers;
}

std::string to_dot(const RootEdgeGraph& g) {
  auto name = [&](int idx) {
    std::ostringstream os;
    os << '"';
    const auto& p = g.vertices.points[idx];
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) os << ',';
      os << p[i];
    }
    os << '"';
    return os.str();
  };
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t i = 0; i < g.vertices.points.size(); ++i)
    os << "  " << name(static_cast<int>(i)) << ";\n";
  for (auto [a, b] : g.edges) os << "  " << name(a) << " -- " << name(b) << ";\n";
  os << "}\n";
  return os.str();
}

FourCycleReport four_cycle_affine_rank(const RootEdgeGraph& g) {
  const int n = static_cast<int>(g.vertices.points.size());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : g.edges) adj[a][b] = adj[b][a] = true;
  FourCycleReport report;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          // The three pairings of the quad into opposite (non-cycle) pairs.
          bool cyc1 = adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a];
          bool cyc2 = adj[a][b] && adj[b][d] && adj[d][c] && adj[c][a];
          bool cyc3 = adj[a][c] && adj[c][b] && adj[b][d] && adj[d][a];
          if (!cyc1 && !cyc2 && !cyc3) continue;
          ++report.cycleQuads;
          int edgeCount = adj[a][b] + adj[a][c] + adj[a][d] + adj[b][c] +
                          adj[b][d] + adj[c][d];
          if (edgeCount == 4) ++report.chordlessQuads;
          int rank = affine_rank_of_quad(g.vertices.points, a, b, c, d);
          if (rank == 2) ++report.rank2;
          if (rank == 3) ++report.rank3;
        }
      }
    }
  }
  return report;
}

LatticePointSet lumping_projection(const LatticePointSet& pts,
                                   const std::vector<std::vector<int>>& blocks) {
  std::vector<int> seen(pts.dimension, 0);
  for (const auto& block : blocks) {
    for (int i : block) {
      if (i < 1 || i > pts.dimension || seen[i - 1]++)
        throw std::invalid_argument("blocks must partition the coordinates");
    }
  }
  if (std::accumulate(seen.begin(), seen.end(), 0) != pts.dimension)
    throw std::invalid_argument("blocks must partition the coordinates");
  std::set<std::vector<int>> image;
  for (const auto& p : pts.points) {
    std::vector<int> q;
    q.reserve(blocks.size());
    for (const auto& block : blocks) {
      int s = 0;
      for (int i : block) s += p[i - 1];
      q.push_back(s);
    }
    image.insert(std::move(q));
  }
  LatticePointSet out;
  out.dimension = static_cast<int>(blocks.size());
  out.points.assign(image.begin(), image.end());
  return out;
}

bool hypersimplex_contains(const std::vector<int>& point, int a, int b) {
  if (a < 0 || b < 0 || static_cast<int>(point.size()) != a + b) return false;
  int ones = 0;
  for (int x : point) {
    if (x != 0 && x != 1) return false;
    ones += x;
  }
  return ones == a;
}

GrowthSeries growth_series(const std::vector<std::vector<int>>& generators, int K) {
  if (K < 0 || K > 10) throw std::invalid_argument("K must be between 0 and 10");
  if (generators.empty()) throw std::invalid_argument("rank-0 generator set");
  const std::size_t dim = generators.front().size();
  ZMat m;
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("generator dimension mismatch");
    if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; }))
      throw std::invalid_argument("zero generator");
    m.push_back(ZVec(g.begin(), g.end()));
  }
  GrowthSeries out;
  out.rank = bareiss_rank(std::move(m));
  if (out.rank == 0) throw std::invalid_argument("rank-0 generator set");

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier{std::vector<int>(dim, 0)};
  seen.insert(frontier.front());
  out.counts.push_back(1);
  for (int k = 1; k <= K; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        std::vector<int> q(dim);
        for (std::size_t i = 0; i < dim; ++i) q[i] = p[i] + g[i];
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    out.counts.push_back(static_cast<long long>(next.size()));
    frontier = std::move(next);
  }
  out.numeratorAtRank = fit_numerator(out.counts, out.rank);
  out.numeratorAtRankPlusOne = fit_numerator(out.counts, out.rank + 1);
  return out;
}

std::vector<long long> expand_numerator(const std::vector<long long>& numerator,
                                        int d, int K) {
  std::vector<long long> s(K + 1, 0);
  for (std::size_t j = 0; j < numerator.size() && j <= static_cast<std::size_t>(K); ++j)
    s[j] = numerator[j];
  for (int round = 0; round < d; ++round)
    for (int k = 1; k <= K; ++k) s[k] += s[k - 1];
  return s;
}

std::vector<std::vector<int>> diplo_simplex_generators(int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  std::vector<std::vector<int>> gens;
  for (int i = 0; i <= d; ++i) {
    std::vector<int> v(d + 1, -1);
    v[i] += d + 1;
    gens.push_back(v);
    std::vector<int> w(d + 1);
    for (int j = 0; j <= d; ++j) w[j] = -v[j];
    gens.push_back(std::move(w));
  }
  return gens;
}

std::vector<long long> dilation_counts(int maxK) {
  if (maxK < 0 || maxK > 10) throw std::invalid_argument("maxK must be between 0 and 10");
  std::vector<Permutation> wreath = {
      Permutation::from_cycles(6, {{1, 2}}),
      Permutation::from_cycles(6, {{3, 4}}),
      Permutation::from_cycles(6, {{5, 6}}),
      Permutation::from_cycles(6, {{1, 3}, {2, 4}}),
      Permutation::from_cycles(6, {{3, 5}, {4, 6}})};
  LatticePointSet vertices = orbit_points({0, 0, 0, 1, 1, 1}, wreath);

  // Facets of the cone over the polytope at height 1: polar rays (a, b)
  // mean a.x + b k >= 0 on the k-th dilate.
  ZMat lifted;
  for (const auto& v : vertices.points) {
    ZVec row(v.begin(), v.end());
    row.push_back(1);
    lifted.push_back(std::move(row));
  }
  DualDescription polar = dual_description(cone_h(7, std::move(lifted)));

  std::vector<long long> counts;
  for (int k = 0; k <= maxK; ++k) {
    long long count = 0;
    std::vector<int> x(6, 0);
    // Depth-first over x in [0,k]^6 with sum 3k, facets checked at the leaf.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == 6) {
        if (remaining != 0) return;
        for (const auto& f : polar.rays) {
          Int v = f[6] * k;
          for (int i = 0; i < 6; ++i) v += f[i] * x[i];
          if (v < 0) return;
        }
        for (const auto& f : polar.lineality) {
          Int v = f[6] * k;
          for (int i = 0; i < 6; ++i) v += f[i] * x[i];
          if (v != 0) return;
        }
        ++count;
        return;
      }
      int slots = 5 - pos;
      for (int c = 0; c <= k; ++c) {
        int rest = remaining - c;
        if (rest < 0) break;
        if (rest > slots * k) continue;
        x[pos] = c;
        self(self, pos + 1, rest);
      }
      x[pos] = 0;
    };
    rec(rec, 0, 3 * k);
    counts.push_back(count);
  }
  return counts;
}

}  // namespace ptgeom
