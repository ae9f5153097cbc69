#include "ptgeom/cone.hpp"

#include "ptgeom/lattice.hpp"
#include "ptgeom/perm.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace ptgeom {

namespace {

constexpr int kMaxDimension = 8;
constexpr int kMaxInequalities = 16;
constexpr std::size_t kFmRowLimit = 200000;

Int dot(const ZVec& a, const ZVec& b) {
  Int s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const ZVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

ZMat normalize_rows(ZMat rows, int dimension, const char* what) {
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != dimension)
      throw std::invalid_argument(std::string(what) + ": wrong row length");
    if (is_zero(r)) throw std::invalid_argument(std::string(what) + ": zero row");
    r = content_reduce(std::move(r));
  }
  return rows;
}

// c1 * a + c2 * b, content-reduced.
ZVec combine(const Int& c1, const ZVec& a, const Int& c2, const ZVec& b) {
  ZVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c1 * a[i] + c2 * b[i];
  return content_reduce(std::move(out));
}

ZVec negated(ZVec v) {
  for (auto& x : v) x = -x;
  return v;
}

struct WorkingCone {
  ZMat lin;        // current lineality basis
  ZMat rays;       // current extreme rays modulo lin
  ZMat processed;  // inequality normals already applied
};

bool adjacent(const WorkingCone& w, const ZVec& p, const ZVec& n) {
  ZMat tight;
  for (const auto& c : w.processed)
    if (dot(c, p) == 0 && dot(c, n) == 0) tight.push_back(c);
  int pointedDim = static_cast<int>(p.size()) - static_cast<int>(w.lin.size());
  return bareiss_rank(std::move(tight)) == pointedDim - 2;
}

void apply_inequality(WorkingCone& w, const ZVec& a) {
  std::size_t hit = w.lin.size();
  for (std::size_t i = 0; i < w.lin.size(); ++i) {
    if (dot(a, w.lin[i]) != 0) {
      hit = i;
      break;
    }
  }
  if (hit != w.lin.size()) {
    ZVec pivot = w.lin[hit];
    Int ap = dot(a, pivot);
    if (ap < 0) {
      pivot = negated(std::move(pivot));
      ap = -ap;
    }
    ZMat newLin;
    for (std::size_t i = 0; i < w.lin.size(); ++i) {
      if (i == hit) continue;
      newLin.push_back(combine(ap, w.lin[i], -dot(a, w.lin[i]), pivot));
    }
    for (auto& r : w.rays) r = combine(ap, r, -dot(a, r), pivot);
    w.lin = std::move(newLin);
    w.rays.push_back(std::move(pivot));
  } else {
    ZMat pos, zero, neg;
    for (auto& r : w.rays) {
      Int ar = dot(a, r);
      if (ar > 0)
        pos.push_back(std::move(r));
      else if (ar == 0)
        zero.push_back(std::move(r));
      else
        neg.push_back(std::move(r));
    }
    ZMat next = pos;
    for (auto& r : zero) next.push_back(std::move(r));
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        if (!adjacent(w, p, n)) continue;
        next.push_back(combine(dot(a, p), n, -dot(a, n), p));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    w.rays = std::move(next);
  }
  w.processed.push_back(a);
}

void sort_rows(ZMat& m) { std::sort(m.begin(), m.end()); }

}  // namespace

ConeH cone_h(int dimension, ZMat inequalities, ZMat equalities) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  ConeH h;
  h.dimension = dimension;
  h.inequalities = normalize_rows(std::move(inequalities), dimension, "inequality");
  h.equalities = normalize_rows(std::move(equalities), dimension, "equality");
  return h;
}

ConeV cone_v(int dimension, ZMat rays) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  ConeV v;
  v.dimension = dimension;
  v.rays = normalize_rows(std::move(rays), dimension, "ray");
  return v;
}

bool contains(const ConeH& h, const ZVec& v) {
  if (static_cast<int>(v.size()) != h.dimension)
    throw std::invalid_argument("dimension mismatch");
  for (const auto& a : h.inequalities)
    if (dot(a, v) < 0) return false;
  for (const auto& a : h.equalities)
    if (dot(a, v) != 0) return false;
  return true;
}

DualDescription dual_description(const ConeH& h) {
  if (h.dimension > kMaxDimension) throw std::invalid_argument("dimension limit exceeded");
  if (static_cast<int>(h.inequalities.size()) > kMaxInequalities)
    throw std::invalid_argument("inequality limit exceeded");

  // Fold equalities away by passing to an integer basis of their kernel.
  ZMat basis = h.equalities.empty()
                   ? ZMat()
                   : kernel_basis(h.equalities, h.dimension);
  if (h.equalities.empty()) {
    basis.assign(h.dimension, ZVec(h.dimension, 0));
    for (int i = 0; i < h.dimension; ++i) basis[i][i] = 1;
  }
  const std::size_t m = basis.size();
  DualDescription out;
  if (m == 0) return out;

  WorkingCone w;
  w.lin.assign(m, ZVec(m, 0));
  for (std::size_t i = 0; i < m; ++i) w.lin[i][i] = 1;
  for (const auto& a : h.inequalities) {
    ZVec projected(m);
    for (std::size_t j = 0; j < m; ++j) projected[j] = dot(a, basis[j]);
    // An inequality vanishing on the whole subspace holds with equality.
    if (is_zero(projected)) continue;
    apply_inequality(w, projected);
  }

  auto lift = [&](const ZVec& y) {
    ZVec x(h.dimension, Int(0));
    for (std::size_t j = 0; j < m; ++j)
      for (int i = 0; i < h.dimension; ++i) x[i] += y[j] * basis[j][i];
    return content_reduce(std::move(x));
  };
  for (const auto& r : w.rays) out.rays.push_back(lift(r));
  for (const auto& l : w.lin) out.lineality.push_back(lift(l));
  sort_rows(out.rays);
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  sort_rows(out.lineality);
  return out;
}

ConeV extreme_rays(const ConeH& h) {
  DualDescription dd = dual_description(h);
  ZMat rays = dd.rays;
  for (const auto& l : dd.lineality) {
    rays.push_back(l);
    rays.push_back(negated(l));
  }
  sort_rows(rays);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  ConeV v;
  v.dimension = h.dimension;
  v.rays = std::move(rays);
  return v;
}

ConeH h_description(const ConeV& v) {
  ConeH polar;
  polar.dimension = v.dimension;
  polar.inequalities = v.rays;
  DualDescription dd = dual_description(polar);
  ConeH out;
  out.dimension = v.dimension;
  out.inequalities = std::move(dd.rays);
  out.equalities = std::move(dd.lineality);
  return out;
}

bool redundant_inequality(const ConeH& h, std::size_t idx) {
  if (idx >= h.inequalities.size()) throw std::out_of_range("inequality index");
  ConeH reduced = h;
  reduced.inequalities.erase(reduced.inequalities.begin() + static_cast<long>(idx));
  return extreme_rays(reduced).rays == extreme_rays(h).rays;
}

bool in_conical_hull(const ZVec& target, const ZMat& rays) {
  const std::size_t k = rays.size();
  const std::size_t n = target.size();
  for (const auto& r : rays)
    if (r.size() != n) throw std::invalid_argument("dimension mismatch");
  if (k == 0) return is_zero(target);
  if (k > 8) throw std::invalid_argument("ray count exceeds the elimination limit");
  if (2 * n + k > 32) throw std::invalid_argument("dimension too large for elimination");

  // Rows encode sum_j c_j lambda_j <= d, keyed by c with the tightest d.
  // anc tracks original-row ancestors, elim the variables eliminated in the
  // derivation; Imbert's criterion |anc| <= 1 + |elim| certifies the row as
  // irredundant, everything else may be dropped.
  struct Row {
    Int d;
    std::uint32_t anc;
    std::uint32_t elim;
  };
  std::map<ZVec, Row> rows;
  std::uint32_t nextAncestor = 0;
  auto insert_row = [&](ZVec c, Row row) {
    auto [it, fresh] = rows.emplace(std::move(c), row);
    if (!fresh && row.d < it->second.d) it->second = row;
  };
  for (std::size_t i = 0; i < n; ++i) {
    ZVec c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = rays[j][i];
    insert_row(c, {target[i], 1u << nextAncestor++, 0});
    insert_row(negated(c), {-target[i], 1u << nextAncestor++, 0});
  }
  for (std::size_t j = 0; j < k; ++j) {
    ZVec c(k, Int(0));
    c[j] = -1;
    insert_row(std::move(c), {Int(0), 1u << nextAncestor++, 0});
  }

  std::vector<bool> eliminated(k, false);
  for (std::size_t round = 0; round < k; ++round) {
    // Greedy order: the variable producing the fewest products next.
    std::size_t var = k;
    std::size_t best = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (eliminated[j]) continue;
      std::size_t p = 0, m = 0;
      for (const auto& [c, row] : rows) {
        if (c[j] > 0) ++p;
        if (c[j] < 0) ++m;
      }
      if (var == k || p * m < best) {
        var = j;
        best = p * m;
      }
    }
    eliminated[var] = true;

    std::vector<std::pair<ZVec, Row>> pos, neg;
    std::map<ZVec, Row> keep;
    for (auto& [c, row] : rows) {
      if (c[var] > 0)
        pos.emplace_back(c, row);
      else if (c[var] < 0)
        neg.emplace_back(c, row);
      else
        keep.emplace(c, row);
    }
    rows = std::move(keep);
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        std::uint32_t anc = p.second.anc | q.second.anc;
        std::uint32_t elim = p.second.elim | q.second.elim | (1u << var);
        if (std::popcount(anc) > 1 + std::popcount(elim)) continue;
        // (-q_c) * p + p_c * q eliminates the variable; direction preserved
        // because both multipliers are positive.
        Int pc = p.first[var], qc = -q.first[var];
        ZVec c(k);
        for (std::size_t j = 0; j < k; ++j) c[j] = qc * p.first[j] + pc * q.first[j];
        Int d = qc * p.second.d + pc * q.second.d;
        // Joint content reduction keeps the inequality equivalent.
        Int g = d;
        for (const auto& x : c) g = gcd(g, x);
        if (g != 0 && g != 1) {
          for (auto& x : c) x /= g;
          d /= g;
        }
        if (is_zero(c)) {
          if (d < 0) return false;
          continue;
        }
        insert_row(std::move(c), {std::move(d), anc, elim});
        if (rows.size() > kFmRowLimit)
          throw std::runtime_error("Fourier-Motzkin row limit exceeded");
      }
    }
  }
  for (const auto& [c, row] : rows)
    if (row.d < 0) return false;
  return true;
}

bool cone_equal(const ConeH& h, const ConeV& v) {
  if (h.dimension != v.dimension) throw std::invalid_argument("dimension mismatch");
  for (const auto& r : v.rays)
    if (!contains(h, r)) return false;
  for (const auto& r : extreme_rays(h).rays)
    if (!in_conical_hull(r, v.rays)) return false;
  return true;
}

ConeH nonplanar_plate(bool withRedundant) {
  auto indicator = [](std::initializer_list<int> subset) {
    ZVec row(6, Int(0));
    for (int i : subset) row[i - 1] = 1;
    return row;
  };
  ZMat ineq;
  ineq.push_back(indicator({1}));
  ineq.push_back(indicator({2}));
  if (withRedundant) ineq.push_back(indicator({1, 2}));
  ineq.push_back(indicator({1, 2, 3}));
  ineq.push_back(indicator({1, 2, 4}));
  ineq.push_back(indicator({1, 2, 3, 4}));
  ineq.push_back(indicator({1, 2, 3, 4, 5}));
  ineq.push_back(indicator({1, 2, 3, 4, 6}));
  return cone_h(6, std::move(ineq), {indicator({1, 2, 3, 4, 5, 6})});
}

ConeV plate_roots() {
  auto root = [](int i, int j) {
    ZVec row(6, Int(0));
    row[i - 1] = 1;
    row[j - 1] = -1;
    return row;
  };
  return cone_v(6, {root(1, 3), root(1, 4), root(2, 3), root(2, 4), root(3, 5),
                    root(3, 6), root(4, 5), root(4, 6)});
}

bool edge_directions_match_neighbors() {
  auto s6 = std::vector<Permutation>{
      Permutation::from_cycles(6, {{1, 2}}),
      Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}})};
  LatticePointSet orbit = orbit_points({0, 0, 1, 1, 2, 2}, s6);
  std::set<std::vector<int>> members(orbit.points.begin(), orbit.points.end());

  const std::vector<int> base = {0, 0, 1, 1, 2, 2};
  std::set<std::pair<int, int>> neighbors;
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j) {
      if (i == j) continue;
      std::vector<int> moved = base;
      ++moved[i - 1];
      --moved[j - 1];
      if (members.count(moved)) neighbors.insert({i, j});
    }
  }
  const std::set<std::pair<int, int>> expected = {
      {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}};
  return neighbors == expected;
}

}  // namespace ptgeom
