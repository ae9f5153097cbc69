#include "ptgeom/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ptgeom {

namespace {

Polynomial var(int i, int vars) { return Polynomial::variable(vars, i); }

Polynomial det3(const std::array<std::array<Polynomial, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Leibniz expansion; fine for the k <= 4 sizes used here.
Polynomial det_general(const std::vector<std::vector<Polynomial>>& m, int vars) {
  int k = static_cast<int>(m.size());
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Polynomial out = Polynomial::zero(vars);
  do {
    int sign = 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (idx[i] > idx[j]) sign = -sign;
    Polynomial term = Polynomial::constant(vars, sign);
    for (int r = 0; r < k; ++r) term = term * m[r][idx[r]];
    out = out + term;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

Polynomial elementary_symmetric(const std::vector<int>& block, int r, int vars) {
  if (r == 0) return Polynomial::constant(vars, 1);
  if (r > static_cast<int>(block.size())) return Polynomial::zero(vars);
  // e_r over a block of at most 3 variables: direct subset sum.
  Polynomial out = Polynomial::zero(vars);
  int s = static_cast<int>(block.size());
  for (int mask = 0; mask < (1 << s); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != r) continue;
    Polynomial term = Polynomial::constant(vars, 1);
    for (int b = 0; b < s; ++b)
      if (mask & (1 << b)) term = term * var(block[b], vars);
    out = out + term;
  }
  return out;
}

std::string relation_name(const Pairing& lhs, Family f) {
  return std::string(f == Family::X ? "X" : "C") + "(" + lhs.to_string() + ")";
}

const std::vector<LinearRelation>& relations_for(Family f) {
  return f == Family::X ? x_relations() : c_relations();
}

Polynomial family_poly(const Pairing& p, Family f) {
  switch (f) {
    case Family::X: return build_X(p);
    case Family::C: return build_C(p);
    case Family::G: return build_g(p);
  }
  throw std::logic_error("unknown family");
}

QVec evaluate_gradient_row(const Polynomial& p, const QVec& point) {
  QVec row;
  row.reserve(point.size());
  for (int j = 1; j <= static_cast<int>(point.size()); ++j)
    row.push_back(p.differentiate(j).evaluate(point));
  return row;
}

std::array<Polynomial, 5> igusa_d(int vars = 6) {
  std::array<Polynomial, 5> d{Polynomial::zero(vars), Polynomial::zero(vars),
                              Polynomial::zero(vars), Polynomial::zero(vars),
                              Polynomial::zero(vars)};
  for (int i = 0; i < 5; ++i) d[i] = delta_product(i);
  return d;
}

Rational igusa_expression_value(const std::array<Rational, 5>& d) {
  Rational t = d[0] * (d[0] - d[1] + d[2] + d[3] - d[4]) + d[1] * d[4] + d[2] * d[3];
  return t * t - 4 * d[1] * d[2] * d[3] * d[4];
}

Polynomial segre_expression(const std::vector<Polynomial>& f) {
  int vars = f[0].variable_count();
  Polynomial s1 = Polynomial::zero(vars);
  Polynomial s2 = Polynomial::zero(vars);
  Polynomial s3 = Polynomial::zero(vars);
  int k = static_cast<int>(f.size());
  for (int i = 0; i < k; ++i) {
    s1 = s1 + f[i];
    for (int j = i + 1; j < k; ++j) {
      s2 = s2 + f[i] * f[j];
      for (int l = j + 1; l < k; ++l) s3 = s3 + f[i] * f[j] * f[l];
    }
  }
  return s1.pow(3).scale(5) - (s1 * s2).scale(18) + s3.scale(27);
}

std::vector<Polynomial> segre_twisted_family() {
  const auto& good = good_basis();
  std::vector<Polynomial> f;
  f.reserve(5);
  static const int twist[5] = {1, -1, 1, -1, 1};
  for (int i = 0; i < 5; ++i) {
    Polynomial c = build_C(good[i]);
    f.push_back(twist[i] == 1 ? c : -c);
  }
  return f;
}

}  // namespace

std::array<Polynomial, 3> cross_product(int i, int j, int vars) {
  Polynomial xi = var(i, vars), xj = var(j, vars);
  Polynomial diff = xj - xi;
  return {diff * xi * xj, -(diff * (xi + xj)), diff};
}

Polynomial build_X(const Pairing& pairing) {
  const int vars = 6;
  std::array<std::array<Polynomial, 3>, 3> m{{
      {Polynomial::zero(vars), Polynomial::zero(vars), Polynomial::zero(vars)},
      {Polynomial::zero(vars), Polynomial::zero(vars), Polynomial::zero(vars)},
      {Polynomial::zero(vars), Polynomial::zero(vars), Polynomial::zero(vars)},
  }};
  for (int c = 0; c < 3; ++c) {
    auto [i, j] = pairing.blocks()[c];
    auto col = cross_product(i, j, vars);
    for (int r = 0; r < 3; ++r) m[r][c] = col[r];
  }
  return det3(m);
}

Polynomial build_C(const std::vector<std::vector<int>>& blocks, int blockSize, int vars) {
  int k = static_cast<int>(blocks.size());
  if (k * blockSize != vars) throw std::invalid_argument("blocks must partition the variables");
  std::set<int> seen;
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != blockSize)
      throw std::invalid_argument("unequal block sizes");
    for (int i : b) {
      if (i < 1 || i > vars || !seen.insert(i).second)
        throw std::invalid_argument("blocks must partition the variables");
    }
  }
  std::vector<std::vector<Polynomial>> m(
      k, std::vector<Polynomial>(k, Polynomial::zero(vars)));
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r) m[r][c] = elementary_symmetric(blocks[c], r, vars);
  return det_general(m, vars);
}

Polynomial build_C(const Pairing& pairing) {
  std::vector<std::vector<int>> blocks;
  for (auto [i, j] : pairing.blocks()) blocks.push_back({i, j});
  return build_C(blocks, 2, 6);
}

Polynomial build_g(const Pairing& pairing) {
  Polynomial out = Polynomial::constant(6, 1);
  for (auto [i, j] : pairing.blocks()) out = out * (var(j, 6) - var(i, 6));
  return out;
}

Polynomial delta(int i, int j, int k, int vars) {
  return (var(j, vars) - var(i, vars)) * (var(k, vars) - var(i, vars)) *
         (var(k, vars) - var(j, vars));
}

const std::vector<Pairing>& good_basis() {
  static const std::vector<Pairing> basis = {
      Pairing({1, 2}, {3, 4}, {5, 6}), Pairing({1, 6}, {2, 3}, {4, 5}),
      Pairing({1, 4}, {2, 6}, {3, 5}), Pairing({1, 5}, {2, 4}, {3, 6}),
      Pairing({1, 3}, {2, 5}, {4, 6}),
  };
  return basis;
}

std::vector<Polynomial> good_basis_polynomials(Family f) {
  std::vector<Polynomial> out;
  out.reserve(5);
  for (const auto& p : good_basis()) out.push_back(family_poly(p, f));
  return out;
}

const std::vector<LinearRelation>& x_relations() {
  static const std::vector<LinearRelation> rel = {
      {Pairing({1, 2}, {3, 5}, {4, 6}), {{-1, 3}, {1, 1}}},
      {Pairing({1, 2}, {3, 6}, {4, 5}), {{1, 4}, {-1, 2}}},
      {Pairing({1, 3}, {2, 4}, {5, 6}), {{1, 2}, {1, 1}}},
      {Pairing({1, 3}, {2, 6}, {4, 5}), {{-1, 0}, {-1, 3}}},
      {Pairing({1, 4}, {2, 3}, {5, 6}), {{-1, 4}, {-1, 3}}},
      {Pairing({1, 4}, {2, 5}, {3, 6}), {{-1, 0}, {-1, 1}}},
      {Pairing({1, 5}, {2, 3}, {4, 6}), {{1, 0}, {-1, 2}}},
      {Pairing({1, 5}, {2, 6}, {3, 4}), {{1, 4}, {1, 1}}},
      {Pairing({1, 6}, {2, 4}, {3, 5}), {{1, 0}, {-1, 4}}},
      {Pairing({1, 6}, {2, 5}, {3, 4}), {{-1, 2}, {-1, 3}}},
  };
  return rel;
}

const std::vector<LinearRelation>& c_relations() {
  static const std::vector<LinearRelation> rel = {
      {Pairing({1, 2}, {3, 5}, {4, 6}), {{1, 3}, {-1, 1}}},
      {Pairing({1, 2}, {3, 6}, {4, 5}), {{1, 4}, {-1, 2}}},
      {Pairing({1, 3}, {2, 6}, {4, 5}), {{1, 0}, {1, 3}}},
      {Pairing({1, 4}, {2, 3}, {5, 6}), {{-1, 4}, {-1, 3}}},
      {Pairing({1, 4}, {2, 5}, {3, 6}), {{1, 0}, {1, 1}}},
      {Pairing({1, 5}, {2, 3}, {4, 6}), {{1, 2}, {-1, 0}}},
      {Pairing({1, 5}, {2, 6}, {3, 4}), {{-1, 4}, {-1, 1}}},
      {Pairing({1, 6}, {2, 4}, {3, 5}), {{1, 4}, {-1, 0}}},
      {Pairing({1, 6}, {2, 5}, {3, 4}), {{-1, 2}, {-1, 3}}},
  };
  return rel;
}

std::vector<RelationCheck> verify_linear_relations(Family f) {
  if (f == Family::G) throw std::invalid_argument("no tabulated relations for the g family");
  auto basis = good_basis_polynomials(f);
  std::vector<RelationCheck> out;
  for (const auto& rel : relations_for(f)) {
    Polynomial diff = family_poly(rel.lhs, f);
    for (auto [coeff, idx] : rel.rhs) diff = diff - basis[idx].scale(coeff);
    RelationCheck check;
    check.name = relation_name(rel.lhs, f);
    check.pass = diff.is_zero();
    if (!check.pass) check.witness = diff.to_string();
    out.push_back(std::move(check));
  }
  return out;
}

bool verify_straightening(int a, int b, int c, int i, int j, int k) {
  const int vars = 6;
  std::set<int> distinct{a, b, c, i, j, k};
  if (distinct.size() != 6 || *distinct.begin() < 1 || *distinct.rbegin() > vars)
    throw std::invalid_argument("straightening needs six distinct indices in 1..6");
  Polynomial lhs = delta(a, b, c, vars) * delta(i, j, k, vars);
  Polynomial rhs = delta(a, j, c, vars) * delta(i, b, k, vars) -
                   delta(a, i, c, vars) * delta(j, b, k, vars) -
                   delta(a, i, j, vars) * delta(b, c, k, vars) -
                   delta(a, j, b, vars) * delta(i, c, k, vars) +
                   delta(a, i, b, vars) * delta(j, c, k, vars);
  return lhs == rhs;
}

std::optional<QVec> try_expand_in_basis(const Polynomial& p,
                                        const std::vector<Polynomial>& basis) {
  if (basis.empty()) return p.is_zero() ? std::optional<QVec>(QVec{}) : std::nullopt;
  std::set<Exponents, GradedLexLess> monomials;
  for (const auto& b : basis)
    for (const auto& e : b.support()) monomials.insert(e);
  for (const auto& e : p.support()) monomials.insert(e);
  QMat A;
  QVec rhs;
  for (const auto& e : monomials) {
    QVec row;
    row.reserve(basis.size());
    for (const auto& b : basis) row.push_back(b.coefficient(e));
    A.push_back(std::move(row));
    rhs.push_back(p.coefficient(e));
  }
  auto sol = solve(A, rhs);
  if (!sol) return std::nullopt;
  // The solve already ran over the full monomial union, but reverify through
  // polynomial arithmetic so the expansion is self-certifying.
  Polynomial recon = Polynomial::zero(p.variable_count());
  for (std::size_t idx = 0; idx < basis.size(); ++idx)
    recon = recon + basis[idx].scale((*sol)[idx]);
  if (!(recon == p)) return std::nullopt;
  return sol;
}

BasisExpansion expand_in_basis(const Polynomial& p, const std::vector<Polynomial>& basis) {
  auto coords = try_expand_in_basis(p, basis);
  if (!coords) throw SpanError(p);
  return BasisExpansion{*coords};
}

const std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>>& delta_product_triples() {
  static const std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> triples = {
      {{1, 2, 3}, {4, 5, 6}}, {{1, 2, 4}, {3, 5, 6}}, {{1, 2, 5}, {3, 4, 6}},
      {{1, 3, 4}, {2, 5, 6}}, {{1, 3, 5}, {2, 4, 6}},
  };
  return triples;
}

Polynomial delta_product(int which) {
  const auto& t = delta_product_triples().at(which);
  return delta(t.first[0], t.first[1], t.first[2]) *
         delta(t.second[0], t.second[1], t.second[2]);
}

QVec delta_expansion_coordinates(int which) {
  return expand_in_basis(delta_product(which), good_basis_polynomials(Family::X))
      .coordinates;
}

QMat representation_matrix(const Permutation& g, Family f) {
  auto basis = good_basis_polynomials(f);
  int k = static_cast<int>(basis.size());
  QMat m(k, QVec(k, Rational(0)));
  for (int col = 0; col < k; ++col) {
    auto coords = expand_in_basis(act(g, basis[col]), basis).coordinates;
    for (int row = 0; row < k; ++row) m[row][col] = coords[row];
  }
  return m;
}

std::vector<int> identify_irrep(Family f) {
  auto classes = partitions(6);
  std::vector<Rational> traces;
  traces.reserve(classes.size());
  for (const auto& mu : classes) {
    QMat m = representation_matrix(class_representative(mu), f);
    Rational tr = 0;
    for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
    traces.push_back(tr);
  }
  std::vector<std::vector<int>> matches;
  for (const auto& lambda : classes) {
    bool ok = true;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (Rational(mn_character(lambda, classes[c])) != traces[c]) {
        ok = false;
        break;
      }
    }
    if (ok) matches.push_back(lambda);
  }
  if (matches.size() != 1) {
    std::ostringstream os;
    os << "trace vector matched " << matches.size() << " irreducible characters";
    throw std::runtime_error(os.str());
  }
  return matches.front();
}

int family_sign(const Permutation& g, const Pairing& pairing, Family f) {
  Polynomial image = act(g, family_poly(pairing, f));
  Polynomial target = family_poly(pairing.apply(g), f);
  if (image == target) return 1;
  if (image == -target) return -1;
  throw std::logic_error("permutation image is not a signed family element");
}

int jacobian_rank(const std::vector<Polynomial>& polys, const std::vector<QVec>& points) {
  if (points.empty()) throw std::invalid_argument("jacobian_rank needs at least one point");
  int best = 0;
  for (const QVec& pt : points) {
    QMat m;
    m.reserve(polys.size());
    for (const auto& p : polys) m.push_back(evaluate_gradient_row(p, pt));
    best = std::max(best, rank(m));
  }
  return best;
}

const std::vector<QVec>& jacobian_seed_points() {
  static const std::vector<QVec> pts = {
      {1, 2, 3, 5, 7, 11},  {1, 2, 4, 8, 16, 32}, {0, 1, 3, 7, 12, 20},
      {2, 3, 5, 7, 11, 13}, {1, -1, 2, -2, 3, -3},
  };
  return pts;
}

bool verify_igusa_quartic() {
  auto d = igusa_d();
  Polynomial t = d[0] * (d[0] - d[1] + d[2] + d[3] - d[4]) + d[1] * d[4] + d[2] * d[3];
  Polynomial expr = t * t - (d[1] * d[2] * d[3] * d[4]).scale(4);
  return expr.is_zero();
}

Rational igusa_value_at(const QVec& point) {
  auto d = igusa_d();
  std::array<Rational, 5> vals;
  for (int i = 0; i < 5; ++i) vals[i] = d[i].evaluate(point);
  return igusa_expression_value(vals);
}

Rational igusa_negative_control() {
  QVec point = {1, 2, 3, 5, 7, 11};
  auto d = igusa_d();
  std::array<Rational, 5> vals;
  for (int i = 0; i < 5; ++i) vals[i] = d[i].evaluate(point);
  vals[4] = -vals[4];
  return igusa_expression_value(vals);
}

bool verify_segre_cubic() { return segre_expression(segre_twisted_family()).is_zero(); }

Rational segre_untwisted_control() {
  std::vector<Polynomial> f;
  for (const auto& p : good_basis()) f.push_back(build_C(p));
  return segre_expression(f).evaluate({1, 2, 3, 5, 7, 11});
}

bool segre_permutation_invariant() {
  auto f = segre_twisted_family();
  Polynomial base = segre_expression(f);
  std::vector<std::vector<int>> orders = {{1, 2, 3, 4, 0}, {4, 3, 2, 1, 0}, {2, 0, 4, 1, 3}};
  for (const auto& ord : orders) {
    std::vector<Polynomial> shuffled;
    for (int i : ord) shuffled.push_back(f[i]);
    if (!(segre_expression(shuffled) == base)) return false;
  }
  return true;
}

}  // namespace ptgeom
