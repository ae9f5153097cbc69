#include "ptgeom/ratfun.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ptgeom {

LinearFactor LinearFactor::difference(int i, int j) {
  if (i == j || i < 1 || j < 1) throw std::invalid_argument("bad difference factor");
  if (i > j) std::swap(i, j);
  return {Kind::difference, {i, j}};
}

LinearFactor LinearFactor::partial_sum(std::vector<int> subset) {
  if (subset.empty()) throw std::invalid_argument("empty partial sum");
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw std::invalid_argument("repeated index in partial sum");
  if (subset.front() < 1) throw std::invalid_argument("bad index in partial sum");
  return {Kind::partialSum, std::move(subset)};
}

Polynomial LinearFactor::to_polynomial(int vars) const {
  Polynomial p(vars);
  if (kind == Kind::difference) {
    p = Polynomial::variable(vars, indices[0]) - Polynomial::variable(vars, indices[1]);
  } else {
    for (int i : indices) p = p + Polynomial::variable(vars, i);
  }
  return p;
}

std::string LinearFactor::to_string() const {
  std::ostringstream os;
  if (kind == Kind::difference) {
    os << "x" << indices[0] << "-x" << indices[1];
  } else {
    os << "x";
    for (int i : indices) os << i;
  }
  return os.str();
}

bool LinearFactor::operator==(const LinearFactor& o) const {
  return kind == o.kind && indices == o.indices;
}

bool LinearFactor::operator<(const LinearFactor& o) const {
  if (kind != o.kind) return kind == Kind::difference;
  if (kind == Kind::partialSum && indices.size() != o.indices.size())
    return indices.size() < o.indices.size();
  return indices < o.indices;
}

FactoredRational::FactoredRational(int vars) : vars_(vars), num_(vars) {}

FactoredRational::FactoredRational(Polynomial num, FactorMultiset den)
    : vars_(num.variable_count()), num_(std::move(num)), den_(std::move(den)) {
  for (const auto& [f, m] : den_) {
    if (m <= 0) throw std::invalid_argument("non-positive factor multiplicity");
  }
  if (num_.is_zero()) den_.clear();
}

FactoredRational FactoredRational::zero(int vars) { return FactoredRational(vars); }

FactoredRational FactoredRational::from_polynomial(Polynomial p) {
  return FactoredRational(std::move(p), {});
}

Polynomial FactoredRational::denominator_polynomial() const {
  Polynomial d = Polynomial::constant(vars_, 1);
  for (const auto& [f, m] : den_) {
    Polynomial fp = f.to_polynomial(vars_);
    for (int k = 0; k < m; ++k) d = d * fp;
  }
  return d;
}

FactoredRational FactoredRational::negate() const {
  return FactoredRational(-num_, den_);
}

FactoredRational FactoredRational::scale(const Rational& c) const {
  return FactoredRational(num_.scale(c), c == 0 ? FactorMultiset{} : den_);
}

FactoredRational FactoredRational::reduce() const {
  Polynomial num = num_;
  FactorMultiset den = den_;
  bool progress = true;
  while (progress && !num.is_zero()) {
    progress = false;
    for (auto it = den.begin(); it != den.end(); ++it) {
      auto q = try_divide(num, it->first.to_polynomial(vars_));
      if (q) {
        num = std::move(*q);
        if (--it->second == 0) den.erase(it);
        progress = true;
        break;
      }
    }
  }
  return FactoredRational(std::move(num), std::move(den));
}

std::optional<Rational> FactoredRational::evaluate(const std::vector<Rational>& point) const {
  Rational den(1);
  for (const auto& [f, m] : den_) {
    Rational v = f.to_polynomial(vars_).evaluate(point);
    if (v == 0) return std::nullopt;
    for (int k = 0; k < m; ++k) den *= v;
  }
  return num_.evaluate(point) / den;
}

bool FactoredRational::operator==(const FactoredRational& o) const {
  return vars_ == o.vars_ && num_ == o.num_ && den_ == o.den_;
}

std::string FactoredRational::to_string() const {
  std::ostringstream os;
  os << "(" << num_.to_string() << ")";
  if (!den_.empty()) {
    os << " / ";
    for (const auto& [f, m] : den_) {
      os << "(" << f.to_string() << ")";
      if (m > 1) os << "^" << m;
    }
  }
  return os.str();
}

FactoredRational parke_taylor(const std::vector<int>& cycle) {
  const int n = static_cast<int>(cycle.size());
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 labels");
  std::set<int> labels(cycle.begin(), cycle.end());
  if (static_cast<int>(labels.size()) != n || *labels.begin() != 1 || *labels.rbegin() != n)
    throw std::invalid_argument("labels must be a permutation of {1..n}");
  FactorMultiset den;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int a = cycle[k], b = cycle[(k + 1) % n];
    if (a > b) sign = -sign;
    ++den[LinearFactor::difference(a, b)];
  }
  return FactoredRational(Polynomial::constant(n, sign), std::move(den));
}

FactoredRational plate_function(const Permutation& perm) {
  const int n = perm.n();
  FactorMultiset den;
  std::vector<int> prefix;
  prefix.reserve(n - 1);
  for (int k = 1; k < n; ++k) {
    prefix.push_back(perm(k));
    ++den[LinearFactor::partial_sum(prefix)];
  }
  return FactoredRational(Polynomial::constant(n, 1), std::move(den));
}

FactoredRational rf_add(const FactoredRational& a, const FactoredRational& b) {
  if (a.variable_count() != b.variable_count())
    throw std::invalid_argument("variable count mismatch");
  const int vars = a.variable_count();
  FactorMultiset lcm = a.denominator();
  for (const auto& [f, m] : b.denominator()) {
    auto it = lcm.find(f);
    if (it == lcm.end())
      lcm.emplace(f, m);
    else
      it->second = std::max(it->second, m);
  }
  auto cofactor = [&](const FactorMultiset& den) {
    Polynomial c = Polynomial::constant(vars, 1);
    for (const auto& [f, m] : lcm) {
      auto it = den.find(f);
      int need = m - (it == den.end() ? 0 : it->second);
      Polynomial fp = f.to_polynomial(vars);
      for (int k = 0; k < need; ++k) c = c * fp;
    }
    return c;
  };
  Polynomial num = a.numerator() * cofactor(a.denominator()) +
                   b.numerator() * cofactor(b.denominator());
  if (num.is_zero()) return FactoredRational::zero(vars);
  return FactoredRational(std::move(num), std::move(lcm));
}

bool rf_equal(const FactoredRational& a, const FactoredRational& b) {
  if (a.variable_count() != b.variable_count())
    throw std::invalid_argument("variable count mismatch");
  return a.numerator() * b.denominator_polynomial() ==
         b.numerator() * a.denominator_polynomial();
}

}  // namespace ptgeom
