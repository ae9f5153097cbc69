#pragma once

#include "ptgeom/perm.hpp"
#include "ptgeom/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ptgeom {

// Canonical linear form in the denominator of a FactoredRational.
// difference: (i,j) with i<j, meaning x_i - x_j; sign flips live in the
// owning fraction's numerator, never here.
// partialSum: sorted subset S, meaning sum of x_i over S.
struct LinearFactor {
  enum class Kind { difference, partialSum };
  Kind kind = Kind::difference;
  std::vector<int> indices;

  static LinearFactor difference(int i, int j);
  static LinearFactor partial_sum(std::vector<int> subset);

  Polynomial to_polynomial(int vars) const;
  std::string to_string() const;  // "x1-x2" or "x126"

  bool operator==(const LinearFactor& o) const;
  // difference factors sort lexicographically by (i,j); partialSum by
  // subset size then lex; differences precede partial sums.
  bool operator<(const LinearFactor& o) const;
};

using FactorMultiset = std::map<LinearFactor, int>;

// numerator / product of canonical linear factors; the zero function keeps
// an empty denominator.
class FactoredRational {
 public:
  FactoredRational() = default;
  explicit FactoredRational(int vars);
  FactoredRational(Polynomial num, FactorMultiset den);

  static FactoredRational zero(int vars);
  static FactoredRational from_polynomial(Polynomial p);

  int variable_count() const { return vars_; }
  const Polynomial& numerator() const { return num_; }
  const FactorMultiset& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Polynomial denominator_polynomial() const;
  FactoredRational negate() const;
  FactoredRational scale(const Rational& c) const;

  // Divides the numerator by denominator factors while exactly divisible.
  FactoredRational reduce() const;

  // nullopt on a pole (some denominator factor vanishes at the point).
  std::optional<Rational> evaluate(const std::vector<Rational>& point) const;

  // Structural comparison of canonical forms.
  bool operator==(const FactoredRational& o) const;

  std::string to_string() const;

 private:
  int vars_ = 0;
  Polynomial num_;
  FactorMultiset den_;
};

// 1 / prod (x_{s_k} - x_{s_{k+1}}) cyclically; labels must be a permutation
// of {1..n}, n >= 3. Rotations produce structurally identical results.
FactoredRational parke_taylor(const std::vector<int>& cycle);

// 1 / prod of the first n-1 partial sums of x along the permutation word.
FactoredRational plate_function(const Permutation& perm);

// Denominator = multiset LCM; exact numerator; no cancellation attempted.
FactoredRational rf_add(const FactoredRational& a, const FactoredRational& b);

// Cross multiplication: a.num * expand(b.den) == b.num * expand(a.den).
bool rf_equal(const FactoredRational& a, const FactoredRational& b);

}  // namespace ptgeom
