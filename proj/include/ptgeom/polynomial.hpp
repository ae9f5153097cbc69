#pragma once

#include "ptgeom/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptgeom {

// Exponent vector; length equals the ambient variable count.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic: lower total degree first, then lex ascending.
// The map's last element is the leading term.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, Rational, GradedLexLess>;

// Sparse multivariate polynomial over exact rationals.
// Immutable value semantics; mixed variable counts are errors.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int vars);

  static Polynomial zero(int vars);
  static Polynomial constant(int vars, const Rational& c);
  static Polynomial variable(int vars, int index);  // 1-based index
  static Polynomial monomial(int vars, const Exponents& e, const Rational& c);

  int variable_count() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  int degree() const;  // -1 for the zero polynomial

  void add_term(const Exponents& e, const Rational& c);

  Rational coefficient(const Exponents& e) const;
  std::vector<Exponents> support() const;  // graded-lex ascending

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Rational& c) const;
  Polynomial pow(unsigned k) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Rational evaluate(const std::vector<Rational>& point) const;
  Polynomial differentiate(int varIndex) const;  // 1-based

  // Terms as "coeff * x1^a1 x3^a3" (zero exponents omitted) joined by " + ",
  // leading term first; the zero polynomial prints as "0".
  std::string to_string() const;
  static Polynomial parse(const std::string& text, int vars);

 private:
  int vars_ = 0;
  TermMap terms_;
  void check_vars(const Polynomial& o) const;
};

// Thrown by exact_divide; carries the first stuck remainder as witness.
struct DivisionError : std::runtime_error {
  Polynomial remainder;
  explicit DivisionError(Polynomial r)
      : std::runtime_error("polynomial division left a nonzero remainder"),
        remainder(std::move(r)) {}
};

// Multivariate long division by a single divisor under graded-lex order.
// Exact quotient or DivisionError with the remainder witness.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// nullopt instead of an exception on non-divisibility.
std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b);

}  // namespace ptgeom
