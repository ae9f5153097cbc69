#pragma once

#include "ptgeom/linalg.hpp"
#include "ptgeom/perm.hpp"
#include "ptgeom/polynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ptgeom {

// ((x_j-x_i) x_i x_j, -(x_j-x_i)(x_i+x_j), (x_j-x_i)): the cross product of
// the Veronese vectors (1, x_i, x_i^2) and (1, x_j, x_j^2).
std::array<Polynomial, 3> cross_product(int i, int j, int vars = 6);

// det of the three cross-product columns of the pairing.
Polynomial build_X(const Pairing& pairing);

// det of the matrix whose column for each block carries the elementary
// symmetric polynomials e_0 .. e_{k-1} of the block's variables (k = block
// count). The 3x3 case has rows 1 / sums / products.
Polynomial build_C(const std::vector<std::vector<int>>& blocks, int blockSize, int vars);
Polynomial build_C(const Pairing& pairing);

// prod (x_j - x_i) over the pairs, each with i < j.
Polynomial build_g(const Pairing& pairing);

// Vandermonde: (x_j - x_i)(x_k - x_i)(x_k - x_j).
Polynomial delta(int i, int j, int k, int vars = 6);

enum class Family { X, C, G };

// The good basis in printed order:
// (12,34,56), (16,23,45), (14,26,35), (15,24,36), (13,25,46).
const std::vector<Pairing>& good_basis();
std::vector<Polynomial> good_basis_polynomials(Family f);

// One tabulated linear relation: lhs pairing's polynomial equals the signed
// sum of good-basis elements (coefficient, good-basis index).
struct LinearRelation {
  Pairing lhs;
  std::vector<std::pair<int, int>> rhs;
};
const std::vector<LinearRelation>& x_relations();  // 10
const std::vector<LinearRelation>& c_relations();  // 9

struct RelationCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // serialized nonzero difference on failure
};
std::vector<RelationCheck> verify_linear_relations(Family f);

// Delta_abc Delta_ijk == Delta_ajc Delta_ibk - Delta_aic Delta_jbk
//   - Delta_aij Delta_bck - Delta_ajb Delta_ick + Delta_aib Delta_jck.
bool verify_straightening(int a, int b, int c, int i, int j, int k);

// Thrown by expand_in_basis when the target is outside the span.
struct SpanError : std::runtime_error {
  Polynomial residual;
  explicit SpanError(Polynomial r)
      : std::runtime_error("polynomial is not in the span of the basis"),
        residual(std::move(r)) {}
};

struct BasisExpansion {
  QVec coordinates;
};

// Exact coordinates over the basis via a linear solve on monomial
// coefficient vectors; the reconstruction is verified before returning.
BasisExpansion expand_in_basis(const Polynomial& p, const std::vector<Polynomial>& basis);
std::optional<QVec> try_expand_in_basis(const Polynomial& p,
                                        const std::vector<Polynomial>& basis);

// The five Delta-product triples (d_1..d_5):
// (123|456), (124|356), (125|346), (134|256), (135|246).
const std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>>& delta_product_triples();
Polynomial delta_product(int which);  // 0-based into the list above

// Verified good-basis coordinates of delta_product(which), printed basis
// order, all entries +-1/2.
QVec delta_expansion_coordinates(int which);

// Matrix of the permutation action in the ordered good basis of the family;
// column i is the expansion of the image of basis element i.
QMat representation_matrix(const Permutation& g, Family f);

// Traces over the 11 conjugacy classes matched against Murnaghan-Nakayama
// character rows; returns the unique matching partition.
std::vector<int> identify_irrep(Family f);

// Sign oracle: act(g, P_I) == sign * P_{g I} at the polynomial level.
int family_sign(const Permutation& g, const Pairing& pairing, Family f);

// Max over the points of the exact rank of the 5 x vars Jacobian.
int jacobian_rank(const std::vector<Polynomial>& polys,
                  const std::vector<QVec>& points);

// Five fixed generic rational 6-tuples used by the rank checks.
const std::vector<QVec>& jacobian_seed_points();

// (d1(d1-d2+d3+d4-d5) + d2 d5 + d3 d4)^2 - 4 d2 d3 d4 d5 == 0, expanded.
bool verify_igusa_quartic();
// Same expression evaluated at a point through the d_i values (no expansion).
Rational igusa_value_at(const QVec& point);
// d5 -> -d5 perturbation evaluated at (1,2,3,5,7,11); nonzero.
Rational igusa_negative_control();

// 5 s1^3 - 18 s1 s2 + 27 s3 == 0 for the sign-twisted family
// (C_{12,34,56}, -C_{16,23,45}, C_{14,26,35}, -C_{15,24,36}, C_{13,25,46}).
bool verify_segre_cubic();
// Untwisted (all +C) value at (1,2,3,5,7,11); nonzero.
Rational segre_untwisted_control();
// The expression is literally invariant under permuting the five inputs.
bool segre_permutation_invariant();

}  // namespace ptgeom
