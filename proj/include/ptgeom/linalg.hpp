#pragma once

#include "ptgeom/rational.hpp"

#include <optional>
#include <vector>

namespace ptgeom {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;

// Fraction-free Bareiss elimination; pivot = first nonzero entry in column
// order. Consumes the matrix.
int bareiss_rank(ZMat m);

// Clears denominators row-wise, then Bareiss.
int rank(const QMat& m);

// Any exact solution of A x = b (free variables set to 0), or nullopt when
// the system is inconsistent. Gauss-Jordan over rationals.
std::optional<QVec> solve(const QMat& A, const QVec& b);

// Divides by the gcd of the entries; keeps the sign. Zero vector unchanged.
ZVec content_reduce(ZVec v);

// Integer basis of {x : m x = 0} in cols unknowns, content-reduced, one row
// per free column. An empty m gives the standard basis.
ZMat kernel_basis(const ZMat& m, int cols);

}  // namespace ptgeom
