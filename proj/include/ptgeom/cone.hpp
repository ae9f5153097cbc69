#pragma once

#include "ptgeom/linalg.hpp"

#include <cstddef>
#include <vector>

namespace ptgeom {

// a . x >= 0 per inequality row, a . x == 0 per equality row. Rows are
// nonzero and content-reduced.
struct ConeH {
  int dimension = 0;
  ZMat inequalities;
  ZMat equalities;
};

struct ConeV {
  int dimension = 0;
  ZMat rays;
};

// Validating factories; rows are content-reduced, zero rows rejected.
ConeH cone_h(int dimension, ZMat inequalities, ZMat equalities = {});
ConeV cone_v(int dimension, ZMat rays);

bool contains(const ConeH& h, const ZVec& v);

// Double-description output split into extreme rays and a lineality basis.
struct DualDescription {
  ZMat rays;       // content-reduced, lexicographically sorted
  ZMat lineality;  // basis of the maximal linear subspace, same normal form
};

// Motzkin double description over exact integers, inequalities processed in
// input order, adjacency via the rank of the common active constraints.
// Limits: dimension <= 8, at most 16 inequalities.
DualDescription dual_description(const ConeH& h);

// dual_description flattened to generators: lineality directions appear as
// +-pairs alongside the extreme rays.
ConeV extreme_rays(const ConeH& h);

// Facet description of cone(v.rays) via the polar cone: inequalities are the
// polar's extreme rays, equalities its lineality basis.
ConeH h_description(const ConeV& v);

// True iff dropping inequality idx leaves the same generator set.
bool redundant_inequality(const ConeH& h, std::size_t idx);

// Exists lambda >= 0 with sum lambda_j rays_j == target, decided by
// Fourier-Motzkin elimination.
bool in_conical_hull(const ZVec& target, const ZMat& rays);

// V inside H pointwise, and every generator of h expressible in v.rays.
bool cone_equal(const ConeH& h, const ConeV& v);

// The standard nonplanar plate: prefix partial sums x1, x2, x123, x124,
// x1234, x12345, x12346 nonnegative on the hyperplane x123456 == 0.
// withRedundant additionally inserts x12 >= 0 as the third row.
ConeH nonplanar_plate(bool withRedundant = false);

// The eight roots e1-e3, e1-e4, e2-e3, e2-e4, e3-e5, e3-e6, e4-e5, e4-e6.
ConeV plate_roots();

// Root differences r with (0,0,1,1,2,2)+r again a permutation of
// (0,0,1,1,2,2) are exactly the eight plate roots.
bool edge_directions_match_neighbors();

}  // namespace ptgeom
