#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ptgeom/cone.hpp"
#include "ptgeom/lattice.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace ptgeom;

namespace {

ZVec zvec(std::vector<int> v) { return ZVec(v.begin(), v.end()); }

ZVec root6(int i, int j) {
  ZVec v(6, Int(0));
  v[i - 1] = 1;
  v[j - 1] = -1;
  return v;
}

std::set<ZVec> as_set(const ZMat& m) { return std::set<ZVec>(m.begin(), m.end()); }

ZVec negated_copy(ZVec v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

TEST_CASE("factories validate their rows") {
  CHECK_THROWS_AS(cone_h(3, {{0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(cone_h(3, {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(cone_h(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(cone_v(2, {{0, 0}}), std::invalid_argument);
  ConeH h = cone_h(2, {{2, 4}});
  CHECK(h.inequalities == ZMat{zvec({1, 2})});
}

TEST_CASE("membership in the plate cone") {
  ConeH plate = nonplanar_plate();
  CHECK(plate.inequalities.size() == 7);
  CHECK(contains(plate, root6(1, 3)));
  CHECK(contains(plate, ZVec(6, Int(0))));
  CHECK_FALSE(contains(plate, root6(2, 1)));
  CHECK_THROWS_AS(contains(plate, zvec({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("extreme rays of the plate are the eight roots") {
  ConeV roots = plate_roots();
  CHECK(roots.rays.size() == 8);
  for (const auto& r : roots.rays) {
    Int sum(0);
    for (const auto& x : r) sum += x;
    CHECK(sum == 0);
    CHECK(contains(nonplanar_plate(), r));
  }
  ConeV computed = extreme_rays(nonplanar_plate());
  CHECK(as_set(computed.rays) == as_set(roots.rays));
  CHECK(dual_description(nonplanar_plate()).lineality.empty());
}

TEST_CASE("textbook cones") {
  ConeV orthant = extreme_rays(cone_h(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(as_set(orthant.rays) ==
        std::set<ZVec>{zvec({1, 0, 0}), zvec({0, 1, 0}), zvec({0, 0, 1})});

  ConeV half = extreme_rays(cone_h(2, {{1, 0}}));
  CHECK(as_set(half.rays) ==
        std::set<ZVec>{zvec({1, 0}), zvec({0, 1}), zvec({0, -1})});
  DualDescription dd = dual_description(cone_h(2, {{1, 0}}));
  CHECK(dd.rays == ZMat{zvec({1, 0})});
  CHECK(dd.lineality.size() == 1);
}

TEST_CASE("redundancy detection") {
  ConeH padded = nonplanar_plate(true);
  CHECK(padded.inequalities.size() == 8);
  CHECK(padded.inequalities[2] == zvec({1, 1, 0, 0, 0, 0}));
  CHECK(redundant_inequality(padded, 2));
  CHECK_FALSE(redundant_inequality(nonplanar_plate(), 0));

  ConeH doubled = cone_h(2, {{1, 0}, {1, 0}, {0, 1}});
  CHECK(redundant_inequality(doubled, 0));
  CHECK(redundant_inequality(doubled, 1));
  CHECK_FALSE(redundant_inequality(doubled, 2));
  CHECK_THROWS_AS(redundant_inequality(doubled, 3), std::out_of_range);
}

TEST_CASE("conical hull membership by elimination") {
  ZMat rays = plate_roots().rays;
  CHECK(in_conical_hull(root6(1, 3), rays));
  // (1,1,-1,-1,0,0) = (e1-e3) + (e2-e4).
  CHECK(in_conical_hull(zvec({1, 1, -1, -1, 0, 0}), rays));
  CHECK(in_conical_hull(ZVec(6, Int(0)), rays));
  CHECK_FALSE(in_conical_hull(root6(2, 1), rays));
  CHECK_FALSE(in_conical_hull(zvec({1, 0, 0, 0, 0, 0}), rays));
  CHECK(in_conical_hull(ZVec(3, Int(0)), ZMat{}));
  CHECK_FALSE(in_conical_hull(zvec({1, 0, 0}), ZMat{}));
  CHECK_THROWS_AS(in_conical_hull(zvec({1, 0}), rays), std::invalid_argument);
}

TEST_CASE("cone equality between descriptions") {
  CHECK(cone_equal(nonplanar_plate(), plate_roots()));
  CHECK(cone_equal(nonplanar_plate(true), plate_roots()));

  ConeV missing = plate_roots();
  missing.rays.erase(std::find(missing.rays.begin(), missing.rays.end(), root6(1, 3)));
  CHECK_FALSE(cone_equal(nonplanar_plate(), missing));

  // The origin: two equalities in the plane against no generators at all.
  ConeH origin = cone_h(2, {}, {{1, 0}, {0, 1}});
  ConeV nothing;
  nothing.dimension = 2;
  CHECK(cone_equal(origin, nothing));
  CHECK_FALSE(cone_equal(cone_h(2, {{1, 0}}), nothing));
  CHECK_THROWS_AS(cone_equal(origin, plate_roots()), std::invalid_argument);
}

TEST_CASE("facet recovery from the ray side") {
  ConeH back = h_description(plate_roots());
  CHECK(back.dimension == 6);
  // Rank-5 span forces a single equality, the all-ones normal up to sign.
  CHECK(back.equalities.size() == 1);
  ZVec ones(6, Int(1));
  CHECK((back.equalities[0] == ones || back.equalities[0] == negated_copy(ones)));
  for (const auto& r : plate_roots().rays) CHECK(contains(back, r));
  CHECK(cone_equal(back, plate_roots()));
  CHECK(as_set(extreme_rays(back).rays) == as_set(plate_roots().rays));
}

TEST_CASE("polar of the lifted twelve-point polytope") {
  std::vector<Permutation> wreath = {
      Permutation::from_cycles(6, {{1, 2}}),
      Permutation::from_cycles(6, {{3, 4}}),
      Permutation::from_cycles(6, {{5, 6}}),
      Permutation::from_cycles(6, {{1, 3}, {2, 4}}),
      Permutation::from_cycles(6, {{3, 5}, {4, 6}})};
  LatticePointSet vertices = orbit_points({0, 0, 0, 1, 1, 1}, wreath);
  ZMat lifted;
  for (const auto& v : vertices.points) {
    ZVec row(v.begin(), v.end());
    row.push_back(1);
    lifted.push_back(std::move(row));
  }
  DualDescription polar = dual_description(cone_h(7, std::move(lifted)));
  CHECK(polar.rays.size() == 20);
  CHECK(polar.lineality.size() == 1);
  ZVec slice = zvec({1, 1, 1, 1, 1, 1, -3});
  CHECK((polar.lineality[0] == slice || polar.lineality[0] == negated_copy(slice)));
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(dual_description(cone_h(9, {ZVec(9, Int(1))})),
                  std::invalid_argument);
  ZMat many(17, zvec({1, 0}));
  CHECK_THROWS_AS(dual_description(cone_h(2, std::move(many))),
                  std::invalid_argument);
}

TEST_CASE("edge directions in the orbit match the plate roots") {
  CHECK(edge_directions_match_neighbors());
}

TEST_CASE("random cones: rays satisfy, combinations satisfy, members decompose") {
  std::mt19937 rng(55347291);
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  long long memberChecks = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int dim = draw(2, 4);
    int m = draw(1, 6);
    ZMat ineq;
    while (static_cast<int>(ineq.size()) < m) {
      ZVec row(dim);
      for (auto& x : row) x = draw(-3, 3);
      if (std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; }))
        continue;
      ineq.push_back(std::move(row));
    }
    ConeH h = cone_h(dim, std::move(ineq));
    DualDescription dd = dual_description(h);
    for (const auto& r : dd.rays) CHECK(contains(h, r));
    for (const auto& l : dd.lineality) {
      CHECK(contains(h, l));
      CHECK(contains(h, negated_copy(l)));
    }

    ZMat gens = extreme_rays(h).rays;
    for (int combo = 0; combo < 50; ++combo) {
      ZVec x(dim, Int(0));
      for (const auto& g : gens) {
        int c = draw(0, 4);
        for (int i = 0; i < dim; ++i) x[i] += c * g[i];
      }
      CHECK(contains(h, x));
    }

    if (gens.size() <= 8) {
      for (int sample = 0; sample < 300; ++sample) {
        ZVec x(dim);
        for (auto& v : x) v = draw(-5, 5);
        if (!contains(h, x)) continue;
        ++memberChecks;
        CHECK(in_conical_hull(x, gens));
      }
    }

    if (dd.lineality.empty()) {
      // Pointed cones round-trip through the facet description.
      ConeH back = h_description(extreme_rays(h));
      CHECK(as_set(extreme_rays(back).rays) == as_set(gens));
    }
  }
  CHECK(memberChecks > 1000);
}
