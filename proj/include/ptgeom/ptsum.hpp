#pragma once

#include "ptgeom/ratfun.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ptgeom {

// Ordered pairs (a,b) meaning label a sits left of label b in line notation
// (p_a < p_b). A directed cycle among the pairs is rejected at filter time.
struct PositionConstraintSet {
  std::vector<std::pair<int, int>> pairs;
};

// Oriented triples (a,b,c) required to occur in that cyclic order.
struct CyclicSubwordConstraintSet {
  std::vector<std::array<int, 3>> triples;
};

// All words of S_n (lexicographic order) whose positions satisfy every pair.
std::vector<std::vector<int>> enumerate_position_constrained(
    int n, const PositionConstraintSet& c);

// All n-cycles containing each triple as a cyclic subword, canonicalized by
// rotating label 1 to the front; lexicographic order.
std::vector<std::vector<int>> enumerate_cycles_with_subcycles(
    int n, const CyclicSubwordConstraintSet& c);

// rf_add-fold of parke_taylor over the words (each word read cyclically).
FactoredRational pt_sum(const std::vector<std::vector<int>>& words);

// One way of writing a plate sum as two fractions: the numerator factors as
// (first + second) * quotient, with both linear forms present in the
// denominator.
struct TwoFractionSplit {
  LinearFactor first;
  LinearFactor second;
  Polynomial quotient;
};

struct PlateSumResult {
  FactoredRational sum;  // reduced
  std::vector<TwoFractionSplit> splits;
};

// rf_add-fold of plate_function, then a greedy search over pairs of distinct
// denominator factors f,g testing whether f+g divides the numerator.
PlateSumResult plate_sum(const std::vector<std::vector<int>>& words);

// Exact square root on the term lattice, leading term first; nullopt when p
// is not a perfect square.
std::optional<Polynomial> polynomial_sqrt(const Polynomial& p);

// Square root of +-numerator(f): candidate C polynomials first (6-variable
// inputs), then generic extraction. nullopt when neither sign is a square.
std::optional<Polynomial> verify_square_numerator(const FactoredRational& f);

struct NineParticleReport {
  long long termCount = 0;        // words enumerated
  long long distinctCycles = 0;   // canonical cycles after rotation
  long long groupCount = 0;       // distinct PT denominator multisets
  long long survivingGroups = 0;  // groups with nonzero net coefficient
  bool folded = false;            // survivors were folded into `value`
  std::optional<FactoredRational> value;
  std::optional<Polynomial> squareRoot;  // sqrt of +-numerator when folded
};

// Constrained 9-particle PT sum. Words collapse onto canonical cycles, the
// cycles group by denominator multiset (equal fractions up to sign), and the
// surviving groups fold into one fraction when there are at most foldLimit
// of them; otherwise only the structure is reported.
NineParticleReport nine_particle_sum(const PositionConstraintSet& c,
                                     int foldLimit = 64);
// Same pipeline over the cycles passing the subword filter (multiplicity 1).
NineParticleReport nine_particle_sum(const CyclicSubwordConstraintSet& c,
                                     int foldLimit = 64);

// {"n": 6, "positionPairs": [[1,2],...]} and/or {"tripleCycles": [[1,2,3],...]}.
struct ConstraintFile {
  int n = 0;
  std::optional<PositionConstraintSet> positions;
  std::optional<CyclicSubwordConstraintSet> triples;
};
ConstraintFile parse_constraint_file(const std::string& jsonText);

}  // namespace ptgeom
