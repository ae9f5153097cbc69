#pragma once

#include "ptgeom/polynomial.hpp"
#include "ptgeom/rational.hpp"

#include <array>
#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ptgeom {

// Permutation of {1..n} in image form: images[i-1] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Disjoint or non-disjoint cycles applied left to right on the identity.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  // (a.compose(b))(i) == a(b(i))
  Permutation compose(const Permutation& o) const;
  Permutation inverse() const;

  // positions()[i-1] = position of label i in line notation = sigma^{-1}(i)
  std::vector<int> positions() const;

  std::vector<int> cycle_type() const;  // weakly decreasing

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  auto operator<=>(const Permutation& o) const { return img_ <=> o.img_; }

  std::string to_string() const;

 private:
  std::vector<int> img_;
};

// BFS closure of the generated subgroup; throws when the element count
// exceeds limit.
std::vector<Permutation> subgroup_closure(const std::vector<Permutation>& generators,
                                          std::size_t limit = 1000000);

// All partitions of n, each weakly decreasing, enumerated in descending
// lexicographic order starting from (n).
std::vector<std::vector<int>> partitions(int n);

// Conjugacy class size in S_n from the centralizer-order formula.
Int class_size(const std::vector<int>& cycleType);

// A representative with the given cycle type, cycles on consecutive labels.
Permutation class_representative(const std::vector<int>& cycleType);

// chi^lambda evaluated on the class mu, by the Murnaghan-Nakayama rule
// (border strips via beta numbers).
Int mn_character(const std::vector<int>& lambda, const std::vector<int>& mu);

// Dimension of the irreducible S_n module by the hook-length formula.
Int hook_dimension(const std::vector<int>& lambda);

// Variable substitution x_i -> x_{sigma(i)}: exponent remap
// result[sigma(i)-1] = e[i-1].
Polynomial act(const Permutation& g, const Polynomial& p);

// Coordinate action used for orbit polytopes, matching act on exponents.
std::vector<int> permute_vector(const Permutation& g, const std::vector<int>& v);

// Perfect matching of {1..6} into three pairs, canonical form:
// each pair (i,j) with i<j, pairs sorted by first entry.
class Pairing {
 public:
  Pairing() = default;
  Pairing(std::pair<int, int> a, std::pair<int, int> b, std::pair<int, int> c);

  static std::vector<Pairing> all();  // the 15 pairings of {1..6}

  const std::array<std::pair<int, int>, 3>& blocks() const { return blocks_; }
  Pairing apply(const Permutation& g) const;
  std::string to_string() const;  // "12,34,56"

  bool operator==(const Pairing& o) const { return blocks_ == o.blocks_; }
  auto operator<=>(const Pairing& o) const { return blocks_ <=> o.blocks_; }

 private:
  std::array<std::pair<int, int>, 3> blocks_{};
};

struct SignedOrbitElement {
  Pairing pairing;
  int sign = 1;
  bool operator==(const SignedOrbitElement& o) const {
    return pairing == o.pairing && sign == o.sign;
  }
  auto operator<=>(const SignedOrbitElement& o) const = default;
};

// Orbit of a pairing under the group, tagging each orbit element with the
// sign induced on the associated polynomial (signRule(g, start), delegated
// to the invariant-polynomials sign oracle). First visit in sorted group
// order fixes the recorded sign.
std::vector<SignedOrbitElement> orbit_pairings_up_to_sign(
    const Pairing& start, const std::vector<Permutation>& group,
    const std::function<int(const Permutation&, const Pairing&)>& signRule);

}  // namespace ptgeom
