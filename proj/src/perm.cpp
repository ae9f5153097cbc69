#include "ptgeom/perm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ptgeom {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 1 || x > static_cast<int>(img_.size()) || seen[x - 1])
      throw std::invalid_argument("images are not a bijection of {1..n}");
    seen[x - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n) throw std::invalid_argument("cycle label out of range");
      img[from - 1] = to;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& o) const {
  if (n() != o.n()) throw std::invalid_argument("size mismatch");
  std::vector<int> img(img_.size());
  for (int i = 1; i <= n(); ++i) img[i - 1] = img_[o(i) - 1];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 1; i <= n(); ++i) img[img_[i - 1] - 1] = i;
  return Permutation(std::move(img));
}

std::vector<int> Permutation::positions() const { return inverse().images(); }

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> type;
  for (int i = 1; i <= n(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0, j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      j = img_[j - 1];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < img_.size(); ++i) os << (i ? " " : "") << img_[i];
  os << ")";
  return os.str();
}

std::vector<Permutation> subgroup_closure(const std::vector<Permutation>& generators,
                                          std::size_t limit) {
  if (generators.empty()) throw std::invalid_argument("empty generator set");
  int n = generators[0].n();
  for (const auto& g : generators)
    if (g.n() != n) throw std::invalid_argument("generators on different sets");
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        Permutation q = g.compose(p);
        if (seen.insert(q).second) {
          if (seen.size() > limit) throw std::runtime_error("subgroup closure limit exceeded");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

void partitions_rec(int remaining, int maxPart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, maxPart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

Int factorial(int n) {
  Int f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Int class_size(const std::vector<int>& cycleType) {
  int n = 0;
  for (int p : cycleType) n += p;
  std::map<int, int> mult;
  for (int p : cycleType) ++mult[p];
  Int centralizer(1);
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) centralizer *= k;
    centralizer *= factorial(m);
  }
  return factorial(n) / centralizer;
}

Permutation class_representative(const std::vector<int>& cycleType) {
  int n = 0;
  for (int p : cycleType) n += p;
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int p : cycleType) {
    std::vector<int> cyc(p);
    for (int i = 0; i < p; ++i) cyc[i] = next++;
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(n, cycles);
}

namespace {

std::vector<int> normalize_partition(std::vector<int> p) {
  std::erase_if(p, [](int x) { return x == 0; });
  std::sort(p.rbegin(), p.rend());
  for (int x : p)
    if (x < 0) throw std::invalid_argument("negative partition part");
  return p;
}

using MNKey = std::pair<std::vector<int>, std::vector<int>>;

// Beta numbers b_i = lambda_i + (r - i); removing a border strip of size k
// is moving one bead down k positions on the abacus; the height is the
// number of beads jumped over.
Int mn_rec(const std::vector<int>& lam, const std::vector<int>& mu, std::size_t muIdx,
           std::map<MNKey, Int>& memo) {
  if (muIdx == mu.size()) return lam.empty() ? Int(1) : Int(0);
  if (lam.empty()) return Int(0);
  MNKey key{lam, std::vector<int>(mu.begin() + muIdx, mu.end())};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int k = mu[muIdx];
  int r = static_cast<int>(lam.size());
  std::vector<int> beta(r);
  for (int i = 0; i < r; ++i) beta[i] = lam[i] + (r - 1 - i);
  std::set<int> betaSet(beta.begin(), beta.end());

  Int total(0);
  for (int i = 0; i < r; ++i) {
    int c = beta[i] - k;
    if (c < 0 || betaSet.count(c)) continue;
    int height = 0;
    for (int b : beta)
      if (c < b && b < beta[i]) ++height;
    std::vector<int> nb = beta;
    nb[i] = c;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> newLam(r);
    for (int j = 0; j < r; ++j) newLam[j] = nb[j] - (r - 1 - j);
    while (!newLam.empty() && newLam.back() == 0) newLam.pop_back();
    Int sub = mn_rec(newLam, mu, muIdx + 1, memo);
    if (height % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace

Int mn_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
  auto lam = normalize_partition(lambda);
  auto m = normalize_partition(mu);
  int a = 0, b = 0;
  for (int x : lam) a += x;
  for (int x : m) b += x;
  if (a != b) throw std::invalid_argument("partition sizes differ");
  std::map<MNKey, Int> memo;
  return mn_rec(lam, m, 0, memo);
}

Int hook_dimension(const std::vector<int>& lambda) {
  auto lam = normalize_partition(lambda);
  int n = 0;
  for (int x : lam) n += x;
  std::vector<int> conj;
  for (int c = 0;; ++c) {
    int h = 0;
    for (int x : lam)
      if (x > c) ++h;
    if (h == 0) break;
    conj.push_back(h);
  }
  Int prod(1);
  for (std::size_t i = 0; i < lam.size(); ++i) {
    for (int j = 0; j < lam[i]; ++j) {
      prod *= (lam[i] - j) + (conj[j] - static_cast<int>(i)) - 1;
    }
  }
  return factorial(n) / prod;
}

Polynomial act(const Permutation& g, const Polynomial& p) {
  if (g.n() != p.variable_count()) throw std::invalid_argument("size mismatch");
  Polynomial r(p.variable_count());
  Exponents e(p.variable_count());
  for (const auto& [a, c] : p.terms()) {
    for (int i = 1; i <= g.n(); ++i) e[g(i) - 1] = a[i - 1];
    r.add_term(e, c);
  }
  return r;
}

std::vector<int> permute_vector(const Permutation& g, const std::vector<int>& v) {
  if (g.n() != static_cast<int>(v.size())) throw std::invalid_argument("size mismatch");
  std::vector<int> w(v.size());
  for (int i = 1; i <= g.n(); ++i) w[g(i) - 1] = v[i - 1];
  return w;
}

Pairing::Pairing(std::pair<int, int> a, std::pair<int, int> b, std::pair<int, int> c)
    : blocks_{a, b, c} {
  std::set<int> seen;
  for (auto& [i, j] : blocks_) {
    if (i > j) std::swap(i, j);
    seen.insert(i);
    seen.insert(j);
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (seen != std::set<int>{1, 2, 3, 4, 5, 6})
    throw std::invalid_argument("pairing must cover {1..6} with disjoint pairs");
}

std::vector<Pairing> Pairing::all() {
  std::vector<Pairing> out;
  std::vector<int> rest{2, 3, 4, 5, 6};
  // partner of 1, then partner of the smallest remaining label
  for (int a : rest) {
    std::vector<int> r2;
    for (int x : rest)
      if (x != a) r2.push_back(x);
    for (std::size_t k = 1; k < r2.size(); ++k) {
      std::vector<int> r3;
      for (std::size_t t = 1; t < r2.size(); ++t)
        if (t != k) r3.push_back(r2[t]);
      out.emplace_back(std::make_pair(1, a), std::make_pair(r2[0], r2[k]),
                       std::make_pair(r3[0], r3[1]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pairing Pairing::apply(const Permutation& g) const {
  return Pairing({g(blocks_[0].first), g(blocks_[0].second)},
                 {g(blocks_[1].first), g(blocks_[1].second)},
                 {g(blocks_[2].first), g(blocks_[2].second)});
}

std::string Pairing::to_string() const {
  std::ostringstream os;
  for (int b = 0; b < 3; ++b) {
    if (b) os << ",";
    os << blocks_[b].first << blocks_[b].second;
  }
  return os.str();
}

std::vector<SignedOrbitElement> orbit_pairings_up_to_sign(
    const Pairing& start, const std::vector<Permutation>& group,
    const std::function<int(const Permutation&, const Pairing&)>& signRule) {
  std::vector<Permutation> sorted = group;
  std::sort(sorted.begin(), sorted.end());
  std::map<Pairing, int> firstSign;
  for (const auto& g : sorted) {
    Pairing image = start.apply(g);
    if (!firstSign.count(image)) firstSign[image] = signRule(g, start);
  }
  std::vector<SignedOrbitElement> out;
  out.reserve(firstSign.size());
  for (const auto& [p, s] : firstSign) out.push_back({p, s});
  return out;
}

}  // namespace ptgeom
