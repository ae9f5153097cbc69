#include "ptgeom/ptsum.hpp"

#include "ptgeom/invariants.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace ptgeom {

namespace {

void validate_labels(int n, const std::vector<int>& labels, const char* what) {
  for (int a : labels)
    if (a < 1 || a > n) throw std::invalid_argument(std::string(what) + ": label out of range");
}

// Kahn's algorithm on the constraint digraph; leftover nodes mean a cycle.
void reject_cyclic(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<int>> adj(n + 1);
  std::vector<int> indeg(n + 1, 0);
  for (auto [a, b] : pairs) {
    adj[a].push_back(b);
    ++indeg[b];
  }
  std::queue<int> q;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) q.push(v);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++seen;
    for (int w : adj[v])
      if (--indeg[w] == 0) q.push(w);
  }
  if (seen != n) throw std::invalid_argument("cyclic position constraints");
}

std::vector<int> canonical_cycle(std::vector<int> word) {
  auto it = std::find(word.begin(), word.end(), 1);
  std::rotate(word.begin(), it, word.end());
  return word;
}

bool triple_in_cyclic_order(const std::vector<int>& cycle, const std::array<int, 3>& t) {
  int n = static_cast<int>(cycle.size());
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
  int db = (pos[t[1]] - pos[t[0]] + n) % n;
  int dc = (pos[t[2]] - pos[t[0]] + n) % n;
  return db != 0 && dc != 0 && db < dc;
}

Rational constant_value(const Polynomial& p) {
  return p.coefficient(Exponents(p.variable_count(), 0));
}

std::optional<Rational> rational_sqrt(const Rational& c) {
  if (c < 0) return std::nullopt;
  Int num = numerator(c), den = denominator(c);
  Int sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace

std::vector<std::vector<int>> enumerate_position_constrained(
    int n, const PositionConstraintSet& c) {
  if (n < 1 || n > 10) throw std::invalid_argument("n must be between 1 and 10");
  for (auto [a, b] : c.pairs) {
    validate_labels(n, {a, b}, "position pair");
    if (a == b) throw std::invalid_argument("position pair (a,a) is not allowed");
  }
  reject_cyclic(n, c.pairs);
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<int> pos(n + 1, 0);
  std::vector<std::vector<int>> out;
  do {
    for (int i = 0; i < n; ++i) pos[word[i]] = i + 1;
    bool ok = true;
    for (auto [a, b] : c.pairs) {
      if (pos[a] >= pos[b]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<std::vector<int>> enumerate_cycles_with_subcycles(
    int n, const CyclicSubwordConstraintSet& c) {
  if (n < 3 || n > 10) throw std::invalid_argument("n must be between 3 and 10");
  for (const auto& t : c.triples) {
    validate_labels(n, {t[0], t[1], t[2]}, "triple");
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
      throw std::invalid_argument("triple with repeated labels");
  }
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> cycle;
    cycle.reserve(n);
    cycle.push_back(1);
    cycle.insert(cycle.end(), rest.begin(), rest.end());
    bool ok = true;
    for (const auto& t : c.triples) {
      if (!triple_in_cyclic_order(cycle, t)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(cycle));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

FactoredRational pt_sum(const std::vector<std::vector<int>>& words) {
  if (words.empty()) throw std::invalid_argument("pt_sum needs a nonempty set");
  FactoredRational acc = parke_taylor(words.front());
  for (std::size_t i = 1; i < words.size(); ++i)
    acc = rf_add(acc, parke_taylor(words[i]));
  return acc;
}

PlateSumResult plate_sum(const std::vector<std::vector<int>>& words) {
  if (words.empty()) throw std::invalid_argument("plate_sum needs a nonempty set");
  FactoredRational acc = plate_function(Permutation(words.front()));
  for (std::size_t i = 1; i < words.size(); ++i)
    acc = rf_add(acc, plate_function(Permutation(words[i])));
  PlateSumResult result{acc.reduce(), {}};
  const Polynomial& num = result.sum.numerator();
  if (num.is_zero()) return result;
  int vars = result.sum.variable_count();
  std::vector<LinearFactor> factors;
  for (const auto& [f, mult] : result.sum.denominator()) factors.push_back(f);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      Polynomial divisor = factors[i].to_polynomial(vars) + factors[j].to_polynomial(vars);
      if (divisor.is_zero()) continue;
      if (auto q = try_divide(num, divisor))
        result.splits.push_back(TwoFractionSplit{factors[i], factors[j], *q});
    }
  }
  return result;
}

std::optional<Polynomial> polynomial_sqrt(const Polynomial& p) {
  int vars = p.variable_count();
  if (p.is_zero()) return Polynomial::zero(vars);
  if (p.degree() % 2 != 0) return std::nullopt;
  auto lead = *p.terms().rbegin();
  Exponents le = lead.first;
  for (int& e : le) {
    if (e % 2 != 0) return std::nullopt;
    e /= 2;
  }
  auto lc = rational_sqrt(lead.second);
  if (!lc) return std::nullopt;
  Polynomial root = Polynomial::monomial(vars, le, *lc);
  Polynomial rem = p - root * root;
  // Divide leading terms against 2*LT(root); the remainder's leading term
  // strictly decreases, so this terminates on the finite monomial set.
  const Rational twoLc = 2 * (*lc);
  while (!rem.is_zero()) {
    auto rl = *rem.terms().rbegin();
    Exponents te = rl.first;
    bool feasible = true;
    for (std::size_t k = 0; k < te.size(); ++k) {
      te[k] -= le[k];
      if (te[k] < 0) {
        feasible = false;
        break;
      }
    }
    if (!feasible) return std::nullopt;
    Polynomial t = Polynomial::monomial(vars, te, rl.second / twoLc);
    rem = rem - (root.scale(2) * t) - t * t;
    root = root + t;
  }
  return root;
}

std::optional<Polynomial> verify_square_numerator(const FactoredRational& f) {
  const Polynomial& num = f.numerator();
  if (f.variable_count() == 6) {
    for (const auto& pairing : Pairing::all()) {
      Polynomial c = build_C(pairing);
      Polynomial sq = c * c;
      if (num == sq || num == -sq) return c;
    }
  }
  if (auto r = polynomial_sqrt(num)) return r;
  return polynomial_sqrt(-num);
}

namespace {

NineParticleReport nine_report_from_words(std::vector<std::vector<int>> words,
                                          int n, int foldLimit) {
  NineParticleReport report;
  report.termCount = static_cast<long long>(words.size());
  if (words.empty()) return report;

  std::map<std::vector<int>, long long> cycleMult;
  for (auto& w : words) ++cycleMult[canonical_cycle(std::move(w))];
  report.distinctCycles = static_cast<long long>(cycleMult.size());

  // Cycles with equal adjacency multisets carry identical fractions up to
  // sign, so only the net coefficient per denominator multiset matters.
  std::map<FactorMultiset, Rational> net;
  for (const auto& [cycle, mult] : cycleMult) {
    FactoredRational pt = parke_taylor(cycle);
    net[pt.denominator()] += constant_value(pt.numerator()) * mult;
  }
  report.groupCount = static_cast<long long>(net.size());
  std::erase_if(net, [](const auto& kv) { return kv.second == 0; });
  report.survivingGroups = static_cast<long long>(net.size());

  if (report.survivingGroups > foldLimit) return report;
  report.folded = true;
  FactoredRational acc = FactoredRational::zero(n);
  for (const auto& [den, coeff] : net)
    acc = rf_add(acc, FactoredRational(Polynomial::constant(n, coeff), den));
  report.value = acc.reduce();
  report.squareRoot = verify_square_numerator(*report.value);
  return report;
}

}  // namespace

NineParticleReport nine_particle_sum(const PositionConstraintSet& c, int foldLimit) {
  const int n = 9;
  return nine_report_from_words(enumerate_position_constrained(n, c), n, foldLimit);
}

NineParticleReport nine_particle_sum(const CyclicSubwordConstraintSet& c,
                                     int foldLimit) {
  const int n = 9;
  return nine_report_from_words(enumerate_cycles_with_subcycles(n, c), n, foldLimit);
}

ConstraintFile parse_constraint_file(const std::string& jsonText) {
  nlohmann::json j = nlohmann::json::parse(jsonText);
  ConstraintFile out;
  if (!j.is_object()) throw std::invalid_argument("constraint file must be a JSON object");
  out.n = j.value("n", 0);
  if (j.contains("positionPairs")) {
    PositionConstraintSet ps;
    for (const auto& pair : j.at("positionPairs")) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("positionPairs entries must be [a,b]");
      ps.pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    out.positions = std::move(ps);
  }
  if (j.contains("tripleCycles")) {
    CyclicSubwordConstraintSet ts;
    for (const auto& triple : j.at("tripleCycles")) {
      if (!triple.is_array() || triple.size() != 3)
        throw std::invalid_argument("tripleCycles entries must be [a,b,c]");
      ts.triples.push_back({triple[0].get<int>(), triple[1].get<int>(), triple[2].get<int>()});
    }
    out.triples = std::move(ts);
  }
  return out;
}

}  // namespace ptgeom
