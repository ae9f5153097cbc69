#include "ptgeom/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace ptgeom {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(int vars) : vars_(vars) {
  if (vars < 0) throw std::invalid_argument("negative variable count");
}

Polynomial Polynomial::zero(int vars) { return Polynomial(vars); }

Polynomial Polynomial::constant(int vars, const Rational& c) {
  Polynomial p(vars);
  if (c != 0) p.terms_.emplace(Exponents(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int vars, int index) {
  if (index < 1 || index > vars) throw std::invalid_argument("variable index out of range");
  Polynomial p(vars);
  Exponents e(vars, 0);
  e[index - 1] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(int vars, const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars) throw std::invalid_argument("exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  Polynomial p(vars);
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponents> Polynomial::support() const {
  std::vector<Exponents> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

void Polynomial::check_vars(const Polynomial& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable count mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_vars(o);
  Polynomial r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_vars(o);
  Polynomial r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_vars(o);
  Polynomial r(vars_);
  Exponents e(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      Rational c = ca * cb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial Polynomial::scale(const Rational& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(vars_, 1);
  Polynomial base(*this);
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != vars_) throw std::invalid_argument("point length mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < vars_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::differentiate(int varIndex) const {
  if (varIndex < 1 || varIndex > vars_) throw std::invalid_argument("variable index out of range");
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    int k = e[varIndex - 1];
    if (k == 0) continue;
    Exponents e2 = e;
    e2[varIndex - 1] = k - 1;
    r.add_term(e2, c * k);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(it->second);
    bool sep = true;
    for (int i = 0; i < vars_; ++i) {
      if (it->first[i] == 0) continue;
      os << (sep ? " * " : " ") << "x" << (i + 1) << "^" << it->first[i];
      sep = false;
    }
  }
  return os.str();
}

namespace {

// One term: "coeff" or "coeff * xI^E xJ^F ...".
void parse_term(const std::string& term, int vars, Polynomial& into) {
  std::istringstream is(term);
  std::string coeffTok;
  if (!(is >> coeffTok)) throw std::invalid_argument("empty term");
  Rational c = rational_from_string(coeffTok);
  Exponents e(vars, 0);
  std::string tok;
  bool expectStar = true;
  while (is >> tok) {
    if (expectStar) {
      if (tok != "*") throw std::invalid_argument("expected '*' in term");
      expectStar = false;
      continue;
    }
    if (tok.size() < 4 || tok[0] != 'x') throw std::invalid_argument("bad monomial token: " + tok);
    auto caret = tok.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("bad monomial token: " + tok);
    int idx = std::stoi(tok.substr(1, caret - 1));
    int exp = std::stoi(tok.substr(caret + 1));
    if (idx < 1 || idx > vars) throw std::invalid_argument("variable index out of range in term");
    if (exp < 0) throw std::invalid_argument("negative exponent in term");
    e[idx - 1] += exp;
  }
  into.add_term(e, c);
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int vars) {
  Polynomial p(vars);
  if (text == "0") return p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto next = text.find(" + ", pos);
    std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    parse_term(term, vars, p);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return p;
}

namespace {

// true when e divides f componentwise.
bool divides(const Exponents& e, const Exponents& f) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > f[i]) return false;
  return true;
}

}  // namespace

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (a.variable_count() != b.variable_count()) throw std::invalid_argument("variable count mismatch");
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  int vars = a.variable_count();
  Polynomial q(vars);
  Polynomial r(a);
  const auto& bt = *b.terms().rbegin();
  while (!r.is_zero()) {
    const auto& rt = *r.terms().rbegin();
    if (!divides(bt.first, rt.first)) throw DivisionError(r);
    Exponents e(vars);
    for (int i = 0; i < vars; ++i) e[i] = rt.first[i] - bt.first[i];
    Rational c = rt.second / bt.second;
    Polynomial t = Polynomial::monomial(vars, e, c);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
  try {
    return exact_divide(a, b);
  } catch (const DivisionError&) {
    return std::nullopt;
  }
}

}  // namespace ptgeom
