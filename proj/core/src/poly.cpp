#include "famcode/poly.hpp"

#include <algorithm>
#include <limits>

namespace famcode {

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Poly::Poly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::addTerm(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  if (!isScalar() && !o.isScalar()) throw AmbientError("vector times vector multiplication");
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.addTerm(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Poly operator*(const Rational& c, const Poly& p) { return p * c; }

Poly Poly::mulTerm(const Monomial& m, const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [mm, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, v * c);
  return r;
}

bool Poly::isScalar() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.comp() == 1; });
}

int Poly::maxComp() const {
  int c = 0;
  for (const auto& t : terms_) c = std::max(c, t.first.comp());
  return c;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

int Poly::lowDegree() const {
  if (terms_.empty()) return -1;
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, t.first.degree());
  return d;
}

int Poly::degreeIn(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first[static_cast<std::size_t>(var)]);
  return d;
}

Rational Poly::constantTerm() const { return coeff(Monomial()); }

bool Poly::hasConstantTerm() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.isOne(); });
}

std::set<int> Poly::variables() const {
  std::set<int> v;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.first.width(); ++i)
      if (t.first[i] > 0) v.insert(static_cast<int>(i));
  return v;
}

bool Poly::involves(int var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const auto& t) { return t.first[static_cast<std::size_t>(var)] > 0; });
}

bool Poly::involvesAny(const std::function<bool(int)>& pred) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.first.width(); ++i)
      if (t.first[i] > 0 && pred(static_cast<int>(i))) return true;
  return false;
}

Poly Poly::component(int c) const {
  Poly r;
  for (const auto& [m, v] : terms_)
    if (m.comp() == c) r.terms_.emplace(m.withComp(1), v);
  return r;
}

Poly Poly::inComponent(int c) const {
  Poly r;
  for (const auto& [m, v] : terms_) r.addTerm(m.withComp(c), v);
  return r;
}

Poly Poly::truncate(int D) const {
  return filter([D](const Monomial& m) { return m.degree() <= D; });
}

Poly Poly::filter(const std::function<bool(const Monomial&)>& pred) const {
  Poly r;
  for (const auto& t : terms_)
    if (pred(t.first)) r.terms_.emplace_hint(r.terms_.end(), t);
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r;
  for (const auto& [m, v] : terms_) {
    int e = m[static_cast<std::size_t>(var)];
    if (e > 0) r.addTerm(m.withExp(var, e - 1), v * e);
  }
  return r;
}

Poly Poly::zeroVars(const std::function<bool(int)>& pred) const {
  Poly r;
  for (const auto& t : terms_) {
    bool keep = true;
    for (std::size_t i = 0; i < t.first.width() && keep; ++i)
      if (t.first[i] > 0 && pred(static_cast<int>(i))) keep = false;
    if (keep) r.terms_.emplace_hint(r.terms_.end(), t);
  }
  return r;
}

Poly Poly::coeffOf(int var, int k) const {
  Poly r;
  for (const auto& [m, v] : terms_)
    if (m[static_cast<std::size_t>(var)] == k) r.addTerm(m.withExp(var, 0), v);
  return r;
}

Poly Poly::monicAt(const Monomial& m) const {
  Rational c = coeff(m);
  if (c == 0) throw std::invalid_argument("monicAt: monomial not in support");
  return *this * Rational(1 / c);
}

TruncatedSeries truncate(const Poly& v, int D) {
  if (D < 0) throw std::invalid_argument("truncation degree must be >= 0");
  return {v.truncate(D), D};
}

Poly mulTrunc(const Poly& a, const Poly& b, int D) {
  Poly r;
  for (const auto& [m1, c1] : a.terms()) {
    int d1 = m1.degree();
    if (d1 > D) continue;
    for (const auto& [m2, c2] : b.terms())
      if (d1 + m2.degree() <= D) r.addTerm(m1 * m2, c1 * c2);
  }
  return r;
}

Poly powTrunc(const Poly& a, int k, int D) {
  Poly r(1);
  Poly base = a.truncate(D);
  while (k > 0) {
    if (k & 1) r = mulTrunc(r, base, D);
    k >>= 1;
    if (k) base = mulTrunc(base, base, D);
  }
  return r;
}

namespace {

// Substitutes term by term, caching powers of each assigned value.
template <class Mul>
Poly substituteImpl(const Poly& g, const std::map<int, Poly>& a, Mul mul) {
  std::map<std::pair<int, int>, Poly> powers;
  std::function<const Poly&(int, int)> power = [&](int var, int e) -> const Poly& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Poly p = e == 1 ? a.at(var) : mul(power(var, e - 1), a.at(var));
    return powers.emplace(key, std::move(p)).first->second;
  };
  Poly r;
  for (const auto& [m, c] : g.terms()) {
    std::vector<int> rest = m.exps();
    Poly term(1);
    for (const auto& [var, val] : a) {
      int e = m[static_cast<std::size_t>(var)];
      if (e == 0) continue;
      rest[static_cast<std::size_t>(var)] = 0;
      term = mul(term, power(var, e));
      if (term.isZero()) break;
    }
    if (term.isZero()) continue;
    r += mul(Poly(Monomial(rest)), term).inComponent(m.comp()) * c;
  }
  return r;
}

}  // namespace

Poly substitute(const Poly& g, const std::map<int, Poly>& assignment) {
  if (assignment.empty()) return g;
  return substituteImpl(g, assignment, [](const Poly& a, const Poly& b) { return a * b; });
}

TruncatedSeries substitute(const Poly& g, const std::map<int, TruncatedSeries>& assignment) {
  int D = std::numeric_limits<int>::max();
  std::map<int, Poly> vals;
  for (const auto& [var, s] : assignment) {
    if (s.value.hasConstantTerm()) throw AmbientError("substituted series must vanish at 0");
    D = std::min(D, s.degree);
    vals.emplace(var, s.value);
  }
  if (assignment.empty()) return {g, std::max(g.degree(), 0)};
  Poly r = substituteImpl(g, vals, [D](const Poly& a, const Poly& b) {
    if (!a.isScalar()) return (a * b).truncate(D);
    return mulTrunc(a, b, D);
  });
  return {r.truncate(D), D};
}

std::vector<std::vector<Rational>> jacobianAtZero(const std::vector<Poly>& H,
                                                  const std::vector<int>& yVars) {
  std::vector<std::vector<Rational>> J(H.size(), std::vector<Rational>(yVars.size()));
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = 0; j < yVars.size(); ++j)
      J[i][j] = H[i].coeff(Monomial::var(yVars[j]));
  return J;
}

int Ring::find(const std::string& n) const {
  auto it = std::find(names_.begin(), names_.end(), n);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

int Ring::index(const std::string& n) const {
  int i = find(n);
  if (i < 0) throw std::invalid_argument("unknown variable '" + n + "'");
  return i;
}

int Ring::add(const std::string& n) {
  int i = find(n);
  if (i >= 0) return i;
  names_.push_back(n);
  return size() - 1;
}

int Ring::fresh(const std::string& prefix) {
  long best = 0;
  for (const auto& n : names_) {
    if (n.size() <= prefix.size() || n.compare(0, prefix.size(), prefix) != 0) continue;
    std::string tail = n.substr(prefix.size());
    if (!std::all_of(tail.begin(), tail.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) continue;
    if (tail.size() > 9) continue;
    best = std::max(best, std::stol(tail));
  }
  names_.push_back(prefix + std::to_string(best + 1));
  return size() - 1;
}

void Ring::rename(int i, const std::string& n) {
  int other = find(n);
  if (other >= 0 && other != i) throw std::invalid_argument("variable name '" + n + "' already in use");
  names_.at(static_cast<std::size_t>(i)) = n;
}

std::string formatRational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace famcode
