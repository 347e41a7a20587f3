#include "famcode/division.hpp"

#include <algorithm>
#include <map>

namespace famcode {

Scope scopeUpTo(int k) {
  return [k](int v) { return v < k; };
}

Scope scopeAll() {
  return [](int) { return true; };
}

namespace {

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

using OrderedTerms = std::map<Monomial, Rational, OrderLess>;

void addTo(OrderedTerms& t, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, ins] = t.emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

bool covers(const Monomial& lead, const Scope& scope, const Monomial& m) {
  if (!lead.divides(m)) return false;
  Monomial q = lead.quotient(m);
  for (std::size_t i = 0; i < q.width(); ++i)
    if (q[i] > 0 && !scope(static_cast<int>(i))) return false;
  return true;
}

struct SeriesDivisor {
  Poly poly;
  Monomial init;
  Rational coeff;
  Scope scope;
};

// Shared loop of the two formal divisions. The minimal term is popped; its
// reduction only introduces larger terms, so terms moved to the remainder
// stay final.
DivisionResult formalLoop(const TruncatedSeries& f, const std::vector<SeriesDivisor>& divs,
                          const MonomialOrder& order, int D, bool janet) {
  if (D > f.degree) throw DivisionError("truncation degree exceeds the dividend's truncation");
  DivisionResult res;
  res.truncation = D;
  res.quotients.assign(divs.size(), Poly());
  OrderedTerms work(OrderLess{&order});
  for (const auto& [m, c] : f.value.terms())
    if (m.degree() <= D) addTo(work, m, c);
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Rational c = it->second;
    work.erase(it);
    int pick = -1;
    for (std::size_t k = 0; k < divs.size(); ++k) {
      if (janet ? covers(divs[k].init, divs[k].scope, m) : divs[k].init.divides(m)) {
        pick = static_cast<int>(k);
        break;
      }
    }
    if (pick < 0 && janet) {
      for (const auto& d : divs)
        if (d.init.divides(m)) throw DivisionError("reducible term covered by no Janet block");
    }
    if (pick < 0) {
      res.remainder.addTerm(m, c);
      continue;
    }
    const auto& d = divs[static_cast<std::size_t>(pick)];
    Monomial q = d.init.quotient(m);
    Rational a = c / d.coeff;
    res.quotients[static_cast<std::size_t>(pick)].addTerm(q, a);
    int qd = q.degree();
    for (const auto& [gm, gc] : d.poly.terms()) {
      if (gm == d.init || gm.degree() + qd > D) continue;
      addTo(work, q * gm, -a * gc);
    }
  }
  return res;
}

}  // namespace

DivisionResult formalDivide(const TruncatedSeries& f, const std::vector<TruncatedSeries>& gens,
                            const MonomialOrder& order, int D) {
  std::vector<SeriesDivisor> divs;
  for (const auto& g : gens) {
    if (g.value.isZero()) throw DivisionError("zero divisor");
    if (g.degree < D) throw DivisionError("truncation degree exceeds a divisor's truncation");
    auto in = initialVector(g.value, order);
    divs.push_back({g.value.truncate(D), in.monomial, in.coeff, scopeAll()});
  }
  return formalLoop(f, divs, order, D, false);
}

DivisionResult janetFormalDivide(const TruncatedSeries& f,
                                 const std::vector<std::pair<TruncatedSeries, int>>& janetGens,
                                 const MonomialOrder& order, int D) {
  std::vector<SeriesDivisor> divs;
  for (const auto& [g, scope] : janetGens) {
    if (g.value.isZero()) throw DivisionError("zero divisor");
    if (g.degree < D) throw DivisionError("truncation degree exceeds a divisor's truncation");
    auto in = initialVector(g.value, order);
    divs.push_back({g.value.truncate(D), in.monomial, in.coeff, scopeUpTo(scope)});
  }
  return formalLoop(f, divs, order, D, true);
}

DivisionResult janetPolyDivide(const Poly& F, const std::vector<ScopedDivisor>& basis,
                               const MonomialOrder& order, bool strict) {
  DivisionResult res;
  res.quotients.assign(basis.size(), Poly());
  std::vector<InitialTerm> leads;
  for (const auto& b : basis) {
    if (b.poly.isZero()) throw DivisionError("zero divisor");
    leads.push_back(leadingVector(b.poly, order));
  }
  OrderedTerms work(OrderLess{&order});
  for (const auto& [m, c] : F.terms()) addTo(work, m, c);
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Monomial m = it->first;
    Rational c = it->second;
    work.erase(it);
    int pick = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (covers(leads[k].monomial, basis[k].scope, m)) {
        pick = static_cast<int>(k);
        break;
      }
    }
    if (pick < 0) {
      if (strict)
        for (const auto& l : leads)
          if (l.monomial.divides(m)) throw DivisionError("leading module is not an echelon for the given scopes");
      res.remainder.addTerm(m, c);
      continue;
    }
    const auto& lead = leads[static_cast<std::size_t>(pick)];
    Monomial q = lead.monomial.quotient(m);
    Rational a = c / lead.coeff;
    res.quotients[static_cast<std::size_t>(pick)].addTerm(q, a);
    for (const auto& [gm, gc] : basis[static_cast<std::size_t>(pick)].poly.terms()) {
      if (gm == lead.monomial) continue;
      addTo(work, q * gm, -a * gc);
    }
  }
  return res;
}

DivisionResult janetPolyDivide(const Poly& F, const std::vector<std::pair<Poly, int>>& basis,
                               const MonomialOrder& order) {
  std::vector<ScopedDivisor> b;
  for (const auto& [p, s] : basis) b.push_back({p, scopeUpTo(s)});
  return janetPolyDivide(F, b, order, true);
}

int firstUnusedVar(const std::vector<Poly>& polys) {
  int w = 0;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) w = std::max(w, static_cast<int>(t.first.width()));
  return w;
}

}  // namespace famcode
