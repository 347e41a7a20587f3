#include "famcode/division.hpp"

#include <algorithm>
#include <map>

namespace famcode {

namespace {

struct Tracked {
  Poly poly;
  Poly unit;                 // coefficient of Q
  std::vector<Poly> mult;    // coefficients of P_k
  Monomial init;
  Rational coeff;
  int ecart = 0;
};

int ecartOf(const Poly& p, const Monomial& init) { return p.degree() - init.degree(); }

}  // namespace

WeakNormalFormResult moraWeakNormalForm(const Poly& Q, const std::vector<Poly>& P, const MonomialOrder& order) {
  std::size_t N = P.size();
  std::vector<Tracked> T;
  for (std::size_t k = 0; k < N; ++k) {
    if (P[k].isZero()) continue;
    Tracked t;
    t.poly = P[k];
    t.mult.assign(N, Poly());
    t.mult[k] = Poly(-1);
    auto in = initialVector(P[k], order);
    t.init = in.monomial;
    t.coeff = in.coeff;
    t.ecart = ecartOf(P[k], t.init);
    T.push_back(std::move(t));
  }
  // h = unit * Q - sum mult_k P_k is maintained throughout.
  Tracked h;
  h.poly = Q;
  h.unit = Poly(1);
  h.mult.assign(N, Poly());
  while (!h.poly.isZero()) {
    auto in = initialVector(h.poly, order);
    h.init = in.monomial;
    h.coeff = in.coeff;
    h.ecart = ecartOf(h.poly, h.init);
    int best = -1;
    for (std::size_t k = 0; k < T.size(); ++k) {
      if (!T[k].init.divides(h.init)) continue;
      if (best < 0 || T[k].ecart < T[static_cast<std::size_t>(best)].ecart) best = static_cast<int>(k);
    }
    if (best < 0) break;
    Tracked g = T[static_cast<std::size_t>(best)];
    if (g.ecart > h.ecart) T.push_back(h);
    Monomial q = g.init.quotient(h.init);
    Rational a = h.coeff / g.coeff;
    h.poly -= g.poly.mulTerm(q, a);
    if (!g.unit.isZero()) h.unit -= g.unit.mulTerm(q, a);
    for (std::size_t k = 0; k < N; ++k)
      if (!g.mult[k].isZero()) h.mult[k] -= g.mult[k].mulTerm(q, a);
  }
  WeakNormalFormResult r;
  r.unit = h.unit;
  r.multipliers = h.mult;
  r.remainder = h.poly;
  return r;
}

StandardBasisResult lazardStandardBasisLift(const std::vector<Poly>& polys, const MonomialOrder& localOrder,
                                            int u, bool lift) {
  std::vector<Poly> hom;
  for (const auto& p : polys) {
    int D = p.degree();
    Poly h;
    for (const auto& [m, c] : p.terms()) h.addTerm(m * Monomial::var(u, D - m.degree()), c);
    hom.push_back(h);
  }
  MonomialOrder ho = homogenizedOrder(localOrder, u);
  GroebnerResult gb = groebnerBasisLift(hom, ho, GroebnerOptions{lift});
  std::map<int, Poly> dehom{{u, Poly(1)}};
  StandardBasisResult r;
  for (std::size_t j = 0; j < gb.basis.size(); ++j) {
    Poly d = substitute(gb.basis[j], dehom);
    if (d.isZero()) continue;
    r.basis.push_back(d);
    if (lift) {
      std::vector<Poly> c;
      for (const auto& cf : gb.cofactors[j]) c.push_back(substitute(cf, dehom));
      r.cofactors.push_back(std::move(c));
    }
  }
  return r;
}

std::vector<Poly> lazardStandardBasis(const std::vector<Poly>& polys, const MonomialOrder& localOrder) {
  return lazardStandardBasisLift(polys, localOrder, firstUnusedVar(polys), false).basis;
}

}  // namespace famcode
