#include "famcode/division.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace famcode {

namespace {

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

using OrderedTerms = std::map<Monomial, Rational, OrderLess>;

struct Element {
  Poly poly;
  Monomial lead;
  Rational lc;
  std::vector<Poly> cof;
};

void axpy(std::vector<Poly>& dst, const std::vector<Poly>& src, const Monomial& m, const Rational& c) {
  for (std::size_t k = 0; k < dst.size(); ++k)
    if (!src[k].isZero()) dst[k] -= src[k].mulTerm(m, c);
}

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, std::size_t inputs, bool lift)
      : order_(order), inputs_(inputs), lift_(lift) {}

  // Full reduction of p (with cofactors) by the current basis, skipping `skip`.
  void reduce(Poly& p, std::vector<Poly>& cof, int skip = -1) const {
    OrderedTerms work(OrderLess{&order_});
    for (const auto& [m, c] : p.terms()) work.emplace(m, c);
    Poly out;
    while (!work.empty()) {
      auto it = std::prev(work.end());
      Monomial m = it->first;
      Rational c = it->second;
      work.erase(it);
      const Element* red = nullptr;
      for (std::size_t k = 0; k < G_.size(); ++k) {
        if (static_cast<int>(k) == skip || !alive_[k]) continue;
        if (G_[k].lead.divides(m)) {
          red = &G_[k];
          break;
        }
      }
      if (!red) {
        out.addTerm(m, c);
        continue;
      }
      Monomial q = red->lead.quotient(m);
      Rational a = c / red->lc;
      for (const auto& [gm, gc] : red->poly.terms()) {
        if (gm == red->lead) continue;
        Monomial t = q * gm;
        auto [jt, ins] = work.emplace(t, -a * gc);
        if (!ins) {
          jt->second -= a * gc;
          if (jt->second == 0) work.erase(jt);
        }
      }
      if (lift_) axpy(cof, red->cof, q, a);
    }
    p = std::move(out);
  }

  void add(Poly p, std::vector<Poly> cof) {
    auto lv = leadingVector(p, order_);
    Element e{std::move(p), lv.monomial, lv.coeff, std::move(cof)};
    std::size_t k = G_.size();
    // Gebauer-Moeller deletion of old pairs made redundant by the new lead.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      auto [deg, i, j] = *it;
      const Monomial& li = G_[static_cast<std::size_t>(i)].lead;
      const Monomial& lj = G_[static_cast<std::size_t>(j)].lead;
      Monomial l = li.lcm(lj);
      if (e.lead.divides(l) && li.lcm(e.lead) != l && lj.lcm(e.lead) != l) it = pairs_.erase(it);
      else ++it;
    }
    G_.push_back(std::move(e));
    alive_.push_back(true);
    const Monomial& lk = G_[k].lead;
    for (std::size_t i = 0; i < k; ++i) {
      if (!alive_[i] || G_[i].lead.comp() != lk.comp()) continue;
      Monomial l = G_[i].lead.lcm(lk);
      bool coprime = lk.comp() == 1 && G_[i].poly.isScalar() && G_[k].poly.isScalar() &&
                     l.degree() == lk.degree() + G_[i].lead.degree();
      if (coprime) continue;
      pairs_.emplace(l.degree(), static_cast<int>(i), static_cast<int>(k));
    }
  }

  void run() {
    while (!pairs_.empty()) {
      auto [deg, i, j] = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const Element& a = G_[static_cast<std::size_t>(i)];
      const Element& b = G_[static_cast<std::size_t>(j)];
      Monomial l = a.lead.lcm(b.lead);
      Monomial qa = a.lead.quotient(l), qb = b.lead.quotient(l);
      Rational ca = 1 / a.lc, cb = 1 / b.lc;
      Poly s = a.poly.mulTerm(qa, ca) - b.poly.mulTerm(qb, cb);
      std::vector<Poly> cof;
      if (lift_) {
        cof.assign(inputs_, Poly());
        for (std::size_t t = 0; t < inputs_; ++t)
          cof[t] = a.cof[t].mulTerm(qa, ca) - b.cof[t].mulTerm(qb, cb);
      }
      reduce(s, cof);
      if (!s.isZero()) add(std::move(s), std::move(cof));
    }
  }

  GroebnerResult finish() {
    // Minimalize: drop elements whose lead is divisible by another live lead.
    for (std::size_t i = 0; i < G_.size(); ++i) {
      if (!alive_[i]) continue;
      for (std::size_t j = 0; j < G_.size(); ++j) {
        if (i == j || !alive_[j]) continue;
        if (G_[j].lead.divides(G_[i].lead) && (G_[j].lead != G_[i].lead || j < i)) {
          alive_[i] = false;
          break;
        }
      }
    }
    // Interreduce the tails.
    for (std::size_t i = 0; i < G_.size(); ++i) {
      if (!alive_[i]) continue;
      Element& e = G_[i];
      Poly tail = e.poly - Poly(e.lead, e.lc);
      std::vector<Poly> cof = e.cof;
      reduce(tail, cof, static_cast<int>(i));
      e.poly = tail + Poly(e.lead, e.lc);
      e.cof = std::move(cof);
    }
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < G_.size(); ++i)
      if (alive_[i]) idx.push_back(i);
    std::sort(idx.begin(), idx.end(),
              [this](std::size_t a, std::size_t b) { return order_.less(G_[a].lead, G_[b].lead); });
    GroebnerResult r;
    for (std::size_t i : idx) {
      Rational inv = 1 / G_[i].lc;
      r.basis.push_back(G_[i].poly * inv);
      if (lift_) {
        std::vector<Poly> c;
        for (const auto& p : G_[i].cof) c.push_back(p * inv);
        r.cofactors.push_back(std::move(c));
      }
    }
    return r;
  }

 private:
  const MonomialOrder& order_;
  std::size_t inputs_;
  bool lift_;
  std::vector<Element> G_;
  std::vector<bool> alive_;
  std::set<std::tuple<int, int, int>> pairs_;
};

}  // namespace

GroebnerResult groebnerBasisLift(const std::vector<Poly>& polys, const MonomialOrder& order, GroebnerOptions opts) {
  Buchberger bb(order, polys.size(), opts.lift);
  for (std::size_t k = 0; k < polys.size(); ++k) {
    Poly p = polys[k];
    std::vector<Poly> cof;
    if (opts.lift) {
      cof.assign(polys.size(), Poly());
      cof[k] = Poly(1);
    }
    bb.reduce(p, cof);
    if (!p.isZero()) bb.add(std::move(p), std::move(cof));
  }
  bb.run();
  return bb.finish();
}

std::vector<Poly> groebnerBasis(const std::vector<Poly>& polys, const MonomialOrder& order) {
  return groebnerBasisLift(polys, order).basis;
}

}  // namespace famcode
