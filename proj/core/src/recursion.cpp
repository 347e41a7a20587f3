#include "famcode/reduction.hpp"

#include <algorithm>
#include <numeric>

namespace famcode {

namespace {

bool sameCellDivides(const Level& L, const Monomial& a, const Monomial& b) {
  int ca = L.cellOf(a), cb = L.cellOf(b);
  return ca >= 0 && ca == cb && L.coordinates(ca, a).divides(L.coordinates(cb, b));
}

/// Drops elements whose initial is a multiple of an earlier kept one (or of
/// a later one with a strictly smaller initial).
std::vector<BasisElement> minimalize(const Level& L, const std::vector<BasisElement>& in) {
  std::vector<BasisElement> out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < in.size() && !redundant; ++j) {
      if (i == j || !sameCellDivides(L, in[j].init, in[i].init)) continue;
      if (in[j].init != in[i].init || j < i) redundant = true;
    }
    if (!redundant) out.push_back(in[i]);
  }
  return out;
}

struct Split {
  std::vector<int> d;            ///< per cell, from group A
  std::vector<std::size_t> a;    ///< indices of pure x_a-power initials
  std::vector<std::size_t> b;    ///< the others
};

Split splitGroups(const Level& L, const std::vector<BasisElement>& elems) {
  Split sp;
  sp.d.assign(L.cells.size(), -1);
  const int xa = L.xa();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    int c = L.cellOf(elems[i].init);
    if (c < 0) throw ReductionError("initial vector outside every cell of the level");
    Monomial co = L.coordinates(c, elems[i].init);
    if (co.withExp(xa, 0).isOne()) {
      if (sp.d[static_cast<std::size_t>(c)] >= 0) throw ReductionError("two pure-power initials in one cell");
      sp.d[static_cast<std::size_t>(c)] = co[static_cast<std::size_t>(xa)];
      sp.a.push_back(i);
    } else {
      sp.b.push_back(i);
    }
  }
  for (std::size_t i : sp.b) {
    const Monomial& m = elems[i].init;
    int c = L.cellOf(m);
    int dc = sp.d[static_cast<std::size_t>(c)];
    if (dc < 0 || m[static_cast<std::size_t>(xa)] >= dc)
      throw BoxConditionFailed(BoxFailure{
          m, L.active,
          "box condition fails: initial vector lies in a part of the complement that is not finitely generated "
          "over the first " + std::to_string(L.active - 1) + " variables"});
  }
  return sp;
}

std::vector<BasisElement> pick(const std::vector<BasisElement>& v, const std::vector<std::size_t>& idx) {
  std::vector<BasisElement> out;
  for (std::size_t i : idx) out.push_back(v[i]);
  return out;
}

/// Term of p at its initial vector.
Poly leadPart(const BasisElement& e) { return Poly(e.init, e.poly.coeff(e.init)); }

}  // namespace

std::vector<BasisElement> reducedBasisGeneral(ReductionContext& ctx, const Level& L,
                                             const std::vector<BasisElement>& fathers) {
  std::vector<BasisElement> elems = minimalize(L, fathers);
  if (elems.empty()) return {};
  Split sp = splitGroups(L, elems);
  if (sp.b.empty()) return reducedBasisXnRegular(ctx, L, elems);

  std::vector<BasisElement> I0 = reducedBasisXnRegular(ctx, L, pick(elems, sp.a));
  const int xa = L.xa();

  // Janet multiples x_a^{j-e} G for every split cell (c, j).
  std::vector<BasisElement> multiples;
  for (std::size_t c = 0; c < L.cells.size(); ++c) {
    for (int j = 0; j < sp.d[c]; ++j) {
      std::vector<BasisElement> here;
      for (std::size_t i : sp.b) {
        const BasisElement& g = elems[i];
        if (L.cellOf(g.init) != static_cast<int>(c)) continue;
        int e = g.init[static_cast<std::size_t>(xa)];
        if (e > j) continue;
        Monomial shift = Monomial::var(xa, j - e);
        here.push_back({g.poly * Poly(shift), shift * g.init});
      }
      for (auto& g : minimalize(L, here)) {
        LevelDivision r = divideXnRegular(ctx, L, g.poly, I0, false);
        if (r.remainder.isZero()) throw ReductionError("Janet multiple reduces to zero");
        multiples.push_back({r.remainder, g.init});
      }
    }
  }

  Level child = L.child(sp.d);
  std::vector<BasisElement> Iprime = reducedBasisGeneral(ctx, child, multiples);

  std::vector<BasisElement> out;
  for (const auto& b : I0) {
    Poly lead = leadPart(b);
    if (!ctx.codeVars(lead).empty()) throw ReductionError("initial term carries code variables");
    LevelDivision r = divideGeneral(ctx, child, b.poly - lead, Iprime, false);
    out.push_back({lead + r.remainder, b.init});
  }
  out.insert(out.end(), Iprime.begin(), Iprime.end());
  return out;
}

LevelDivision divideGeneral(ReductionContext& ctx, const Level& L, const Poly& F,
                            const std::vector<BasisElement>& basis, bool quotients) {
  if (basis.empty()) {
    LevelDivision out;
    out.remainder = F;
    out.hasQuotients = quotients;
    return out;
  }
  Split sp = splitGroups(L, basis);
  if (sp.b.empty()) return divideXnRegular(ctx, L, F, basis, quotients);

  LevelDivision r1 = divideXnRegular(ctx, L, F, pick(basis, sp.a), quotients);
  LevelDivision r2 = divideGeneral(ctx, L.child(sp.d), r1.remainder, pick(basis, sp.b), quotients);
  LevelDivision out;
  out.remainder = r2.remainder;
  out.hasQuotients = quotients;
  if (quotients) {
    out.quotientNumerators.assign(basis.size(), Poly());
    for (std::size_t k = 0; k < sp.a.size(); ++k)
      out.quotientNumerators[sp.a[k]] = r1.quotientNumerators[k] * r2.denominator;
    for (std::size_t k = 0; k < sp.b.size(); ++k)
      out.quotientNumerators[sp.b[k]] = r2.quotientNumerators[k] * r1.denominator;
    out.denominator = r1.denominator * r2.denominator;
  }
  return out;
}

// ---------------------------------------------------------------- public forms

std::vector<Monomial> declaredInitials(const FamilyCode& fc) {
  if (!fc.initials.empty()) {
    if (fc.initials.size() != fc.fathers.size()) throw ReductionError("initials and fathers differ in number");
    return fc.initials;
  }
  MonomialOrder eps = extendOrder(fc.eta, fc.n);
  std::vector<Monomial> out;
  for (const auto& G : fc.fathers) {
    if (G.isZero()) throw ReductionError("zero father has no initial vector");
    Monomial m = initialMonomial(G, eps);
    if (static_cast<int>(m.width()) > fc.n)
      throw ReductionError("initial vector of a father involves code variables; declare the initials");
    out.push_back(m);
  }
  return out;
}

namespace {

std::vector<BasisElement> elementsOf(const FamilyCode& fc) {
  std::vector<Monomial> in = declaredInitials(fc);
  std::vector<BasisElement> out;
  for (std::size_t i = 0; i < fc.fathers.size(); ++i) out.push_back({fc.fathers[i], in[i]});
  return out;
}

FamilyCode basisOutput(const ReductionContext& ctx, std::vector<BasisElement> elems) {
  std::stable_sort(elems.begin(), elems.end(),
                   [&](const BasisElement& a, const BasisElement& b) { return ctx.eta.less(a.init, b.init); });
  std::vector<Poly> fathers;
  for (const auto& e : elems) fathers.push_back(e.poly);
  FamilyCode fc = ctx.output(fathers);
  for (const auto& e : elems) fc.initials.push_back(e.init);
  return fc;
}

CodeDivision divisionOutput(const ReductionContext& ctx, const LevelDivision& ld) {
  CodeDivision out;
  std::vector<Poly> extra = ld.quotientNumerators;
  extra.push_back(ld.denominator);
  out.code = ctx.output({ld.remainder}, extra);
  out.quotientNumerators = ld.quotientNumerators;
  out.denominator = ld.denominator;
  out.hasQuotients = ld.hasQuotients;
  return out;
}

ReductionContext divisionContext(const FamilyCode& f, const FamilyCode& basis) {
  if (f.fathers.size() != 1) throw ReductionError("dividend must have exactly one father");
  ReductionContext ctx = ReductionContext::from(basis);
  ctx.absorb(f);
  return ctx;
}

}  // namespace

FamilyCode reducedBasisXnRegular(const FamilyCode& fc) {
  ReductionContext ctx = ReductionContext::from(fc);
  return basisOutput(ctx, reducedBasisXnRegular(ctx, Level::top(ctx.n, ctx.s), elementsOf(fc)));
}

FamilyCode reducedBasisGeneral(const FamilyCode& fc) {
  CodeStandardBasisResult sb = codeStandardBasis(fc);
  BoxResult box = boxCondition(sb.initial);
  if (!box.ok) throw BoxConditionFailed(*box.failure);
  ReductionContext ctx = ReductionContext::from(sb.code);
  return basisOutput(ctx, reducedBasisGeneral(ctx, Level::top(ctx.n, ctx.s), elementsOf(sb.code)));
}

CodeDivision divideXnRegular(const FamilyCode& f, const FamilyCode& basis, bool quotients) {
  ReductionContext ctx = divisionContext(f, basis);
  return divisionOutput(ctx, divideXnRegular(ctx, Level::top(ctx.n, ctx.s), f.fathers[0], elementsOf(basis), quotients));
}

CodeDivision divideGeneral(const FamilyCode& f, const FamilyCode& basis, bool quotients) {
  ReductionContext ctx = divisionContext(f, basis);
  return divisionOutput(ctx, divideGeneral(ctx, Level::top(ctx.n, ctx.s), f.fathers[0], elementsOf(basis), quotients));
}

FamilyCode weierstrassNormalForm(const FamilyCode& g) {
  if (g.fathers.size() != 1) throw ReductionError("weierstrass form needs exactly one father");
  std::vector<Monomial> in = declaredInitials(g);
  const Monomial& m = in[0];
  if (!m.withExp(g.n - 1, 0).isOne() || m[static_cast<std::size_t>(g.n - 1)] == 0)
    throw ReductionError("father is not regular in the last variable");
  return reducedBasisXnRegular(g);
}

Poly inverseSeries(const Poly& S, int D) {
  Rational c0 = S.constantTerm();
  if (c0 == 0) throw ReductionError("series without constant term is not invertible");
  Poly rest = S - Poly(c0);
  Poly r(Rational(1 / c0));
  for (int k = 0; k < D; ++k) r = (Poly(1) - mulTrunc(rest, r, D)) * Rational(1 / c0);
  return r;
}

bool checkDivision(const FamilyCode& f, const FamilyCode& basis, const CodeDivision& d, int D, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!d.hasQuotients) return fail("division carries no quotients");
  if (d.quotientNumerators.size() != basis.fathers.size()) return fail("wrong number of quotients");
  ReductionContext ctx = divisionContext(f, basis);
  ctx.absorb(d.code);
  std::vector<int> ys = ctx.yOrder;
  std::vector<Poly> eqs;
  for (int y : ys) eqs.push_back(ctx.equations.at(y));
  BabySeriesApprox h = babyExpand(validateMotherCode(eqs, ys), D);
  auto ex = [&](const Poly& p) { return substitute(p, h.series).value.truncate(D); };
  Poly den = ex(d.denominator);
  Poly lhs = mulTrunc(den, ex(f.fathers[0]), D);
  Poly rhs = mulTrunc(den, ex(d.code.fathers.at(0)), D);
  for (std::size_t k = 0; k < basis.fathers.size(); ++k)
    rhs += mulTrunc(ex(d.quotientNumerators[k]), ex(basis.fathers[k]), D);
  Poly diff = lhs - rhs;
  if (!diff.isZero()) {
    MonomialOrder eps = extendOrder(ctx.eta, ctx.n);
    Monomial m = initialMonomial(diff, eps);
    return fail("identity fails at a term of degree " + std::to_string(m.degree()));
  }
  return true;
}

bool verifyReducedBasis(const FamilyCode& original, const FamilyCode& basis, int D, std::string* why,
                        bool checkTails) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  ReductionContext ctx = ReductionContext::from(basis);
  ctx.absorb(original);
  std::vector<int> ys = ctx.yOrder;
  std::vector<Poly> eqs;
  for (int y : ys) eqs.push_back(ctx.equations.at(y));
  BabySeriesApprox h = babyExpand(validateMotherCode(eqs, ys), D);
  auto ex = [&](const Poly& p) { return substitute(p, h.series).value.truncate(D); };

  std::vector<Monomial> in = declaredInitials(basis);
  std::vector<TruncatedSeries> gens;
  for (std::size_t k = 0; k < basis.fathers.size(); ++k) {
    Poly g = ex(basis.fathers[k]);
    if (g.isZero() || initialMonomial(g, ctx.eta) != in[k])
      return fail("basis element " + std::to_string(k + 1) + " does not have its declared initial vector");
    for (const auto& [m, c] : g.terms()) {
      if (m == in[k] || !checkTails) continue;
      for (const auto& i : in)
        if (i.divides(m))
          return fail("tail of basis element " + std::to_string(k + 1) + " meets the initial module");
    }
    gens.push_back(TruncatedSeries{g, D});
  }
  for (std::size_t k = 0; k < original.fathers.size(); ++k) {
    DivisionResult r = formalDivide(TruncatedSeries{ex(original.fathers[k]), D}, gens, ctx.eta, D);
    if (!r.remainder.truncate(D).isZero())
      return fail("generator " + std::to_string(k + 1) + " leaves a nonzero remainder");
  }
  return true;
}

}  // namespace famcode
