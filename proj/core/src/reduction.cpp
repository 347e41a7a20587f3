#include "famcode/reduction.hpp"

#include <algorithm>
#include <functional>
#include <regex>

namespace famcode {

// ---------------------------------------------------------------- levels

Level Level::top(int n, int s) {
  Level L;
  L.n = n;
  L.active = n;
  for (int c = 1; c <= s; ++c) L.cells.push_back(Cell{c, std::vector<int>(static_cast<std::size_t>(n), -1)});
  return L;
}

int Level::cellOf(const Monomial& m) const {
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    if (cell.comp != m.comp()) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int f = cell.fixed[static_cast<std::size_t>(i)];
      if (f >= 0 && m[static_cast<std::size_t>(i)] != f) ok = false;
    }
    if (ok) return static_cast<int>(c);
  }
  return -1;
}

Monomial Level::base(int c) const {
  const Cell& cell = cells.at(static_cast<std::size_t>(c));
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = std::max(cell.fixed[static_cast<std::size_t>(i)], 0);
  return Monomial(e, cell.comp);
}

bool Level::coefficientVar(int c, int v) const {
  return v >= 0 && v < n && cells.at(static_cast<std::size_t>(c)).fixed[static_cast<std::size_t>(v)] < 0;
}

Monomial Level::coordinates(int c, const Monomial& m) const {
  std::vector<int> e = m.exps();
  const Cell& cell = cells.at(static_cast<std::size_t>(c));
  for (int i = 0; i < n && static_cast<std::size_t>(i) < e.size(); ++i)
    if (cell.fixed[static_cast<std::size_t>(i)] >= 0) e[static_cast<std::size_t>(i)] = 0;
  return Monomial(e, 1);
}

Level Level::child(const std::vector<int>& d) const {
  Level L;
  L.n = n;
  L.active = active - 1;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (d[c] < 0) {
      L.cells.push_back(cells[c]);
      continue;
    }
    for (int j = 0; j < d[c]; ++j) {
      Cell cell = cells[c];
      cell.fixed[static_cast<std::size_t>(xa())] = j;
      L.cells.push_back(cell);
    }
  }
  return L;
}

// ---------------------------------------------------------------- context

Ring mergeRings(const Ring& a, const Ring& b) {
  const Ring& big = a.size() >= b.size() ? a : b;
  const Ring& small = a.size() >= b.size() ? b : a;
  for (int i = 0; i < small.size(); ++i)
    if (small.name(i) != big.name(i))
      throw AmbientError("rings disagree at variable " + std::to_string(i) + ": '" + small.name(i) + "' vs '" +
                         big.name(i) + "'");
  return big;
}

ReductionContext ReductionContext::from(const FamilyCode& fc) {
  ReductionContext ctx;
  ctx.ring = fc.ring;
  ctx.n = fc.n;
  ctx.s = fc.s;
  ctx.eta = fc.eta;
  ctx.absorb(fc);
  return ctx;
}

void ReductionContext::absorb(const FamilyCode& fc) {
  if (fc.n != n) throw AmbientError("codes over different numbers of x variables");
  ring = mergeRings(ring, fc.ring);
  s = std::max(s, fc.s);
  // Equal variables of one ring describe the same baby series; the first
  // equation seen is kept.
  for (std::size_t i = 0; i < fc.mother.yVars.size(); ++i) {
    int y = fc.mother.yVars[i];
    if (equations.count(y)) continue;
    yOrder.push_back(y);
    equations[y] = fc.mother.equations[i];
  }
}

std::set<int> ReductionContext::codeVars(const Poly& p) const {
  std::set<int> v;
  for (int i : p.variables())
    if (i >= n) v.insert(i);
  return v;
}

std::set<int> ReductionContext::closure(const std::set<int>& seeds) const {
  std::set<int> out;
  std::vector<int> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    if (!out.insert(y).second) continue;
    auto it = equations.find(y);
    if (it == equations.end()) throw ReductionError("code variable '" + ring.name(y) + "' has no equation");
    for (int v : codeVars(it->second))
      if (!out.count(v)) stack.push_back(v);
  }
  return out;
}

FamilyCode ReductionContext::output(const std::vector<Poly>& fathers, const std::vector<Poly>& extra) const {
  std::set<int> seeds;
  for (const auto& p : fathers)
    for (int v : codeVars(p)) seeds.insert(v);
  for (const auto& p : extra)
    for (int v : codeVars(p)) seeds.insert(v);
  std::set<int> keep = closure(seeds);
  FamilyCode fc;
  fc.ring = ring;
  fc.n = n;
  fc.s = s;
  fc.eta = eta;
  std::vector<int> ys;
  std::vector<Poly> eqs;
  for (int y : yOrder)
    if (keep.count(y)) {
      ys.push_back(y);
      eqs.push_back(equations.at(y));
    }
  fc.mother = validateMotherCode(eqs, ys);
  fc.fathers = fathers;
  return fc;
}

namespace {

Monomial xPart(const Monomial& m, int n) {
  return m.restrict([n](int i) { return i < n; });
}

bool xOnly(const Monomial& m, int n) { return static_cast<int>(m.width()) <= n; }

std::string cellTag(int c) { return std::to_string(c + 1); }

std::string uniqueName(const Ring& ring, std::string base) {
  while (ring.find(base) >= 0) base += "'";
  return base;
}

std::string nextTName(const Ring& ring) {
  static const std::regex re("t([0-9]{1,9})");
  long best = 0;
  for (const auto& nm : ring.names()) {
    std::smatch sm;
    if (std::regex_match(nm, sm, re)) best = std::max(best, std::stol(sm[1]));
  }
  return "t" + std::to_string(best + 1);
}

/// x variables of the equations in the closure of y.
std::set<int> closureXVars(const ReductionContext& ctx, int y) {
  std::set<int> xs;
  for (int v : ctx.closure({y}))
    for (int i : ctx.equations.at(v).variables())
      if (i < ctx.n) xs.insert(i);
  return xs;
}

struct TermOrderLess {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

/// Terms whose coordinates involve x_a only, after the code variables have
/// been replaced by series.
Poly restrictToXa(const Level& L, const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    int cell = L.cellOf(xPart(m, L.n));
    if (cell < 0) continue;
    Monomial co = L.coordinates(cell, m);
    bool ok = true;
    for (std::size_t i = 0; i < co.width() && ok; ++i)
      if (static_cast<int>(i) != L.xa() && co[i] != 0) ok = false;
    if (ok) out.addTerm(m, c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- b°

std::map<int, Poly> computeBCirc(const ReductionContext& ctx, const VirtualBasis& vb,
                                 const std::map<int, Poly>& fathers) {
  const Level& L = vb.level;
  const int xa = L.xa();
  int maxDeg = 1, maxD = 0;
  for (const auto& [c, G] : fathers) maxDeg = std::max(maxDeg, G.degree());
  for (int dm : vb.d) maxD = std::max(maxD, dm);
  for (const auto& T : vb.templates) maxDeg = std::max(maxDeg, T.lead.degree());
  const int D0 = maxDeg + maxD;

  std::set<int> seeds(vb.activeY.begin(), vb.activeY.end());
  for (const auto& [c, G] : fathers)
    for (int v : ctx.codeVars(G)) seeds.insert(v);
  std::set<int> ys = ctx.closure(seeds);

  auto run = [&](int D) {
    MotherCode m;
    for (int y : ctx.yOrder) {
      if (!ys.count(y)) continue;
      m.yVars.push_back(y);
      m.equations.push_back(ctx.equations.at(y).zeroVars([&](int v) { return v < ctx.n && v != xa; }));
    }
    BabySeriesApprox h = babyExpand(m, D);
    std::map<int, Poly> gens;
    std::map<int, Rational> leadCoeff;
    for (const auto& [c, G] : fathers) {
      Poly g = restrictToXa(L, substitute(G, h.series).value).truncate(D);
      Monomial expect = Monomial::var(xa, vb.d[static_cast<std::size_t>(c)]) * L.base(c);
      if (g.isZero() || initialMonomial(g, ctx.eta) != expect)
        throw ReductionError("father of cell " + cellTag(c) + " does not restrict to an x_a-regular series");
      gens[c] = g;
      leadCoeff[c] = g.coeff(expect);
    }
    std::map<int, Poly> out;
    for (std::size_t t = 0; t < vb.templates.size(); ++t) {
      const Template& T = vb.templates[t];
      if (!T.isY && T.unknowns.empty()) continue;
      Poly f;
      if (T.isY) f = (h.series.at(T.y).value * Poly(L.base(T.cell))).truncate(D);
      else f = Poly(T.lead);
      // Formal reduction of the minimal reducible term, truncated at D.
      std::map<Monomial, Rational, TermOrderLess> work(TermOrderLess{&ctx.eta});
      for (const auto& [mm, cc] : f.terms()) work[mm] += cc;
      Poly nf;
      while (!work.empty()) {
        auto it = work.begin();
        Monomial mm = it->first;
        Rational cc = it->second;
        work.erase(it);
        if (cc == 0 || mm.degree() > D) continue;
        int cell = L.cellOf(mm);
        int e = mm[static_cast<std::size_t>(xa)];
        int dm = cell >= 0 ? vb.d[static_cast<std::size_t>(cell)] : -1;
        if (dm < 0 || e < dm) {
          nf.addTerm(mm, cc);
          continue;
        }
        Monomial q = Monomial::var(xa, e - dm);
        Rational a = cc / leadCoeff.at(cell);
        for (const auto& [gm, gc] : gens.at(cell).terms()) {
          Monomial prod = q * gm;
          if (prod == mm || prod.degree() > D) continue;
          work[prod] -= a * gc;
          if (work[prod] == 0) work.erase(prod);
        }
      }
      Poly b;
      for (const auto& [mm, cc] : nf.terms()) {
        int cell = L.cellOf(mm);
        if (cell < 0 || vb.d[static_cast<std::size_t>(cell)] < 0) continue;
        if (mm[static_cast<std::size_t>(xa)] == 0)
          throw ReductionError("reduced basis has a constant coordinate in cell " + cellTag(cell));
        if (!T.isY && cell == T.cell)
          throw ReductionError("constant part of B_k has a nonzero entry in its own cell");
        b.addTerm(mm, cc);
      }
      out[static_cast<int>(t)] = b;
    }
    return out;
  };

  auto a = run(D0), b = run(2 * D0);
  if (a != b) throw ReductionError("constant parts b° did not stabilize between degree " + std::to_string(D0) +
                                   " and " + std::to_string(2 * D0));
  return a;
}

// ---------------------------------------------------------------- templates

VirtualBasis buildVirtualBasis(ReductionContext& ctx, const Level& L, const std::vector<int>& d,
                               const std::map<int, Poly>& fathers, const std::set<int>& extraCodes,
                               bool fixedFathers) {
  VirtualBasis vb;
  vb.level = L;
  vb.d = d;
  const int xa = L.xa();
  const std::size_t C = L.cells.size();

  std::set<int> seeds = extraCodes;
  for (const auto& [c, G] : fathers)
    for (int v : ctx.codeVars(G)) seeds.insert(v);
  std::set<int> ys = ctx.closure(seeds);
  std::map<int, std::set<int>> xvars;
  for (int y : ctx.yOrder) {
    if (!ys.count(y)) continue;
    xvars[y] = closureXVars(ctx, y);
    bool passive = std::all_of(xvars[y].begin(), xvars[y].end(), [xa](int v) { return v < xa; });
    (passive ? vb.passiveY : vb.activeY).push_back(y);
  }

  std::vector<int> regular, other;
  for (std::size_t c = 0; c < C; ++c) (d[c] >= 0 ? regular : other).push_back(static_cast<int>(c));
  std::vector<int> rank(C);
  {
    int r = 0;
    for (int c : regular) rank[static_cast<std::size_t>(c)] = r++;
    for (int c : other) rank[static_cast<std::size_t>(c)] = r++;
  }

  // Templates: B_{y,l} for active y and regular cells l whose coefficient
  // variables carry the closure of y, then one B_k per regular cell.
  for (int y : vb.activeY) {
    for (int l : regular) {
      bool allowed = std::all_of(xvars[y].begin(), xvars[y].end(), [&](int v) { return L.coefficientVar(l, v); });
      if (!allowed) continue;
      Template T;
      T.isY = true;
      T.y = y;
      T.cell = l;
      T.lead = Monomial::var(y) * L.base(l);
      vb.templates.push_back(T);
    }
  }
  std::size_t firstX = vb.templates.size();
  for (int k : regular) {
    Template T;
    T.isY = false;
    T.cell = k;
    T.lead = Monomial::var(xa, d[static_cast<std::size_t>(k)]) * L.base(k);
    vb.templates.push_back(T);
  }

  // Unknowns in the tie-break order u(y-templates), u(k), v(y), v(k).
  auto addUnknown = [&](std::size_t t, bool isV, int m, int j) {
    Template& T = vb.templates[t];
    std::string tag = T.isY ? ctx.ring.name(T.y) + ";" + cellTag(T.cell) : cellTag(T.cell);
    tag += ";" + cellTag(m);
    if (!isV) tag += ";" + std::to_string(j);
    int var = ctx.ring.add(uniqueName(ctx.ring, std::string(isV ? "v[" : "u[") + tag + "]"));
    T.unknowns.push_back(var);
    vb.unknowns.push_back(Unknown{var, isV, static_cast<int>(t), m, j});
  };
  auto withUnknowns = [&](std::size_t t) { return vb.templates[t].isY || !fixedFathers; };
  for (int pass = 0; pass < 2; ++pass) {
    bool isV = pass == 1;
    for (std::size_t t = 0; t < vb.templates.size(); ++t) {
      if (!withUnknowns(t)) continue;
      if (!isV) {
        for (int m : regular)
          for (int j = 0; j < d[static_cast<std::size_t>(m)]; ++j) addUnknown(t, false, m, j);
      } else {
        for (int m : other) addUnknown(t, true, m, 0);
      }
    }
  }
  // Reorder so that all y-template unknowns precede the k-template ones
  // within each of the u and v groups.
  std::stable_sort(vb.unknowns.begin(), vb.unknowns.end(), [&](const Unknown& a, const Unknown& b) {
    if (a.isV != b.isV) return !a.isV;
    bool ay = vb.templates[static_cast<std::size_t>(a.tpl)].isY, by = vb.templates[static_cast<std::size_t>(b.tpl)].isY;
    return ay && !by;
  });

  std::vector<int> gamma;
  for (const auto& u : vb.unknowns) gamma.push_back(u.var);

  // Constant parts, then the template polynomials.
  if (!fathers.empty() || !vb.templates.empty()) {
    std::map<int, Poly> bc = computeBCirc(ctx, vb, fathers);
    for (auto& [t, b] : bc) vb.templates[static_cast<std::size_t>(t)].bcirc = b;
  }
  for (std::size_t t = 0; t < vb.templates.size(); ++t) {
    Template& T = vb.templates[t];
    if (!withUnknowns(t)) {
      const Poly& G = fathers.at(T.cell);
      Rational lc = G.coeff(T.lead);
      if (lc == 0) throw ReductionError("reduced father of cell " + cellTag(T.cell) + " lacks its leading term");
      T.poly = G * Rational(1 / lc);
      continue;
    }
    Poly B = Poly(T.lead) - T.bcirc;
    std::size_t idx = 0;
    for (const auto& u : vb.unknowns) {
      if (u.tpl != static_cast<int>(t)) continue;
      Monomial mon = u.isV ? L.base(u.m) : Monomial::var(xa, u.j) * L.base(u.m);
      B -= Poly(Monomial::var(u.var) * mon);
      ++idx;
    }
    T.poly = B;
  }
  (void)firstX;

  OmegaSpec spec;
  spec.yVars = vb.activeY;
  spec.activeVar = xa;
  for (int i = 0; i < L.n; ++i)
    if (i != xa) spec.restVars.push_back(i);
  spec.restVars.insert(spec.restVars.end(), vb.passiveY.begin(), vb.passiveY.end());
  spec.gammaVars = gamma;
  int nn = L.n;
  Level Lc = L;
  spec.cellOf = [Lc, nn](const Monomial& m) {
    int c = Lc.cellOf(xPart(m, nn));
    if (c < 0) throw ReductionError("term outside every cell of the level");
    return c;
  };
  for (std::size_t c = 0; c < C; ++c) {
    spec.shift.push_back(std::max(d[c], 0));
    spec.rank.push_back(rank[c]);
    spec.regular.push_back(d[c] >= 0);
  }
  vb.omega = makeOmegaOrder(spec);

  std::map<int, int> pos;
  for (std::size_t i = 0; i < vb.activeY.size(); ++i) pos[vb.activeY[i]] = static_cast<int>(i);
  for (const auto& T : vb.templates) {
    int mine = T.isY ? pos.at(T.y) : -1;
    int cell = T.cell;
    Scope sc = [Lc, pos, mine, cell](int v) {
      if (v < Lc.n) return Lc.coefficientVar(cell, v);
      auto it = pos.find(v);
      if (it == pos.end()) return true;
      return it->second <= mine;
    };
    vb.divisors.push_back(ScopedDivisor{T.poly, sc});
  }
  return vb;
}

// ---------------------------------------------------------------- zeta

std::vector<ZetaRelation> zetaRelations(const ReductionContext& ctx, const VirtualBasis& vb) {
  MonomialOrder eps = extendOrder(ctx.eta, ctx.n);
  const int xa = vb.level.xa();
  std::vector<ZetaRelation> rel;
  const auto& U = vb.unknowns;
  for (std::size_t a = 0; a < U.size(); ++a) {
    for (std::size_t b = 0; b < U.size(); ++b) {
      if (a == b || U[a].isV != U[b].isV || U[a].m != U[b].m) continue;
      const Template& Ta = vb.templates[static_cast<std::size_t>(U[a].tpl)];
      const Template& Tb = vb.templates[static_cast<std::size_t>(U[b].tpl)];
      int schema = (Ta.isY ? 0 : 2) + (Tb.isY ? 1 : 2);  // 1..4
      bool greater;
      if (!U[a].isV) {
        if (U[a].j > U[b].j) continue;
        Monomial lhs = Monomial::var(xa, U[b].j) * Ta.lead;
        Monomial rhs = Monomial::var(xa, U[a].j) * Tb.lead;
        greater = eps.compare(lhs, rhs) > 0;
      } else {
        schema += 4;
        greater = eps.compare(Ta.lead, Tb.lead) > 0;
      }
      if (greater) rel.push_back(ZetaRelation{static_cast<int>(a), static_cast<int>(b), schema});
    }
  }
  return rel;
}

// ---------------------------------------------------------------- extraction

ExtractedCodes extractUVCodes(const ReductionContext& ctx, const VirtualBasis& vb,
                              const std::map<int, Poly>& fathers) {
  const Level& L = vb.level;
  const int xa = L.xa();
  ExtractedCodes ex;
  std::map<int, std::size_t> slot;
  std::set<int> vVars, unknownVars;
  for (std::size_t i = 0; i < vb.unknowns.size(); ++i) {
    ex.unknowns.push_back(vb.unknowns[i].var);
    slot[vb.unknowns[i].var] = i;
    unknownVars.insert(vb.unknowns[i].var);
    if (vb.unknowns[i].isV) vVars.insert(vb.unknowns[i].var);
  }
  ex.equations.assign(vb.unknowns.size(), Poly());
  std::set<int> active(vb.activeY.begin(), vb.activeY.end());

  for (std::size_t t = 0; t < vb.templates.size(); ++t) {
    const Template& T = vb.templates[t];
    if (T.unknowns.empty()) continue;
    Poly source = T.isY ? ctx.equations.at(T.y) * Poly(L.base(T.cell)) : fathers.at(T.cell);
    Poly R = janetPolyDivide(source, vb.divisors, vb.omega, false).remainder;
    std::map<std::pair<int, int>, int> target;
    for (const auto& u : vb.unknowns)
      if (u.tpl == static_cast<int>(t)) target[{u.m, u.isV ? -1 : u.j}] = u.var;
    for (const auto& [m, c] : R.terms()) {
      int cell = L.cellOf(xPart(m, L.n));
      if (cell < 0) throw ReductionError("remainder term outside every cell");
      // Cells without generator keep code variables as coefficients.
      if (vb.d[static_cast<std::size_t>(cell)] >= 0)
        for (int y : active)
          if (m[static_cast<std::size_t>(y)] != 0)
            throw ReductionError("code variable '" + ctx.ring.name(y) + "' survives the template division");
      Monomial co = L.coordinates(cell, m);
      int dm = vb.d[static_cast<std::size_t>(cell)];
      int j = -1;
      if (dm >= 0) {
        j = co[static_cast<std::size_t>(xa)];
        if (j >= dm) throw ReductionError("remainder not reduced by B_k");
        co = co.withExp(xa, 0);
      }
      auto it = target.find({cell, j});
      if (it == target.end()) throw ReductionError("remainder term without a matching unknown");
      ex.equations[slot.at(it->second)].addTerm(co, c);
    }
  }

  for (std::size_t i = 0; i < ex.equations.size(); ++i) {
    const Poly& E = ex.equations[i];
    const std::string& nm = ctx.ring.name(ex.unknowns[i]);
    if (!vb.unknowns[i].isV)
      for (int v : E.variables())
        if (vVars.count(v)) throw ReductionError("equation of " + nm + " depends on a v unknown");
    if (E.constantTerm() != 0) throw ReductionError("equation of " + nm + " has a constant term");
  }

  ex.relations = zetaRelations(ctx, vb);
  std::vector<int> order = solveZetaConstraints(static_cast<int>(vb.unknowns.size()), ex.relations);
  for (int i : order) ex.ranking.push_back(vb.unknowns[static_cast<std::size_t>(i)].var);

  MonomialOrder zeta = makeZetaOrder(ex.ranking, ctx.ring.names());
  MonomialOrder xi = makeXiOrder(zeta, extendOrder(ctx.eta, ctx.n), ex.unknowns);
  for (std::size_t i = 0; i < ex.equations.size(); ++i) {
    Poly lin = ex.equations[i].zeroVars([&](int v) { return !unknownVars.count(v); }).filter(
        [](const Monomial& m) { return m.degree() == 1; });
    const std::string& nm = ctx.ring.name(ex.unknowns[i]);
    if (lin.isZero()) throw ReductionError("equation of " + nm + " has no linear part");
    Monomial in = initialMonomial(lin, xi);
    if (in != Monomial::var(ex.unknowns[i]))
      throw ReductionError("initial monomial of the equation of " + nm + " is not " + nm);
  }
  return ex;
}

// ---------------------------------------------------------------- simplification

SimplifiedSystem simplifySystem(const ReductionContext& ctx, const ExtractedCodes& ex) {
  SimplifiedSystem out;
  std::vector<int> W = ex.unknowns;      // W[i] paired with E[i]
  std::vector<Poly> E = ex.equations;
  std::set<int> unknownSet(W.begin(), W.end());

  auto isUnknown = [&](int v) { return unknownSet.count(v) > 0; };
  auto assign = [&](int w, const Poly& val) {
    std::map<int, Poly> sub{{w, val}};
    for (auto& e : E) e = substitute(e, sub);
    for (auto& [k, s] : out.solved) s = substitute(s, sub);
    out.solved[w] = val;
    unknownSet.erase(w);
  };
  // Removes equation i after its unknown p was eliminated.
  auto drop = [&](std::size_t i, int p) {
    auto it = std::find(W.begin(), W.end(), p);
    std::size_t pi = static_cast<std::size_t>(it - W.begin());
    W[pi] = W[i];
    W.erase(W.begin() + static_cast<long>(i));
    E.erase(E.begin() + static_cast<long>(i));
  };

  bool changed = true;
  while (changed) {
    changed = false;

    // Unknowns S whose equations have an S-variable in every term: S = 0
    // solves them, and the linear parts force it to be the solution.
    std::set<int> S(W.begin(), W.end());
    bool shrink = true;
    while (shrink) {
      shrink = false;
      for (std::size_t i = 0; i < W.size(); ++i) {
        if (!S.count(W[i])) continue;
        for (const auto& [m, c] : E[i].terms()) {
          bool hit = false;
          for (std::size_t v = 0; v < m.width() && !hit; ++v)
            hit = m[v] != 0 && S.count(static_cast<int>(v));
          if (!hit) {
            S.erase(W[i]);
            shrink = true;
            break;
          }
        }
      }
    }
    if (!S.empty()) {
      std::map<int, Poly> zero;
      for (int w : S) zero[w] = Poly();
      std::vector<int> W2;
      std::vector<Poly> E2;
      for (std::size_t i = 0; i < W.size(); ++i)
        if (!S.count(W[i])) {
          W2.push_back(W[i]);
          E2.push_back(substitute(E[i], zero));
        }
      for (auto& [k, v] : out.solved) v = substitute(v, zero);
      for (int w : S) {
        out.solved[w] = Poly();
        unknownSet.erase(w);
      }
      W = W2;
      E = E2;
      changed = true;
      continue;
    }

    // Linear occurrence with constant coefficient; the shortest value first.
    std::size_t bestI = 0;
    int bestP = -1;
    Poly bestVal;
    for (std::size_t i = 0; i < W.size(); ++i) {
      std::vector<int> cand{W[i]};
      for (int v : E[i].variables())
        if (isUnknown(v) && v != W[i]) cand.push_back(v);
      for (int p : cand) {
        if (!E[i].involves(p) || E[i].degreeIn(p) != 1) continue;
        Poly c = E[i].coeffOf(p, 1);
        if (!c.variables().empty() || c.isZero()) continue;
        Poly val = E[i].coeffOf(p, 0) * Rational(-1 / c.constantTerm());
        if (bestP < 0 || val.size() < bestVal.size()) {
          bestI = i;
          bestP = p;
          bestVal = val;
        }
        break;
      }
    }
    if (bestP >= 0) {
      drop(bestI, bestP);
      assign(bestP, bestVal);
      changed = true;
      continue;
    }

    // p * Q = 0 with Q(0) != 0.
    for (std::size_t i = 0; i < W.size() && !changed; ++i) {
      for (int p : E[i].variables()) {
        if (!isUnknown(p)) continue;
        bool divisible = true;
        Poly Q;
        for (const auto& [m, c] : E[i].terms()) {
          if (m[static_cast<std::size_t>(p)] == 0) {
            divisible = false;
            break;
          }
          Q.addTerm(m.withExp(p, m[static_cast<std::size_t>(p)] - 1), c);
        }
        if (!divisible || Q.constantTerm() == 0) continue;
        drop(i, p);
        assign(p, Poly());
        changed = true;
        break;
      }
    }
  }
  out.unknowns = W;
  out.equations = E;
  (void)ctx;
  return out;
}

// ---------------------------------------------------------------- x_a-regular case

namespace {

struct RegularData {
  std::vector<int> d;
  std::map<int, Poly> byCell;
  std::vector<int> cellOfFather;
};

RegularData analyzeRegular(const Level& L, const std::vector<BasisElement>& fathers) {
  RegularData r;
  r.d.assign(L.cells.size(), -1);
  for (const auto& G : fathers) {
    int c = L.cellOf(G.init);
    if (c < 0 || !xOnly(G.init, L.n)) throw ReductionError("initial vector outside the level");
    Monomial co = L.coordinates(c, G.init);
    for (std::size_t i = 0; i < co.width(); ++i)
      if (static_cast<int>(i) != L.xa() && co[i] != 0)
        throw ReductionError("initial vector is not a pure power of the distinguished variable");
    if (r.d[static_cast<std::size_t>(c)] >= 0) throw ReductionError("two fathers share one cell");
    r.d[static_cast<std::size_t>(c)] = co[static_cast<std::size_t>(L.xa())];
    r.byCell[c] = G.poly;
    r.cellOfFather.push_back(c);
  }
  return r;
}

/// Survivors of the simplification that the given polynomials need become
/// new code variables t<k> of the context.
void registerSurvivors(ReductionContext& ctx, const SimplifiedSystem& sys, const std::vector<Poly>& polys) {
  std::map<int, const Poly*> eqOf;
  for (std::size_t i = 0; i < sys.unknowns.size(); ++i) eqOf[sys.unknowns[i]] = &sys.equations[i];
  std::set<int> need;
  std::vector<int> stack;
  for (const auto& p : polys)
    for (int v : ctx.codeVars(p)) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!need.insert(v).second) continue;
    const Poly* e = nullptr;
    if (auto it = eqOf.find(v); it != eqOf.end()) e = it->second;
    else if (auto jt = ctx.equations.find(v); jt != ctx.equations.end()) e = &jt->second;
    else throw ReductionError("code variable '" + ctx.ring.name(v) + "' has no equation");
    for (int w : ctx.codeVars(*e))
      if (!need.count(w)) stack.push_back(w);
  }
  std::vector<int> ys;
  std::vector<Poly> eqs;
  for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
    if (need.count(sys.unknowns[i])) {
      ys.push_back(sys.unknowns[i]);
      eqs.push_back(sys.equations[i]);
    }
  if (ys.empty()) return;
  MotherCode m = validateMotherCode(eqs, ys);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    ctx.ring.rename(ys[i], nextTName(ctx.ring));
    ctx.yOrder.push_back(ys[i]);
    ctx.equations[ys[i]] = m.equations[i];
  }
}

Poly substituteSolved(const Poly& p, const SimplifiedSystem& sys) {
  return sys.solved.empty() ? p : substitute(p, sys.solved);
}

void requireNoActive(const ReductionContext& ctx, const VirtualBasis& vb, const Poly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (vb.d[static_cast<std::size_t>(vb.level.cellOf(xPart(m, vb.level.n)))] < 0) continue;
    for (int y : vb.activeY)
      if (m[static_cast<std::size_t>(y)] != 0)
        throw ReductionError("code variable '" + ctx.ring.name(y) + "' survives the division");
  }
}

}  // namespace

std::vector<BasisElement> reducedBasisXnRegular(ReductionContext& ctx, const Level& L,
                                                const std::vector<BasisElement>& fathers) {
  if (fathers.empty()) return {};
  RegularData rd = analyzeRegular(L, fathers);
  VirtualBasis vb = buildVirtualBasis(ctx, L, rd.d, rd.byCell, {}, false);
  ExtractedCodes ex = extractUVCodes(ctx, vb, rd.byCell);
  SimplifiedSystem sys = simplifySystem(ctx, ex);
  std::vector<BasisElement> out;
  for (std::size_t k = 0; k < fathers.size(); ++k) {
    int c = rd.cellOfFather[k];
    for (const auto& T : vb.templates)
      if (!T.isY && T.cell == c) out.push_back({substituteSolved(T.poly, sys), fathers[k].init});
  }
  std::vector<Poly> polys;
  for (const auto& e : out) polys.push_back(e.poly);
  registerSurvivors(ctx, sys, polys);
  return out;
}

namespace {

/// Expresses the y-templates through the fathers modulo the code equations:
/// unit * B_T = sum W_k B_k + (element of the equation module).
struct TemplateLift {
  Poly unit;
  std::vector<Poly> W;
};

TemplateLift liftTemplate(const ReductionContext& ctx, const Poly& BT, const std::vector<Poly>& Bk,
                          const std::vector<Poly>& eqs) {
  std::vector<Poly> gens = Bk;
  for (const auto& e : eqs)
    for (int c = 1; c <= ctx.s; ++c) gens.push_back(e.inComponent(c));
  MonomialOrder eps = extendOrder(ctx.eta, ctx.n);
  int u = std::max({ctx.ring.size(), firstUnusedVar(gens), firstUnusedVar({BT})});
  StandardBasisResult sb = lazardStandardBasisLift(gens, eps, u, true);
  WeakNormalFormResult w = moraWeakNormalForm(BT, sb.basis, eps);
  if (!w.remainder.isZero())
    throw ReductionError("template is not in the module of the fathers and the code equations");
  if (w.unit.constantTerm() == 0) throw ReductionError("weak normal form without unit");
  TemplateLift r;
  r.unit = w.unit;
  r.W.assign(Bk.size(), Poly());
  for (std::size_t j = 0; j < sb.basis.size(); ++j) {
    if (w.multipliers[j].isZero()) continue;
    for (std::size_t k = 0; k < Bk.size(); ++k)
      if (!sb.cofactors[j][k].isZero()) r.W[k] += w.multipliers[j] * sb.cofactors[j][k];
  }
  return r;
}

}  // namespace

LevelDivision divideXnRegular(ReductionContext& ctx, const Level& L, const Poly& F,
                              const std::vector<BasisElement>& basis, bool quotients) {
  LevelDivision out;
  if (basis.empty()) {
    out.remainder = F;
    out.hasQuotients = quotients;
    return out;
  }
  RegularData rd = analyzeRegular(L, basis);
  VirtualBasis vb = buildVirtualBasis(ctx, L, rd.d, rd.byCell, ctx.codeVars(F), true);
  // Terms of the basis in regular cells may only carry x'-dependent codes.
  for (const auto& b : basis)
    for (const auto& [m, c] : b.poly.terms()) {
      int cell = L.cellOf(xPart(m, L.n));
      if (cell >= 0 && rd.d[static_cast<std::size_t>(cell)] >= 0)
        for (int y : vb.activeY)
          if (m[static_cast<std::size_t>(y)] != 0)
            throw ReductionError("basis is not reduced for this level (code '" + ctx.ring.name(y) + "')");
    }
  ExtractedCodes ex = extractUVCodes(ctx, vb, rd.byCell);
  SimplifiedSystem sys = simplifySystem(ctx, ex);
  DivisionResult dv = janetPolyDivide(F, vb.divisors, vb.omega, false);
  requireNoActive(ctx, vb, dv.remainder);
  out.remainder = substituteSolved(dv.remainder, sys);

  std::vector<Poly> keepAlive{out.remainder};
  if (quotients) {
    out.hasQuotients = true;
    // Quotients of the monic B_k, then of the given fathers.
    std::vector<std::size_t> tplOfFather;
    std::vector<Poly> Bk;
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t t = 0; t < vb.templates.size(); ++t)
        if (!vb.templates[t].isY && vb.templates[t].cell == rd.cellOfFather[k]) {
          tplOfFather.push_back(t);
          Bk.push_back(vb.templates[t].poly);
        }
    std::vector<Poly> num(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) num[k] = substituteSolved(dv.quotients[tplOfFather[k]], sys);
    Poly den(1);
    std::vector<Poly> eqs;
    bool haveEqs = false;
    for (std::size_t t = 0; t < vb.templates.size(); ++t) {
      const Template& T = vb.templates[t];
      if (!T.isY || dv.quotients[t].isZero()) continue;
      if (!haveEqs) {
        // Mother equations of everything involved, in the solved variables.
        std::set<int> seeds = ctx.codeVars(F);
        for (const auto& b : Bk)
          for (int v : ctx.codeVars(b)) seeds.insert(v);
        for (int v : vb.activeY) seeds.insert(v);
        std::set<int> cl = ctx.closure(seeds);
        for (int y : ctx.yOrder)
          if (cl.count(y)) eqs.push_back(ctx.equations.at(y));
        for (const auto& e : sys.equations) eqs.push_back(e);
        haveEqs = true;
      }
      Poly BT = substituteSolved(T.poly, sys);
      Poly At = substituteSolved(dv.quotients[t], sys);
      TemplateLift lift = liftTemplate(ctx, BT, Bk, eqs);
      for (std::size_t k = 0; k < basis.size(); ++k) num[k] = num[k] * lift.unit + At * lift.W[k];
      den = den * lift.unit;
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Rational lc = basis[k].poly.coeff(vb.templates[tplOfFather[k]].lead);
      num[k] = num[k] * Rational(1 / lc);
      keepAlive.push_back(num[k]);
    }
    keepAlive.push_back(den);
    out.quotientNumerators = num;
    out.denominator = den;
  }
  registerSurvivors(ctx, sys, keepAlive);
  return out;
}

}  // namespace famcode
