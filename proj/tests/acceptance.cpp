// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.
#include "support.hpp"

#include "cli.hpp"
#include "famcode/division.hpp"
#include "famcode/reduction.hpp"
#include "famcode/zeta.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace famcode;
using namespace famcode::test;

namespace {

/// Collects the sub-checks of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      notes_.push_back("  mismatch: " + what);
    }
  }
  void note(const std::string& s) { notes_.push_back("  " + s); }
  bool ok() const { return ok_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool ok_ = true;
  std::vector<std::string> notes_;
};

FamilyCode withFathers(const FamilyCode& fc, std::vector<Poly> fathers) {
  FamilyCode out = fc;
  out.fathers = std::move(fathers);
  out.initials.clear();
  return out;
}

std::string show(const Poly& p, const Ring& r) { return render(p, r, extendOrder(MonomialOrder::grlex({0, 1, 2}), 3)); }

/// Scales a one-variable mother so that its coefficient of t is 1.
Poly normalized(const Poly& H, int t) {
  Rational c = H.coeff(Monomial::var(t));
  return c == 0 ? H : H * (1 / c);
}

const Poly& equationOf(const FamilyCode& fc, int y) {
  auto it = std::find(fc.mother.yVars.begin(), fc.mother.yVars.end(), y);
  return fc.mother.equations[static_cast<std::size_t>(it - fc.mother.yVars.begin())];
}

Level secondLevel() { return Level::top(3, 1).child({2}); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Code standard basis of the worked example.
void standardBasis(Check& c) {
  auto res = codeStandardBasis(workedExample());
  Ring& r = res.code.ring;
  std::vector<Monomial> want{Monomial({0, 0, 2}), Monomial({0, 1, 1}), Monomial({0, 2}), Monomial({4, 0, 1})};
  const auto& got = res.initial.generators;
  bool same = got.size() == want.size();
  for (const auto& w : want) same = same && std::find(got.begin(), got.end(), w) != got.end();
  c.expect(same, "initial module generators");
  Poly g4 = P("x^4*z - x^3*y*z^2 + x^4*y*t", r);
  bool found = std::find(res.code.fathers.begin(), res.code.fathers.end(), g4) != res.code.fathers.end();
  c.expect(found, "new father x^4*z - x^3*y*z^2 + x^4*y*t");
  for (const auto& f : res.code.fathers) c.note("father: " + show(f, r));
}

// 2. Weierstrass step for g1.
void weierstrassG1(Check& c) {
  FamilyCode fc = workedExample();
  FamilyCode out = reducedBasisXnRegular(withFathers(fc, {fc.fathers[0]}));
  if (out.mother.yVars.size() != 1 || out.fathers.size() != 1) {
    c.expect(false, "one father with one coefficient code");
    return;
  }
  int t = out.mother.yVars[0];
  Ring& r = out.ring;
  std::string tn = r.name(t);
  c.expect(out.fathers[0] == P("z^2 + (1/2*x*y + x*y*" + tn + ")*z", r), "father z^2 + (xy/2 + xy*t)z");
  Poly stated = P("8*x*y*" + tn + "^3 + 12*x*y*" + tn + "^2 + 16*(1 + x*y)*" + tn + " + x*y", r);
  Poly got = equationOf(out, t);
  c.expect(normalized(got, t) == normalized(stated, t), "mother equals 8xy t^3 + 12xy t^2 + 16(1+xy) t + xy");
  c.note("computed mother: " + show(got, r));
  auto h = babyExpand(out.mother, 6);
  Poly series = h.series.at(t).value;
  c.expect(series == P("-1/16*x*y + 1/16*x^2*y^2 - 67/1024*x^3*y^3", r), "expansion to degree 6");
  c.note("computed expansion: " + show(series, r));
}

// 3. Second level: reduced basis of <g2, g3>.
void secondLevelBasis(Check& c) {
  FamilyCode fc = workedExample();
  ReductionContext ctx = ReductionContext::from(fc);
  Ring& r = ctx.ring;
  std::vector<BasisElement> in{{P("y^2 + x*y*z", r), Monomial({0, 2})},
                               {P("y*z + x^2*z + y^2*z", r), Monomial({0, 1, 1})}};
  auto out = reducedBasisXnRegular(ctx, secondLevel(), in);
  std::vector<Poly> fs;
  for (const auto& b : out) fs.push_back(b.poly);
  FamilyCode code = ctx.output(fs);
  if (code.mother.yVars.size() != 1 || out.size() != 2) {
    c.expect(false, "two fathers and one coefficient code");
    return;
  }
  int t = code.mother.yVars[0];
  std::string tn = code.ring.name(t);
  // B_2 = y e_2 - u_220 e_2 is the father y*z - z*u_220
  c.expect(out[1].poly == P("y*z - z*" + tn, code.ring), "u_220 is the coefficient code");
  c.expect(normalized(equationOf(code, t), t) == P(tn + "^2 + " + tn + " + x^2", code.ring), "H4 = t^2 + t + x^2");
  auto h = babyExpand(code.mother, 8);
  c.expect(h.series.at(t).value == P("-x^2 - x^4 - 2*x^6 - 5*x^8", code.ring), "expansion to degree 8");
  for (const auto& f : fs) c.note("father: " + show(f, code.ring));
}

// 4. End-to-end reduced basis and CLI golden output.
void endToEnd(Check& c) {
  FamilyCode fc = workedExample();
  FamilyCode out = reducedBasisGeneral(fc);
  Ring& r = out.ring;
  std::vector<Poly> want{P("z^2 - 1/2*x^3*z", r), P("y*z + x^2*z", r), P("y^2 - x^3*z", r), P("x^4*z", r)};
  c.expect(out.fathers == want, "reduced basis");
  c.expect(out.mother.yVars.empty(), "no code variables left");
  std::string why;
  c.expect(verifyReducedBasis(fc, out, 10, &why), "re-expansion to degree 10: " + why);
  std::ostringstream o1, o2, err;
  std::string input = std::string(FAMCODE_TEST_DATA) + "/worked_example.code";
  int rc = cli::run({"reduced-basis", input}, o1, err);
  cli::run({"reduced-basis", input}, o2, err);
  c.expect(rc == 0, "CLI exit status");
  c.expect(o1.str() == slurp(std::string(FAMCODE_TEST_GOLDEN) + "/worked_example_reduced.txt"), "CLI golden file");
  c.expect(o1.str() == o2.str(), "CLI byte stability");
}

// 5. Tail of g1 divided at the second, then the third level.
void tailDivision(Check& c) {
  FamilyCode fc = workedExample();
  FamilyCode s2 = reducedBasisXnRegular(withFathers(fc, {fc.fathers[0]}));
  ReductionContext ctx = ReductionContext::from(s2);
  Ring& r = ctx.ring;
  Poly tail = P("z^2", r) - s2.fathers[0];
  std::vector<BasisElement> b{{P("y^2 - x^3*z", r), Monomial({0, 2})}, {P("y*z + x^2*z", r), Monomial({0, 1, 1})}};
  auto d = divideXnRegular(ctx, secondLevel(), tail, b, false);
  FamilyCode rem = ctx.output({d.remainder});
  if (rem.mother.yVars.size() != 1) {
    c.expect(false, "second level: one coefficient code");
  } else {
    int t = rem.mother.yVars[0];
    std::string tn = rem.ring.name(t);
    c.expect(d.remainder == P("x^3*z*(" + tn + " + 1/2)", rem.ring), "second level: remainder (0, x^3 (h7 + 1/2))");
    Poly stated = P("8*x^3*" + tn + "^3 + 12*x^3*" + tn + "^2 - (16 - 16*x^3)*" + tn + " + x^3", rem.ring);
    Poly got = equationOf(rem, t);
    c.expect(normalized(got, t) == normalized(stated, t), "second level: H7 = 8x^3t^3 + 12x^3t^2 - (16 - 16x^3)t + x^3");
    c.note("second level remainder: " + show(d.remainder, rem.ring));
    c.note("second level computed mother: " + show(got, rem.ring));
  }
  auto d5 = divideXnRegular(ctx, secondLevel().child({2, 1}), d.remainder,
                            {{P("x^4*z", r), Monomial({4, 0, 1})}}, false);
  c.expect(d5.remainder == P("1/2*x^3*z", r), "third level: remainder (0, 0, x^3/2)");
  c.note("third level remainder: " + show(d5.remainder, r));
}

// 6. Division of xy by (x - y^2)(y - x^2).
void lacunary(Check& c) {
  Ring r({"x", "y"});
  const int D = 48;
  auto res = formalDivide({P("x*y", r), D}, {{P("(x - y^2)*(y - x^2)", r), D}}, MonomialOrder::grlex({0, 1}), D);
  Poly rem = res.remainder.truncate(D);
  bool split = true;
  for (const auto& [m, k] : rem.terms()) split = split && (m[0] == 0 || m[1] == 0);
  c.expect(split, "remainder in K[[x]] + K[[y]]");
  auto rx = coefficients(rem, 0, D), ry = coefficients(rem, 1, D);
  c.expect(rx == ry, "r = s");
  for (int k = 0; k <= D; ++k) {
    Rational lhs = rx[static_cast<std::size_t>(k)];
    if (k > 0 && k % 2 == 0) lhs += rx[static_cast<std::size_t>(k / 2)];
    if (lhs != (k == 3 ? 1 : 0)) c.expect(false, "r(x) + r(x^2) = x^3 at degree " + std::to_string(k));
  }
  Poly back = rem;
  back += mulTrunc(res.quotients[0], P("(x - y^2)*(y - x^2)", r), D);
  c.expect(back.truncate(D) == P("x*y", r), "division identity to degree 48");
}

// 7. Randomized property summary.
void properties(Check& c) {
  std::mt19937 rng(2024);
  const auto gr = MonomialOrder::grlex({0, 1, 2});
  int fails = 0;
  // division identities and remainder supports
  for (int k = 0; k < 50; ++k) {
    const int D = 7;
    std::vector<TruncatedSeries> gens;
    std::vector<Monomial> in;
    for (int i = 0; i < 2; ++i) {
      Poly g = randomPoly(rng, 3, 2, 2) + randomPoly(rng, 3, 4, 3);
      if (g.isZero()) g = Poly::var(0);
      gens.push_back({g, D});
      in.push_back(initialMonomial(g, gr));
    }
    Poly f = randomPoly(rng, 3, 5, 6);
    auto res = formalDivide({f, D}, gens, gr, D);
    Poly back = res.remainder;
    for (std::size_t i = 0; i < gens.size(); ++i) back += mulTrunc(res.quotients[i], gens[i].value, D);
    bool ok = back.truncate(D) == f.truncate(D);
    Poly rem = res.remainder.truncate(D);
    for (const auto& [m, a] : rem.terms())
      for (const auto& l : in) ok = ok && !l.divides(m);
    fails += !ok;
  }
  c.expect(fails == 0, std::to_string(fails) + " division identity/support failures");
  // echelon counting
  fails = 0;
  int echelons = 0, tries = 0;
  while (echelons < 50 && tries < 5000) {
    ++tries;
    std::vector<Monomial> g;
    for (int i = 0; i < 3; ++i) g.push_back(randomMonomial(rng, 3, 3));
    if (std::any_of(g.begin(), g.end(), [](const Monomial& m) { return m.isOne(); })) continue;
    auto M = minimalGenerators(g, 3, 1);
    auto bc = boxCondition(M);
    if (!bc.ok) continue;
    ++echelons;
    for (int D = 0; D <= 8; ++D) {
      long long nj = countMonomials(bc.janet.blocks, D), nc = countMonomials(bc.complement.blocks, D);
      if (nj != bruteForceCount(M, D) || nj + nc != static_cast<long long>(enumerateMonomials(3, 1, D).size())) {
        ++fails;
        break;
      }
    }
  }
  c.expect(echelons == 50 && fails == 0, std::to_string(fails) + " echelon counting failures");
  // baby series residuals
  fails = 0;
  for (int k = 0; k < 50; ++k) {
    std::vector<Poly> H;
    for (int i = 0; i < 2; ++i) {
      Poly h = Poly::var(2 + i) + randomPoly(rng, 2, 1, 1);
      Poly extra = randomPoly(rng, 4, 3, 4);
      for (const auto& [m, a] : extra.terms())
        if (m.degree() >= 2) h.addTerm(m, a);
      H.push_back(h);
    }
    auto h = babyExpand(validateMotherCode(H, {2, 3}), 10);
    for (const auto& Hi : H) fails += !substitute(Hi, h.series).value.truncate(10).isZero();
  }
  c.expect(fails == 0, std::to_string(fails) + " nonzero residuals");
  // Mora units
  fails = 0;
  for (int k = 0; k < 50; ++k) {
    std::vector<Poly> P1{randomPoly(rng, 3, 2, 2) + randomPoly(rng, 3, 4, 3),
                         randomPoly(rng, 3, 2, 2) + randomPoly(rng, 3, 4, 3)};
    if (P1[0].isZero() || P1[1].isZero()) P1 = {Poly::var(0), Poly::var(1)};
    Poly Q = randomPoly(rng, 3, 3, 4);
    auto w = moraWeakNormalForm(Q, P1, gr);
    Poly back = w.remainder;
    for (std::size_t i = 0; i < P1.size(); ++i) back += w.multipliers[i] * P1[i];
    fails += w.unit.constantTerm() == 0 || back != w.unit * Q;
  }
  c.expect(fails == 0, std::to_string(fails) + " Mora unit/identity failures");
  // zeta rankings
  fails = 0;
  for (int k = 0; k < 50; ++k) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<int> hidden(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) hidden[static_cast<std::size_t>(i)] = i;
    std::shuffle(hidden.begin(), hidden.end(), rng);
    std::vector<ZetaRelation> rel;
    for (int e = 0; e < 2 * n; ++e) {
      int a = static_cast<int>(rng() % static_cast<unsigned>(n)), b = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (hidden[static_cast<std::size_t>(a)] > hidden[static_cast<std::size_t>(b)]) rel.push_back({a, b, 1});
    }
    auto rank = solveZetaConstraints(n, rel);
    auto zeta = makeZetaOrder(rank);
    for (const auto& x : rel) fails += zeta.compare(Monomial::var(x.greater), Monomial::var(x.smaller)) <= 0;
  }
  c.expect(fails == 0, std::to_string(fails) + " violated zeta relations");
  // division of random dividends by the worked example's reduced basis
  FamilyCode fc = workedExample();
  FamilyCode basis = reducedBasisGeneral(fc);
  fails = 0;
  for (int k = 0; k < 10; ++k) {
    FamilyCode f = withFathers(fc, {randomPoly(rng, 3, 4, 4) + randomPoly(rng, 3, 2, 2) * Poly::var(3)});
    CodeDivision d = divideGeneral(f, basis);
    fails += !checkDivision(f, basis, d, 8);
  }
  c.expect(fails == 0, std::to_string(fails) + " code division identity failures");
}

// 8. Negative cases.
void negative(Check& c) {
  auto M = minimalGenerators({Monomial({1, 1}), Monomial({1, 0, 1}), Monomial({0, 1, 1})}, 3, 1);
  auto bc = boxCondition(M);
  c.expect(!bc.ok && bc.failure && bc.failure->witness == Monomial({1, 1}), "three axes: witness x*y");
  std::ifstream in(std::string(FAMCODE_TEST_DATA) + "/gabber_kashiwara.code");
  FamilyCode gk = parseCodeFile(in);
  bool reported = false;
  try {
    reducedBasisGeneral(gk);
  } catch (const BoxConditionFailed& e) {
    reported = true;
    c.note(std::string("Gabber-Kashiwara: ") + e.what());
  }
  c.expect(reported, "Gabber-Kashiwara reports BoxConditionFailed");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"standard basis of the worked example", standardBasis},
      {"Weierstrass step for g1 (father and second mother code)", weierstrassG1},
      {"Catalan coefficient code of the second level", secondLevelBasis},
      {"reduced standard basis end to end", endToEnd},
      {"division of the tail of g1 by the second and third levels", tailDivision},
      {"lacunary remainder identity through degree 48", lacunary},
      {"randomized property summary", properties},
      {"box condition failures", negative},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs <= 60, "runtime above 60 s");
    std::cout << "criterion " << i + 1 << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << static_cast<int>(secs * 1000) << " ms)\n";
    for (const auto& n : c.notes()) std::cout << n << "\n";
    failed += !c.ok();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
