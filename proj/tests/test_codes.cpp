#include "support.hpp"

#include "famcode/reduction.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace famcode;
using namespace famcode::test;

namespace {

FamilyCode loadData(const std::string& name) {
  std::ifstream in(std::string(FAMCODE_TEST_DATA) + "/" + name);
  return parseCodeFile(in);
}

/// Random mother with identity linear part: y_i + (x-linear) + higher terms.
std::vector<Poly> randomMother(std::mt19937& rng, int nx, int ny) {
  std::vector<Poly> H;
  for (int i = 0; i < ny; ++i) {
    Poly h = Poly::var(nx + i) + randomPoly(rng, nx, 1, 1);
    Poly hi = randomPoly(rng, nx + ny, 3, 4);
    // keep only the nonlinear part of the perturbation
    for (const auto& [m, c] : hi.terms())
      if (m.degree() >= 2) h.addTerm(m, c);
    H.push_back(h);
  }
  return H;
}

}  // namespace

TEST(Mother, RejectsNonzeroConstantAndSingularJacobian) {
  Ring r({"x", "t"});
  EXPECT_THROW(validateMotherCode({P("t + 1", r)}, {1}), InvalidCode);
  EXPECT_THROW(validateMotherCode({P("t^2 + x", r)}, {1}), InvalidCode);
  EXPECT_NO_THROW(validateMotherCode({P("2*t + x", r)}, {1}));
}

TEST(Mother, NormalizationMakesTheJacobianTheIdentity) {
  Ring r({"x", "a", "b"});
  auto m = validateMotherCode({P("a + 2*b + x", r), P("3*a + b + x^2", r)}, {1, 2});
  auto J = jacobianAtZero(m.equations, m.yVars);
  EXPECT_EQ(J, (Matrix{{1, 0}, {0, 1}}));
}

TEST(BabyExpand, SquareRootSeries) {
  // t^2 - 2t + z = 0, t(0) = 0: t = 1 - sqrt(1 - z)
  FamilyCode fc = workedExample();
  const int D = 14;
  auto h = babyExpand(fc.mother, D);
  int t = fc.ring.index("t");
  EXPECT_EQ(coefficients(h.series.at(t).value, 2, D), oneMinusSqrt(D));
}

TEST(BabyExpand, CatalanSeries) {
  // t^2 + t + x^2 = 0: t = -sum C_k x^{2k+2}
  FamilyCode fc = loadData("h4.code");
  const int D = 20;
  auto h = babyExpand(fc.mother, D);
  auto c = coefficients(h.series.begin()->second.value, 0, D);
  for (int k = 0; 2 * k + 2 <= D; ++k) EXPECT_EQ(c[static_cast<std::size_t>(2 * k + 2)], Rational(static_cast<long>(-catalan(k))));
  for (int e = 1; e <= D; e += 2) EXPECT_EQ(c[static_cast<std::size_t>(e)], 0);
}

TEST(BabyExpandProperty, ResidualsVanishToTheTruncation) {
  std::mt19937 rng(61);
  const int D = 10;
  for (int k = 0; k < 50; ++k) {
    int nx = 1 + static_cast<int>(rng() % 2), ny = 1 + static_cast<int>(rng() % 2);
    std::vector<int> ys;
    for (int i = 0; i < ny; ++i) ys.push_back(nx + i);
    auto H = randomMother(rng, nx, ny);
    MotherCode m = validateMotherCode(H, ys);
    auto h = babyExpand(m, D);
    for (const auto& Hi : H) {
      Poly res = substitute(Hi, h.series).value.truncate(D);
      EXPECT_TRUE(res.isZero());
    }
    for (const auto& [y, s] : h.series) EXPECT_EQ(s.value.constantTerm(), 0);
  }
}

TEST(DirectSum, RenamesClashingVariables) {
  Ring r({"x", "t"});
  auto a = validateMotherCode({P("t - x", r)}, {1});
  auto b = validateMotherCode({P("t - x^2", r)}, {1});
  auto sum = directSum({a, b}, r);
  ASSERT_EQ(sum.code.yVars.size(), 2u);
  EXPECT_NE(sum.code.yVars[0], sum.code.yVars[1]);
  int tb = sum.renaming[1].at(1);
  auto h = babyExpand(sum.code, 4);
  EXPECT_EQ(h.series.at(1).value, P("x", r));
  EXPECT_EQ(h.series.at(tb).value, P("x^2", r));
}

TEST(CodeFile, ParsesTheWorkedExample) {
  FamilyCode fc = workedExample();
  EXPECT_EQ(fc.n, 3);
  EXPECT_EQ(fc.s, 1);
  EXPECT_EQ(fc.fathers.size(), 3u);
  EXPECT_EQ(fc.mother.yVars.size(), 1u);
}

TEST(CodeFile, RejectsMalformedInput) {
  EXPECT_THROW(parseCodeString("vars: x\nfather[1]: x +\n"), ParseError);
  EXPECT_THROW(parseCodeString("vars: x\nparams: t\nmother: t^2 + x\n"), InvalidCode);
  EXPECT_THROW(parseCodeString("vars: x\nfather[1]: q\n"), ParseError);
}

TEST(CodeStandardBasis, WorkedExampleAddsTheFourthFather) {
  auto res = codeStandardBasis(workedExample());
  Ring& r = res.code.ring;
  EXPECT_EQ(res.initial.generators.size(), 4u);
  bool found = false;
  for (const auto& f : res.code.fathers) found = found || f == P("x^4*z - x^3*y*z^2 + x^4*y*t", r);
  EXPECT_TRUE(found);
  std::vector<Monomial> want{Monomial({0, 0, 2}), Monomial({0, 1, 1}), Monomial({0, 2}), Monomial({4, 0, 1})};
  for (const auto& w : want) {
    bool in = false;
    for (const auto& g : res.initial.generators) in = in || g == w;
    EXPECT_TRUE(in);
  }
  EXPECT_TRUE(verifyReducedBasis(workedExample(), res.code, 8, nullptr, false));
}

TEST(CodeStandardBasis, ExpandedFathersHaveTheDeclaredInitials) {
  auto res = codeStandardBasis(workedExample());
  auto g = expandFathers(res.code, 8);
  for (std::size_t i = 0; i < g.size(); ++i)
    EXPECT_EQ(initialMonomial(g[i], res.code.eta), res.code.initials[i]);
}
