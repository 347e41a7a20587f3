#include "support.hpp"

#include <gtest/gtest.h>

using namespace famcode;
using namespace famcode::test;

namespace {

MonomialModule mod(int n, int s, std::vector<Monomial> g) { return minimalGenerators(g, n, s); }

bool inModule(const MonomialModule& M, const Monomial& m) {
  for (const auto& g : M.generators)
    if (g.divides(m)) return true;
  return false;
}

long long total(int n, int s, int D) { return static_cast<long long>(enumerateMonomials(n, s, D).size()); }

}  // namespace

TEST(Module, MinimalGeneratorsDropMultiples) {
  auto M = mod(2, 1, {Monomial({1, 1}), Monomial({2, 1}), Monomial({0, 3})});
  EXPECT_EQ(M.generators.size(), 2u);
  auto N = mod(1, 2, {Monomial({1}, 1), Monomial({2}, 2), Monomial({3}, 2)});
  EXPECT_EQ(N.generators.size(), 2u);
}

TEST(Module, XnRegular) {
  EXPECT_TRUE(isXnRegular(mod(2, 1, {Monomial({0, 2})})).regular);
  EXPECT_FALSE(isXnRegular(mod(2, 1, {Monomial({1, 1})})).regular);
  EXPECT_TRUE(isXnRegular(mod(2, 2, {Monomial({0, 2}, 1), Monomial({0, 1}, 2)})).regular);
}

TEST(Module, ThreeAxesFailTheBoxCondition) {
  auto r = boxCondition(mod(3, 1, {Monomial({1, 1}), Monomial({1, 0, 1}), Monomial({0, 1, 1})}));
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.failure.has_value());
  EXPECT_EQ(r.failure->witness, Monomial({1, 1}));
  EXPECT_THROW(echelonDecompose(mod(3, 1, {Monomial({1, 1}), Monomial({1, 0, 1}), Monomial({0, 1, 1})})),
               BoxConditionFailed);
}

TEST(Module, SingleMixedMonomialFails) {
  EXPECT_FALSE(boxCondition(mod(2, 1, {Monomial({1, 1})})).ok);
  EXPECT_FALSE(boxCondition(mod(3, 1, {Monomial({1, 1, 1})})).ok);
}

TEST(Module, WorkedExampleInitialIdeal) {
  auto M = mod(3, 1, {Monomial({0, 0, 2}), Monomial({0, 1, 1}), Monomial({0, 2}), Monomial({4, 0, 1})});
  auto r = boxCondition(M);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.janet.blocks.size(), 4u);
  // co = K[[x]] + y K[[x]] + z, xz, x^2z, x^3z
  EXPECT_EQ(r.complement.blocks.size(), 6u);
  for (int D = 0; D <= 8; ++D) {
    EXPECT_EQ(countMonomials(r.janet.blocks, D), bruteForceCount(M, D));
    EXPECT_EQ(countMonomials(r.janet.blocks, D) + countMonomials(r.complement.blocks, D), total(3, 1, D));
  }
}

TEST(Module, CountingSmallCase) {
  // <y^2> in K[[x,y]]: degree <= 3 multiples are y^2, xy^2, y^3
  auto M = mod(2, 1, {Monomial({0, 2})});
  EXPECT_EQ(bruteForceCount(M, 3), 3);
  EXPECT_EQ(countMonomials({Block{Monomial({0, 2}), 2}}, 3), 3);
  EXPECT_TRUE(blockContains(Block{Monomial({0, 2}), 1}, Monomial({3, 2})));
  EXPECT_FALSE(blockContains(Block{Monomial({0, 2}), 1}, Monomial({0, 3})));
}

TEST(ModuleProperty, EchelonsCountLikeEnumeration) {
  std::mt19937 rng(41);
  int successes = 0, tries = 0;
  while (successes < 50 && tries < 5000) {
    ++tries;
    int n = 1 + static_cast<int>(rng() % 3), s = 1 + static_cast<int>(rng() % 2);
    int k = 1 + static_cast<int>(rng() % 4);
    std::vector<Monomial> g;
    for (int i = 0; i < k; ++i) g.push_back(randomMonomial(rng, n, 3, s));
    bool hasOne = false;
    for (const auto& m : g) hasOne = hasOne || m.isOne();
    if (hasOne) continue;
    auto M = mod(n, s, g);
    auto r = boxCondition(M);
    if (!r.ok) {
      EXPECT_THROW(echelonDecompose(M), BoxConditionFailed);
      continue;
    }
    ++successes;
    EXPECT_NO_THROW(echelonDecompose(M));
    const int D = 8;
    for (const auto& m : enumerateMonomials(n, s, D)) {
      int inJ = 0, inC = 0;
      for (const auto& b : r.janet.blocks) inJ += blockContains(b, m);
      for (const auto& b : r.complement.blocks) inC += blockContains(b, m);
      if (inModule(M, m)) {
        EXPECT_EQ(inJ, 1);
        EXPECT_EQ(inC, 0);
      } else {
        EXPECT_EQ(inJ, 0);
        EXPECT_EQ(inC, 1);
      }
    }
    for (int d = 0; d <= D; ++d) {
      EXPECT_EQ(countMonomials(r.janet.blocks, d), bruteForceCount(M, d));
      EXPECT_EQ(countMonomials(r.janet.blocks, d) + countMonomials(r.complement.blocks, d), total(n, s, d));
    }
  }
  EXPECT_EQ(successes, 50);
}
