#include "famcode/codes.hpp"
#include "famcode/division.hpp"
#include "famcode/io.hpp"
#include "famcode/monomial_module.hpp"
#include "famcode/reduction.hpp"

#include <benchmark/benchmark.h>

using namespace famcode;

namespace {

const char* kWorked = R"(
vars: x y z
params: t
order: grlex:x>y>z
mother: t^2 - 2*t + z
father[1]: z^2 + x*y*t
father[2]: y*z + x^2*z + y^2*z
father[3]: y^2 + x*y*z
)";

Poly dense(int deg) {
  Poly p;
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b)
      for (int c = 0; a + b + c <= deg; ++c) {
        Rational q(a + 2 * b + 3 * c + 1, 1 + c);
        q.canonicalize();
        p.addTerm(Monomial({a, b, c}), q);
      }
  return p;
}

}  // namespace

static void BM_MulTrunc(benchmark::State& st) {
  Poly a = dense(static_cast<int>(st.range(0))), b = dense(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mulTrunc(a, b, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_MulTrunc)->Arg(4)->Arg(8)->Arg(12);

static void BM_BabyExpandCatalan(benchmark::State& st) {
  FamilyCode fc = parseCodeString("vars: x\nparams: t\nmother: t^2 + t + x^2\n");
  for (auto _ : st) benchmark::DoNotOptimize(babyExpand(fc.mother, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_BabyExpandCatalan)->Arg(16)->Arg(32)->Arg(64);

static void BM_FormalDivideLacunary(benchmark::State& st) {
  Ring r({"x", "y"});
  Poly g = parsePoly("(x - y^2)*(y - x^2)", r);
  Poly f = parsePoly("x*y", r);
  int D = static_cast<int>(st.range(0));
  auto ord = MonomialOrder::grlex({0, 1});
  for (auto _ : st) benchmark::DoNotOptimize(formalDivide({f, D}, {{g, D}}, ord, D));
}
BENCHMARK(BM_FormalDivideLacunary)->Arg(12)->Arg(24)->Arg(48);

static void BM_EchelonWorkedInitialIdeal(benchmark::State& st) {
  auto M = minimalGenerators({Monomial({0, 0, 2}), Monomial({0, 1, 1}), Monomial({0, 2}), Monomial({4, 0, 1})}, 3, 1);
  for (auto _ : st) benchmark::DoNotOptimize(boxCondition(M));
}
BENCHMARK(BM_EchelonWorkedInitialIdeal);

static void BM_CodeStandardBasis(benchmark::State& st) {
  FamilyCode fc = parseCodeString(kWorked);
  for (auto _ : st) benchmark::DoNotOptimize(codeStandardBasis(fc));
}
BENCHMARK(BM_CodeStandardBasis)->Unit(benchmark::kMillisecond);

static void BM_ReducedBasisWorkedExample(benchmark::State& st) {
  FamilyCode fc = parseCodeString(kWorked);
  for (auto _ : st) benchmark::DoNotOptimize(reducedBasisGeneral(fc));
}
BENCHMARK(BM_ReducedBasisWorkedExample)->Unit(benchmark::kMillisecond)->Iterations(3);

BENCHMARK_MAIN();
