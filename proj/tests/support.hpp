#pragma once

#include "famcode/codes.hpp"
#include "famcode/io.hpp"

#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace famcode {

/// gtest printer: generic variable names, lex storage order.
inline void PrintTo(const Poly& p, std::ostream* os) {
  if (p.isZero()) {
    *os << "0";
    return;
  }
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    *os << (first ? "" : " + ") << c.get_str();
    for (std::size_t i = 0; i < m.width(); ++i)
      if (m[i]) *os << "*v" << i << "^" << m[i];
    if (m.comp() != 1) *os << "@" << m.comp();
    first = false;
  }
}

inline void PrintTo(const Monomial& m, std::ostream* os) { PrintTo(Poly(m), os); }

}  // namespace famcode

namespace famcode::test {

inline const char* kWorkedExample = R"(
vars: x y z
params: t
order: grlex:x>y>z
mother: t^2 - 2*t + z
father[1]: z^2 + x*y*t
father[2]: y*z + x^2*z + y^2*z
father[3]: y^2 + x*y*z
)";

inline FamilyCode workedExample() { return parseCodeString(kWorkedExample); }

inline Poly P(const std::string& text, Ring& ring) { return parsePoly(text, ring, true); }

/// Small random polynomial in variables 0..nvars-1, no constant term unless
/// allowConstant.
inline Poly randomPoly(std::mt19937& rng, int nvars, int maxDeg, int terms, bool allowConstant = false, int comps = 1) {
  std::uniform_int_distribution<int> e(0, maxDeg), c(-3, 3), comp(1, comps);
  Poly p;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> ex(static_cast<std::size_t>(nvars));
    int deg = 0;
    for (auto& v : ex) {
      v = e(rng);
      deg += v;
    }
    if (deg > maxDeg) continue;
    if (deg == 0 && !allowConstant) continue;
    int a = c(rng);
    if (a == 0) a = 1;
    Rational q(a, 1 + (k % 2));
    q.canonicalize();
    p.addTerm(Monomial(ex, comp(rng)), q);
  }
  return p;
}

inline Monomial randomMonomial(std::mt19937& rng, int nvars, int maxExp, int comps = 1) {
  std::uniform_int_distribution<int> e(0, maxExp), comp(1, comps);
  std::vector<int> ex(static_cast<std::size_t>(nvars));
  for (auto& v : ex) v = e(rng);
  return Monomial(ex, comp(rng));
}

// ---- oracles independent of the library's arithmetic ------------------

using Dense = std::map<std::pair<std::vector<int>, int>, Rational>;

inline Dense toDense(const Poly& p, int width) {
  Dense d;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(static_cast<std::size_t>(width), 0);
    for (std::size_t i = 0; i < m.width(); ++i) e[i] = m[i];
    d[{e, m.comp()}] += c;
  }
  return d;
}

/// Schoolbook product on exponent vectors (one factor scalar).
inline Dense naiveMul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<int> e(ka.first.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ka.first[i] + kb.first[i];
      int comp = std::max(ka.second, kb.second);
      out[{e, comp}] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Rational evaluate(const Poly& p, const std::vector<Rational>& point) {
  Rational s = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.width(); ++i)
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

/// Coefficients of a univariate series given as a Poly in variable v.
inline std::vector<Rational> coefficients(const Poly& p, int v, int D) {
  std::vector<Rational> out(static_cast<std::size_t>(D + 1), 0);
  for (const auto& [m, c] : p.terms())
    if (m.degree() == m[static_cast<std::size_t>(v)] && m[static_cast<std::size_t>(v)] <= D)
      out[static_cast<std::size_t>(m[static_cast<std::size_t>(v)])] += c;
  return out;
}

inline Rational binomialHalf(int k) {
  // binom(1/2, k)
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (Rational(1, 2) - i) / (i + 1);
  return r;
}

/// 1 - sqrt(1 - z) up to z^D.
inline std::vector<Rational> oneMinusSqrt(int D) {
  std::vector<Rational> c(static_cast<std::size_t>(D + 1), 0);
  for (int k = 1; k <= D; ++k) c[static_cast<std::size_t>(k)] = -binomialHalf(k) * ((k % 2) ? -1 : 1);
  return c;
}

inline long long catalan(int k) {
  long long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace famcode::test
