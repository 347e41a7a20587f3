#include "famcode/monomial_module.hpp"

#include <algorithm>
#include <functional>

namespace famcode {

MonomialModule minimalGenerators(const std::vector<Monomial>& raw, int n, int s) {
  MonomialModule M{n, s, {}};
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < raw.size() && !redundant; ++j) {
      if (i == j || !raw[j].divides(raw[i])) continue;
      // Equal monomials: keep the first occurrence only.
      redundant = raw[j] != raw[i] || j < i;
    }
    if (!redundant) M.generators.push_back(raw[i]);
  }
  return M;
}

RegularityResult isXnRegular(const MonomialModule& M) {
  RegularityResult r;
  r.regular = true;
  int xn = M.n - 1;
  for (const auto& g : M.generators) {
    bool pure = xn >= 0 && g.degree() == g[static_cast<std::size_t>(xn)];
    if (pure) r.witness.push_back(g);
    else if (!g.isOne()) r.regular = false;
    else r.witness.push_back(g);
  }
  return r;
}

namespace {

struct ModCell {
  Monomial base;                   // fixed exponents of inactive variables, with component
  std::vector<Monomial> gens;      // generators over the active variables (component 1)
};

std::vector<Monomial> minimalize(std::vector<Monomial> v) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool red = false;
    for (std::size_t j = 0; j < v.size() && !red; ++j)
      if (i != j && v[j].divides(v[i]) && (v[j] != v[i] || j < i)) red = true;
    if (!red) out.push_back(v[i]);
  }
  return out;
}

// One level of the nested-variable recursion with `a` active variables.
bool recurse(int a, std::vector<ModCell> cells, BoxResult& out) {
  if (a == 0) {
    for (const auto& c : cells) {
      if (!c.gens.empty()) out.janet.blocks.push_back({c.base, 0});
      else out.complement.blocks.push_back({c.base, 0});
    }
    return true;
  }
  int xa = a - 1;
  std::vector<ModCell> children;
  for (const auto& c : cells) {
    int d = -1;
    for (const auto& g : c.gens)
      if (g.degree() == g[static_cast<std::size_t>(xa)]) d = d < 0 ? g.degree() : std::min(d, g.degree());
    if (d < 0) {
      if (!c.gens.empty()) {
        out.failure = BoxFailure{c.gens.front() * c.base, a,
                                 "box condition fails: generator outside the finitely generated part at level " +
                                     std::to_string(a)};
        return false;
      }
      out.complement.blocks.push_back({c.base, a});
      continue;
    }
    out.janet.blocks.push_back({Monomial::var(xa, d) * c.base, a});
    for (int j = 0; j < d; ++j) {
      ModCell child;
      child.base = c.base.withExp(xa, j);
      std::vector<Monomial> g;
      for (const auto& m : c.gens)
        if (m[static_cast<std::size_t>(xa)] <= j) g.push_back(m.withExp(xa, 0));
      child.gens = minimalize(std::move(g));
      children.push_back(std::move(child));
    }
  }
  return recurse(a - 1, std::move(children), out);
}

}  // namespace

BoxResult boxCondition(const MonomialModule& M) {
  std::vector<ModCell> cells(static_cast<std::size_t>(M.s));
  for (int c = 1; c <= M.s; ++c) cells[static_cast<std::size_t>(c - 1)].base = Monomial({}, c);
  for (const auto& g : M.generators) {
    if (g.comp() < 1 || g.comp() > M.s) throw AmbientError("generator component out of range");
    if (static_cast<int>(g.width()) > M.n) throw AmbientError("generator uses a variable beyond n");
    cells[static_cast<std::size_t>(g.comp() - 1)].gens.push_back(g.withComp(1));
  }
  for (auto& c : cells) c.gens = minimalize(std::move(c.gens));
  BoxResult r;
  r.ok = recurse(M.n, std::move(cells), r);
  if (!r.ok) {
    r.janet.blocks.clear();
    r.complement.blocks.clear();
  }
  return r;
}

JanetDecomposition echelonDecompose(const MonomialModule& M) {
  BoxResult r = boxCondition(M);
  if (!r.ok) throw BoxConditionFailed(*r.failure);
  return r.janet;
}

namespace {
long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

long long countMonomials(const std::vector<Block>& blocks, int D) {
  long long total = 0;
  for (const auto& b : blocks) {
    int rest = D - b.generator.degree();
    if (rest < 0) continue;
    total += binom(rest + b.scope, b.scope);
  }
  return total;
}

std::vector<Monomial> enumerateMonomials(int n, int s, int D) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      for (int c = 1; c <= s; ++c) out.emplace_back(e, c);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      rec(i + 1, left - k);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, D);
  return out;
}

long long bruteForceCount(const MonomialModule& M, int D) {
  long long count = 0;
  for (const auto& m : enumerateMonomials(M.n, M.s, D))
    if (std::any_of(M.generators.begin(), M.generators.end(), [&m](const Monomial& g) { return g.divides(m); }))
      ++count;
  return count;
}

bool blockContains(const Block& b, const Monomial& m) {
  if (!b.generator.divides(m)) return false;
  Monomial q = b.generator.quotient(m);
  for (std::size_t i = static_cast<std::size_t>(b.scope); i < q.width(); ++i)
    if (q[i] != 0) return false;
  return true;
}

}  // namespace famcode
