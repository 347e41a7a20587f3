#include "famcode/codes.hpp"

#include "famcode/division.hpp"
#include "famcode/io.hpp"

#include <algorithm>
#include <sstream>

namespace famcode {

MotherCode validateMotherCode(const std::vector<Poly>& H, const std::vector<int>& yVars) {
  if (H.size() != yVars.size()) throw InvalidCode("mother code needs one equation per code variable");
  for (std::size_t i = 0; i < H.size(); ++i) {
    if (!H[i].isScalar()) throw InvalidCode("mother equations must be scalar");
    if (H[i].constantTerm() != 0) throw InvalidCode("H(0,0) != 0 in equation " + std::to_string(i + 1));
  }
  Matrix J = jacobianAtZero(H, yVars);
  auto inv = invert(J);
  if (!inv) throw InvalidCode("Jacobian singular at 0");
  MotherCode m;
  m.yVars = yVars;
  m.normalization = *inv;
  for (std::size_t i = 0; i < H.size(); ++i) {
    Poly e;
    for (std::size_t j = 0; j < H.size(); ++j)
      if ((*inv)[i][j] != 0) e += H[j] * (*inv)[i][j];
    m.equations.push_back(e);
  }
  return m;
}

BabySeriesApprox babyExpand(const MotherCode& H, int D) {
  BabySeriesApprox out;
  out.degree = D;
  Matrix J = jacobianAtZero(H.equations, H.yVars);
  auto inv = invert(J);
  if (!inv) throw InvalidCode("Jacobian singular at 0");
  std::size_t p = H.yVars.size();
  std::vector<Poly> y(p);
  for (int step = 0; step <= D + 1; ++step) {
    std::map<int, TruncatedSeries> assign;
    for (std::size_t i = 0; i < p; ++i) assign[H.yVars[i]] = {y[i], D};
    std::vector<Poly> res(p);
    for (std::size_t i = 0; i < p; ++i) res[i] = substitute(H.equations[i], assign).value;
    bool done = std::all_of(res.begin(), res.end(), [](const Poly& r) { return r.isZero(); });
    if (done) break;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        if ((*inv)[i][j] != 0) y[i] -= res[j] * (*inv)[i][j];
  }
  for (std::size_t i = 0; i < p; ++i) out.series[H.yVars[i]] = {y[i].truncate(D), D};
  return out;
}

DirectSumResult directSum(const std::vector<MotherCode>& codes, Ring& ring) {
  DirectSumResult r;
  std::set<int> used;
  for (const auto& c : codes) {
    std::map<int, int> ren;
    std::map<int, Poly> sub;
    for (int y : c.yVars) {
      if (used.count(y)) {
        int fresh = ring.fresh(ring.name(y) + "_");
        ren[y] = fresh;
        sub[y] = Poly::var(fresh);
      }
    }
    for (std::size_t i = 0; i < c.yVars.size(); ++i) {
      int y = c.yVars[i];
      int ny = ren.count(y) ? ren[y] : y;
      used.insert(ny);
      r.code.yVars.push_back(ny);
      r.code.equations.push_back(substitute(c.equations[i], sub));
    }
    r.renaming.push_back(ren);
  }
  r.code.normalization = identityMatrix(r.code.yVars.size());
  return r;
}

std::vector<Poly> familyModuleGenerators(const FamilyCode& fc) {
  std::vector<Poly> out;
  for (const auto& H : fc.mother.equations)
    for (int l = 1; l <= fc.s; ++l) out.push_back(H.inComponent(l));
  for (const auto& G : fc.fathers) out.push_back(G);
  return out;
}

MonomialOrder epsilonOrder(const FamilyCode& fc) { return extendOrder(fc.eta, fc.n); }

std::set<int> codeVariables(const FamilyCode& fc, const std::vector<Poly>& polys) {
  std::set<int> v;
  for (const auto& p : polys)
    for (int i : p.variables())
      if (!fc.isX(i)) v.insert(i);
  return v;
}

std::set<int> motherClosure(const MotherCode& m, const std::set<int>& seeds) {
  std::set<int> closed;
  std::vector<int> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    if (!closed.insert(y).second) continue;
    auto it = std::find(m.yVars.begin(), m.yVars.end(), y);
    if (it == m.yVars.end()) continue;
    const Poly& eq = m.equations[static_cast<std::size_t>(it - m.yVars.begin())];
    for (int v : eq.variables())
      if (std::find(m.yVars.begin(), m.yVars.end(), v) != m.yVars.end() && !closed.count(v)) stack.push_back(v);
  }
  std::set<int> out;
  for (int y : closed)
    if (std::find(m.yVars.begin(), m.yVars.end(), y) != m.yVars.end()) out.insert(y);
  return out;
}

MotherCode restrictMother(const MotherCode& m, const std::set<int>& keep) {
  MotherCode r;
  for (std::size_t i = 0; i < m.yVars.size(); ++i) {
    if (!keep.count(m.yVars[i])) continue;
    r.yVars.push_back(m.yVars[i]);
    r.equations.push_back(m.equations[i]);
  }
  r.normalization = identityMatrix(r.yVars.size());
  return r;
}

CodeStandardBasisResult codeStandardBasis(const FamilyCode& fc) {
  // The encoded series must vanish at 0 for the code module to describe I.
  for (const auto& G : fc.fathers) {
    auto ex = substitute(G, [&] {
      std::map<int, Poly> z;
      for (int y : fc.mother.yVars) z[y] = Poly();
      return z;
    }());
    for (const auto& [m, c] : ex.terms())
      if (m.isOne()) throw InvalidCode("father with nonzero constant term");
  }
  MonomialOrder eps = epsilonOrder(fc);
  std::vector<Poly> gens = familyModuleGenerators(fc);
  int u = std::max(fc.ring.size(), firstUnusedVar(gens));
  std::vector<Poly> sb = lazardStandardBasisLift(gens, eps, u, false).basis;

  auto xOnly = [&fc](const Monomial& m) {
    for (std::size_t i = static_cast<std::size_t>(fc.n); i < m.width(); ++i)
      if (m[i] != 0) return false;
    return true;
  };
  std::vector<std::pair<Poly, Monomial>> candidates;
  for (const auto& G : fc.fathers) {
    if (G.isZero()) continue;
    Monomial in = initialMonomial(G, eps);
    if (xOnly(in)) candidates.emplace_back(G, in);
  }
  for (const auto& g : sb) {
    Monomial in = initialMonomial(g, eps);
    if (xOnly(in)) candidates.emplace_back(g.monicAt(in), in);
  }
  std::vector<Monomial> inits;
  for (const auto& c : candidates) inits.push_back(c.second);
  MonomialModule M = minimalGenerators(inits, fc.n, fc.s);
  CodeStandardBasisResult r;
  r.code = fc;
  r.code.fathers.clear();
  std::vector<Monomial> taken;
  for (const auto& [g, in] : candidates) {
    if (std::find(M.generators.begin(), M.generators.end(), in) == M.generators.end()) continue;
    if (std::find(taken.begin(), taken.end(), in) != taken.end()) continue;
    taken.push_back(in);
    r.code.fathers.push_back(g);
  }
  r.initial = MonomialModule{fc.n, fc.s, taken};
  r.code.initials = taken;
  return r;
}

std::vector<Poly> expandFathers(const FamilyCode& fc, int D) {
  BabySeriesApprox h = babyExpand(fc.mother, D);
  std::vector<Poly> out;
  for (const auto& G : fc.fathers) out.push_back(substitute(G, h.series).value.truncate(D));
  return out;
}

namespace {

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) {
    std::string cleaned;
    for (char c : w)
      if (c != ',') cleaned += c;
    if (!cleaned.empty()) out.push_back(cleaned);
  }
  return out;
}

}  // namespace

FamilyCode parseCodeFile(std::istream& in, bool validate) {
  FamilyCode fc;
  std::vector<std::string> xs, ps;
  std::string orderSpec;
  std::vector<std::pair<std::string, int>> motherLines;
  std::map<int, std::vector<std::pair<std::string, int>>> fatherLines;
  int comps = 0;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trimmed(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineNo, 1);
    std::string key = trimmed(line.substr(0, colon));
    std::string val = trimmed(line.substr(colon + 1));
    if (key == "vars") xs = words(val);
    else if (key == "params") ps = words(val);
    else if (key == "order") orderSpec = val;
    else if (key == "components") comps = std::stoi(val);
    else if (key == "mother") motherLines.emplace_back(val, lineNo);
    else if (key.rfind("father", 0) == 0) {
      int idx = static_cast<int>(fatherLines.size()) + 1;
      auto lb = key.find('['), rb = key.find(']');
      if (lb != std::string::npos && rb != std::string::npos && rb > lb + 1)
        idx = std::stoi(key.substr(lb + 1, rb - lb - 1));
      fatherLines[idx].emplace_back(val, lineNo);
    } else {
      throw ParseError("unknown key '" + key + "'", lineNo, 1);
    }
  }
  if (xs.empty()) throw ParseError("missing 'vars:' line", 0, 1);
  for (const auto& x : xs) fc.ring.add(x);
  fc.n = static_cast<int>(xs.size());
  std::vector<int> yIdx;
  for (const auto& p : ps) {
    if (fc.ring.find(p) >= 0) throw ParseError("parameter '" + p + "' clashes with a variable", 0, 1);
    yIdx.push_back(fc.ring.add(p));
  }
  if (orderSpec.empty()) {
    std::vector<int> prec;
    for (int i = 0; i < fc.n; ++i) prec.push_back(i);
    fc.eta = MonomialOrder::grlex(prec, fc.ring.names());
  } else {
    Ring probe = fc.ring;
    fc.eta = parseOrder(orderSpec, probe);
    if (probe.size() != fc.ring.size()) throw ParseError("order mentions unknown variables", 0, 1);
  }
  std::vector<Poly> H;
  for (const auto& [text, ln] : motherLines) H.push_back(parsePoly(text, fc.ring, false, ln));
  if (H.size() != yIdx.size()) throw ParseError("need one 'mother:' line per parameter", 0, 1);
  int s = std::max(comps, 1);
  for (const auto& [idx, parts] : fatherLines) {
    Poly G;
    for (const auto& [text, ln] : parts) G += parsePoly(text, fc.ring, false, ln);
    s = std::max(s, G.maxComp());
    fc.fathers.push_back(G);
  }
  fc.s = s;
  if (validate) {
    fc.mother = validateMotherCode(H, yIdx);
  } else {
    fc.mother.yVars = yIdx;
    fc.mother.equations = H;
    fc.mother.normalization = identityMatrix(H.size());
  }
  return fc;
}

FamilyCode parseCodeString(const std::string& text, bool validate) {
  std::istringstream is(text);
  return parseCodeFile(is, validate);
}

}  // namespace famcode
