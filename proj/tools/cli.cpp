#include "cli.hpp"

#include "famcode/io.hpp"
#include "famcode/reduction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace famcode::cli {

using nlohmann::json;

namespace {

std::string trimmed(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Options {
  std::string input;
  std::string order;
  int degree = 10;
  bool json = false;
  bool verify = false;
  std::string dividend;
};

// Ring indices shown in JSON exponent vectors: the x variables and the code
// variables still in use (internal unknowns are dropped).
std::vector<int> columns(const FamilyCode& fc, const std::set<int>& extra = {}) {
  std::set<int> codes = codeVariables(fc, fc.fathers);
  codes.insert(extra.begin(), extra.end());
  codes.insert(fc.mother.yVars.begin(), fc.mother.yVars.end());
  std::vector<int> cols;
  for (int i = 0; i < fc.n; ++i) cols.push_back(i);
  for (int v : codes)
    if (v >= fc.n) cols.push_back(v);
  return cols;
}

class Renderer {
 public:
  explicit Renderer(const FamilyCode& fc, const std::set<int>& extra = {})
      : ring_(fc.ring), s_(fc.s), eps_(extendOrder(fc.eta, fc.n)), cols_(columns(fc, extra)) {}

  std::string text(const Poly& p) const { return renderVector(p, ring_, eps_, s_); }

  std::string monomial(const Monomial& m) const {
    std::string r = renderMonomial(m.withComp(1), ring_);
    if (r.empty()) r = "1";
    if (s_ > 1) r += " @ " + std::to_string(m.comp());
    return r;
  }

  json terms(const Poly& p) const {
    json arr = json::array();
    if (p.isZero()) return arr;
    auto ts = sortedTerms(p, eps_);
    for (auto it = ts.rbegin(); it != ts.rend(); ++it)
      arr.push_back({{"exp", exps(it->first)}, {"comp", it->first.comp()}, {"coeff", it->second.get_str()}});
    return arr;
  }

  json mono(const Monomial& m) const { return {{"exp", exps(m)}, {"comp", m.comp()}}; }

 private:
  std::vector<int> exps(const Monomial& m) const {
    std::vector<int> e;
    for (int v : cols_) e.push_back(m[static_cast<std::size_t>(v)]);
    return e;
  }

  const Ring& ring_;
  int s_;
  MonomialOrder eps_;
  std::vector<int> cols_;
};

json header(const FamilyCode& fc, const std::set<int>& extra = {}) {
  std::vector<std::string> xs(fc.ring.names().begin(), fc.ring.names().begin() + fc.n), ring;
  for (int v : columns(fc, extra)) ring.push_back(fc.ring.name(v));
  return {{"vars", xs}, {"ring", ring}, {"components", fc.s}, {"order", fc.eta.describe()}};
}

void printCode(const FamilyCode& fc, const std::string& fatherLabel, std::ostream& out, json* doc,
               const Renderer* shared = nullptr) {
  Renderer own(fc);
  const Renderer& r = shared ? *shared : own;
  if (doc) {
    json mothers = json::array();
    for (std::size_t i = 0; i < fc.mother.yVars.size(); ++i)
      mothers.push_back({{"var", fc.ring.name(fc.mother.yVars[i])}, {"equation", r.terms(fc.mother.equations[i])}});
    json fathers = json::array();
    for (const auto& g : fc.fathers) fathers.push_back(r.terms(g));
    (*doc)["mother"] = mothers;
    (*doc)[fatherLabel == "basis" ? "basis" : fatherLabel + "s"] = fathers;
    if (!fc.initials.empty()) {
      json in = json::array();
      for (const auto& m : fc.initials) in.push_back(r.mono(m));
      (*doc)["initials"] = in;
    }
    return;
  }
  for (std::size_t i = 0; i < fc.mother.yVars.size(); ++i)
    out << "mother[" << fc.ring.name(fc.mother.yVars[i]) << "]: " << r.text(fc.mother.equations[i]) << "\n";
  for (std::size_t k = 0; k < fc.fathers.size(); ++k)
    out << fatherLabel << "[" << k + 1 << "]: " << r.text(fc.fathers[k]) << "\n";
}

FamilyCode loadCode(const Options& o) {
  std::ifstream in(o.input);
  if (!in) throw ParseError("cannot open '" + o.input + "'", 0, 0);
  FamilyCode fc = parseCodeFile(in);
  if (!o.order.empty()) {
    Ring probe = fc.ring;
    fc.eta = parseOrder(o.order, probe);
    if (probe.size() != fc.ring.size()) throw ParseError("order mentions unknown variables", 0, 1);
  }
  return fc;
}

void reportVerify(bool ok, const std::string& what, const std::string& why, std::ostream& out, json* doc) {
  if (doc) {
    (*doc)["verify"] = {{"ok", ok}, {"check", what}, {"detail", why}};
    return;
  }
  out << "verify: " << (ok ? "ok" : "FAILED") << " (" << what << ")";
  if (!ok) out << ": " << why;
  out << "\n";
}

int cmdStdBasis(const Options& o, std::ostream& out) {
  FamilyCode fc = loadCode(o);
  CodeStandardBasisResult sb = codeStandardBasis(fc);
  json doc = header(sb.code);
  json* d = o.json ? &doc : nullptr;
  Renderer r(sb.code);
  if (!o.json) {
    out << "initial:";
    for (std::size_t i = 0; i < sb.initial.generators.size(); ++i)
      out << (i ? ", " : " ") << r.monomial(sb.initial.generators[i]);
    out << "\n";
  }
  printCode(sb.code, "father", out, d);
  bool ok = true;
  if (o.verify) {
    std::string why;
    ok = verifyReducedBasis(fc, sb.code, o.degree, &why, false);
    reportVerify(ok, "standard basis to degree " + std::to_string(o.degree), why, out, d);
  }
  if (o.json) out << doc.dump(2) << "\n";
  return ok ? kOk : kDomainFailure;
}

int emitBasis(const Options& o, const FamilyCode& original, const FamilyCode& basis, std::ostream& out) {
  json doc = header(basis);
  json* d = o.json ? &doc : nullptr;
  printCode(basis, "father", out, d);
  bool ok = true;
  if (o.verify) {
    std::string why;
    ok = verifyReducedBasis(original, basis, o.degree, &why);
    reportVerify(ok, "reduced basis to degree " + std::to_string(o.degree), why, out, d);
  }
  if (o.json) out << doc.dump(2) << "\n";
  return ok ? kOk : kDomainFailure;
}

int cmdReducedBasis(const Options& o, std::ostream& out) {
  FamilyCode fc = loadCode(o);
  return emitBasis(o, fc, reducedBasisGeneral(fc), out);
}

int cmdWeierstrass(const Options& o, std::ostream& out) {
  FamilyCode fc = loadCode(o);
  return emitBasis(o, fc, weierstrassNormalForm(fc), out);
}

int cmdDivide(const Options& o, std::ostream& out) {
  FamilyCode fc = loadCode(o);
  FamilyCode f = fc;
  f.fathers = {parsePoly(o.dividend, f.ring, false)};
  f.initials.clear();
  FamilyCode basis = reducedBasisGeneral(fc);
  CodeDivision dv = divideGeneral(f, basis, true);
  // one column set for the basis and the division codes
  std::set<int> basisCodes = codeVariables(basis, basis.fathers);
  basisCodes.insert(basis.mother.yVars.begin(), basis.mother.yVars.end());
  json doc = header(dv.code, basisCodes);
  json* d = o.json ? &doc : nullptr;
  Renderer r(dv.code, basisCodes);
  printCode(basis, "basis", out, d, &r);
  if (o.json) {
    json q = json::array();
    for (const auto& p : dv.quotientNumerators) q.push_back(r.terms(p));
    doc["remainder"] = r.terms(dv.code.fathers[0]);
    doc["quotients"] = q;
    doc["denominator"] = r.terms(dv.denominator);
    json mothers = json::array();
    for (std::size_t i = 0; i < dv.code.mother.yVars.size(); ++i)
      mothers.push_back({{"var", dv.code.ring.name(dv.code.mother.yVars[i])},
                         {"equation", r.terms(dv.code.mother.equations[i])}});
    doc["divisionMother"] = mothers;
  } else {
    for (std::size_t i = 0; i < dv.code.mother.yVars.size(); ++i)
      out << "mother[" << dv.code.ring.name(dv.code.mother.yVars[i]) << "]: " << r.text(dv.code.mother.equations[i])
          << "\n";
    for (std::size_t k = 0; k < dv.quotientNumerators.size(); ++k)
      out << "quotient[" << k + 1 << "]: " << r.text(dv.quotientNumerators[k]) << "\n";
    out << "denominator: " << r.text(dv.denominator) << "\n";
    out << "remainder: " << r.text(dv.code.fathers[0]) << "\n";
  }
  bool ok = true;
  if (o.verify) {
    std::string why;
    ok = checkDivision(f, basis, dv, o.degree, &why);
    reportVerify(ok, "division identity to degree " + std::to_string(o.degree), why, out, d);
  }
  if (o.json) out << doc.dump(2) << "\n";
  return ok ? kOk : kDomainFailure;
}

int cmdExpand(const Options& o, std::ostream& out) {
  FamilyCode fc = loadCode(o);
  BabySeriesApprox h = babyExpand(fc.mother, o.degree);
  std::vector<Poly> g = expandFathers(fc, o.degree);
  Renderer r(fc);
  json doc = header(fc);
  doc["degree"] = o.degree;
  json series = json::array();
  for (int y : fc.mother.yVars) {
    const Poly& v = h.series.at(y).value;
    if (o.json) series.push_back({{"var", fc.ring.name(y)}, {"series", r.terms(v)}});
    else out << fc.ring.name(y) << ": " << r.text(v) << "\n";
  }
  json fathers = json::array();
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (o.json) fathers.push_back(r.terms(g[k]));
    else out << "father[" << k + 1 << "]: " << r.text(g[k]) << "\n";
  }
  doc["series"] = series;
  doc["fathers"] = fathers;
  bool ok = true;
  if (o.verify) {
    std::map<int, Poly> sub;
    for (int y : fc.mother.yVars) sub[y] = h.series.at(y).value;
    std::string why;
    for (std::size_t i = 0; i < fc.mother.equations.size() && ok; ++i)
      if (!substitute(fc.mother.equations[i], sub).truncate(o.degree).isZero()) {
        ok = false;
        why = "equation of " + fc.ring.name(fc.mother.yVars[i]) + " has a residual";
      }
    reportVerify(ok, "mother residuals to degree " + std::to_string(o.degree), why, out, o.json ? &doc : nullptr);
  }
  if (o.json) out << doc.dump(2) << "\n";
  return ok ? kOk : kDomainFailure;
}

std::string blockText(const Block& b, const Ring& ring, int s) {
  std::string g = renderMonomial(b.generator.withComp(1), ring);
  if (g.empty()) g = "1";
  if (s > 1) g += " @ " + std::to_string(b.generator.comp());
  std::string vars;
  for (int i = 0; i < b.scope; ++i) vars += (i ? "," : "") + ring.name(i);
  return g + (vars.empty() ? std::string(" * K") : " * K[[" + vars + "]]");
}

json blockJson(const Block& b) {
  return {{"generator", b.generator.exps()}, {"comp", b.generator.comp()}, {"scope", b.scope}};
}

ModuleInput loadModule(const Options& o) {
  std::ifstream in(o.input);
  if (!in) throw ParseError("cannot open '" + o.input + "'", 0, 0);
  return parseModuleFile(in);
}

int reportBox(const BoxResult& box, const ModuleInput& mi, bool withBlocks, const Options& o, std::ostream& out) {
  json doc;
  doc["vars"] = mi.ring.names();
  doc["components"] = mi.module.s;
  doc["box"] = box.ok;
  if (!box.ok) {
    const BoxFailure& f = *box.failure;
    std::string w = renderMonomial(f.witness.withComp(1), mi.ring);
    if (mi.module.s > 1) w += " @ " + std::to_string(f.witness.comp());
    if (o.json) {
      doc["witness"] = {{"exp", f.witness.exps()}, {"comp", f.witness.comp()}};
      doc["level"] = f.level;
      doc["message"] = f.message;
      out << doc.dump(2) << "\n";
    } else {
      out << "box condition: fails\nwitness: " << w << "\nlevel: " << f.level << "\n";
    }
    throw BoxConditionFailed(f);
  }
  if (o.json) {
    if (withBlocks) {
      json j = json::array(), c = json::array();
      for (const auto& b : box.janet.blocks) j.push_back(blockJson(b));
      for (const auto& b : box.complement.blocks) c.push_back(blockJson(b));
      doc["janet"] = j;
      doc["complement"] = c;
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "box condition: holds\n";
  if (withBlocks) {
    for (const auto& b : box.janet.blocks) out << "janet: " << blockText(b, mi.ring, mi.module.s) << "\n";
    for (const auto& b : box.complement.blocks) out << "complement: " << blockText(b, mi.ring, mi.module.s) << "\n";
  }
  return kOk;
}

int cmdBoxCheck(const Options& o, std::ostream& out) {
  ModuleInput mi = loadModule(o);
  return reportBox(boxCondition(mi.module), mi, false, o, out);
}

int cmdEchelon(const Options& o, std::ostream& out) {
  ModuleInput mi = loadModule(o);
  BoxResult box = boxCondition(mi.module);
  int rc = reportBox(box, mi, true, o, out);
  if (o.verify) {
    bool ok = true;
    for (int D = 0; D <= o.degree && ok; ++D)
      ok = countMonomials(box.janet.blocks, D) == bruteForceCount(mi.module, D);
    out << "verify: " << (ok ? "ok" : "FAILED") << " (block count against enumeration to degree " << o.degree
        << ")\n";
    if (!ok) rc = kDomainFailure;
  }
  return rc;
}

}  // namespace

ModuleInput parseModuleFile(std::istream& in) {
  ModuleInput mi;
  std::vector<std::pair<std::string, int>> gens;
  int comps = 1;
  bool haveVars = false;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trimmed(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineNo, 1);
    std::string key = trimmed(line.substr(0, colon)), val = trimmed(line.substr(colon + 1));
    if (key == "vars") {
      std::istringstream ws(val);
      std::string w;
      while (ws >> w) mi.ring.add(w);
      haveVars = true;
    } else if (key == "components") {
      comps = std::stoi(val);
    } else if (key == "generator") {
      gens.emplace_back(val, lineNo);
    } else {
      throw ParseError("unknown key '" + key + "'", lineNo, 1);
    }
  }
  if (!haveVars) throw ParseError("missing 'vars:' line", 0, 1);
  std::vector<Monomial> raw;
  for (const auto& [text, ln] : gens) {
    Monomial m = parseMonomial(text, mi.ring, false, ln);
    comps = std::max(comps, m.comp());
    raw.push_back(m);
  }
  mi.module = minimalGenerators(raw, mi.ring.size(), comps);
  return mi;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool colorErrors) {
  auto diag = [&](const std::string& msg) {
    err << (colorErrors ? "\033[31merror\033[0m: " : "error: ") << msg << "\n";
  };
  CLI::App app{"Exact computations with family codes of algebraic power series", "famcode"};
  app.require_subcommand(1);
  Options o;
  struct Verb {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  const Verb verbs[] = {
      {"std-basis", "standard basis of the encoded module", cmdStdBasis},
      {"reduced-basis", "reduced standard basis", cmdReducedBasis},
      {"divide", "divide --dividend by the reduced basis of the input", cmdDivide},
      {"expand", "baby series and fathers to --degree", cmdExpand},
      {"echelon", "Janet decomposition of a monomial module and its complement", cmdEchelon},
      {"box-check", "box condition of a monomial module", cmdBoxCheck},
      {"weierstrass", "Weierstrass normal form of a single father", cmdWeierstrass},
  };
  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> dispatch;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("input", o.input, "input file")->required();
    sub->add_option("--order", o.order, "order specifier, e.g. grlex:x>y>z");
    sub->add_option("--degree", o.degree, "truncation degree")->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", o.json, "structured output");
    sub->add_flag("--verify", o.verify, "run the substitution soundness checks");
    if (std::string(v.name) == "divide") sub->add_option("--dividend", o.dividend, "polynomial to divide")->required();
    dispatch[sub] = v.fn;
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    diag(e.what());
    return kUsage;
  }
  try {
    for (auto* sub : app.get_subcommands()) return dispatch.at(sub)(o, out);
  } catch (const ParseError& e) {
    std::string where = e.line() > 0 ? "line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) + ": "
                                     : "";
    diag(o.input + ": " + where + e.what());
    return kUsage;
  } catch (const InvalidCode& e) {
    diag(o.input + ": " + e.what());
    return kUsage;
  } catch (const AmbientError& e) {
    diag(e.what());
    return kUsage;
  } catch (const BoxConditionFailed& e) {
    diag(e.what());
    return kDomainFailure;
  } catch (const CycleError& e) {
    diag(e.what());
    return kDomainFailure;
  } catch (const std::exception& e) {
    diag(e.what());
    return kDomainFailure;
  }
  return kUsage;
}

}  // namespace famcode::cli
