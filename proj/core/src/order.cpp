#include "famcode/order.hpp"

#include <algorithm>
#include <sstream>

namespace famcode {

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

// Lex over the listed variables, then remaining variables by index.
int lexCompare(const Monomial& a, const Monomial& b, const std::vector<int>& prec) {
  for (int v : prec) {
    int d = a[static_cast<std::size_t>(v)] - b[static_cast<std::size_t>(v)];
    if (d) return sign(d);
  }
  std::size_t w = std::max(a.width(), b.width());
  for (std::size_t i = 0; i < w; ++i) {
    if (std::find(prec.begin(), prec.end(), static_cast<int>(i)) != prec.end()) continue;
    int d = a[i] - b[i];
    if (d) return sign(d);
  }
  return 0;
}

std::string precedenceText(const std::vector<int>& prec, const std::vector<std::string>& names) {
  std::ostringstream os;
  for (std::size_t i = 0; i < prec.size(); ++i) {
    if (i) os << '>';
    auto v = static_cast<std::size_t>(prec[i]);
    if (v < names.size()) os << names[v];
    else os << '#' << prec[i];
  }
  return os.str();
}

class LexImpl : public OrderImpl {
 public:
  LexImpl(std::vector<int> prec, std::vector<std::string> names, bool graded)
      : prec_(std::move(prec)), names_(std::move(names)), graded_(graded) {}
  int compare(const Monomial& a, const Monomial& b) const override {
    if (graded_) {
      int d = a.degree() - b.degree();
      if (d) return sign(d);
    }
    if (int c = lexCompare(a, b, prec_)) return c;
    return sign(a.comp() - b.comp());
  }
  std::string describe() const override {
    return std::string(graded_ ? "grlex:" : "lex:") + precedenceText(prec_, names_);
  }

 private:
  std::vector<int> prec_;
  std::vector<std::string> names_;
  bool graded_;
};

class CustomImpl : public OrderImpl {
 public:
  CustomImpl(std::function<int(const Monomial&, const Monomial&)> f, std::string name)
      : f_(std::move(f)), name_(std::move(name)) {}
  int compare(const Monomial& a, const Monomial& b) const override { return f_(a, b); }
  std::string describe() const override { return name_; }

 private:
  std::function<int(const Monomial&, const Monomial&)> f_;
  std::string name_;
};

class ExtendImpl : public OrderImpl {
 public:
  ExtendImpl(MonomialOrder eta, int n) : eta_(std::move(eta)), n_(n) {}
  int compare(const Monomial& a, const Monomial& b) const override {
    auto isX = [this](int i) { return i < n_; };
    auto notX = [this](int i) { return i >= n_; };
    if (int c = eta_.compare(a.restrict(isX), b.restrict(isX))) return c;
    int d = a.degreeIn(notX) - b.degreeIn(notX);
    if (d) return sign(d);
    std::size_t w = std::max(a.width(), b.width());
    for (std::size_t i = static_cast<std::size_t>(n_); i < w; ++i)
      if (a[i] != b[i]) return sign(a[i] - b[i]);
    return 0;
  }
  std::string describe() const override { return "extend(" + eta_.describe() + ")"; }

 private:
  MonomialOrder eta_;
  int n_;
};

class HomogImpl : public OrderImpl {
 public:
  HomogImpl(MonomialOrder local, int u) : local_(std::move(local)), u_(u) {}
  int compare(const Monomial& a, const Monomial& b) const override {
    int d = a.degree() - b.degree();
    if (d) return sign(d);
    auto keep = [this](int i) { return i != u_; };
    return -local_.compare(a.restrict(keep), b.restrict(keep));
  }
  std::string describe() const override { return "homog(" + local_.describe() + ")"; }

 private:
  MonomialOrder local_;
  int u_;
};

class OmegaImpl : public OrderImpl {
 public:
  explicit OmegaImpl(OmegaSpec s) : s_(std::move(s)) {
    listed_ = s_.yVars;
    listed_.push_back(s_.activeVar);
    listed_.insert(listed_.end(), s_.restVars.begin(), s_.restVars.end());
    listed_.insert(listed_.end(), s_.gammaVars.begin(), s_.gammaVars.end());
  }
  int compare(const Monomial& a, const Monomial& b) const override {
    int ca = s_.cellOf(a), cb = s_.cellOf(b);
    if (!s_.regular.empty()) {
      bool ra = s_.regular[static_cast<std::size_t>(ca)], rb = s_.regular[static_cast<std::size_t>(cb)];
      if (ra != rb) return ra ? 1 : -1;
    }
    for (int v : s_.yVars)
      if (int d = a[static_cast<std::size_t>(v)] - b[static_cast<std::size_t>(v)]) return sign(d);
    auto an = static_cast<std::size_t>(s_.activeVar);
    int sa = a[an] - s_.shift[static_cast<std::size_t>(ca)];
    int sb = b[an] - s_.shift[static_cast<std::size_t>(cb)];
    if (sa != sb) return sign(sa - sb);
    for (int v : s_.restVars)
      if (int d = a[static_cast<std::size_t>(v)] - b[static_cast<std::size_t>(v)]) return sign(d);
    int ra = s_.rank[static_cast<std::size_t>(ca)], rb = s_.rank[static_cast<std::size_t>(cb)];
    if (ra != rb) return ra < rb ? 1 : -1;
    for (int v : s_.gammaVars)
      if (int d = a[static_cast<std::size_t>(v)] - b[static_cast<std::size_t>(v)]) return sign(d);
    std::size_t w = std::max(a.width(), b.width());
    for (std::size_t i = 0; i < w; ++i) {
      if (std::find(listed_.begin(), listed_.end(), static_cast<int>(i)) != listed_.end()) continue;
      if (a[i] != b[i]) return sign(a[i] - b[i]);
    }
    return sign(a.comp() - b.comp());
  }
  std::string describe() const override { return "omega"; }

 private:
  OmegaSpec s_;
  std::vector<int> listed_;
};

class ZetaImpl : public OrderImpl {
 public:
  ZetaImpl(std::vector<int> ranking, std::vector<std::string> names)
      : ranking_(std::move(ranking)), names_(std::move(names)) {}
  int compare(const Monomial& a, const Monomial& b) const override {
    int da = 0, db = 0;
    for (int v : ranking_) {
      da += a[static_cast<std::size_t>(v)];
      db += b[static_cast<std::size_t>(v)];
    }
    if (da != db) return sign(da - db);
    for (int v : ranking_)
      if (int d = a[static_cast<std::size_t>(v)] - b[static_cast<std::size_t>(v)]) return sign(d);
    return 0;
  }
  std::string describe() const override { return "zeta:" + precedenceText(ranking_, names_); }

 private:
  std::vector<int> ranking_;
  std::vector<std::string> names_;
};

class XiImpl : public OrderImpl {
 public:
  XiImpl(MonomialOrder zeta, MonomialOrder eps, std::vector<int> gamma)
      : zeta_(std::move(zeta)), eps_(std::move(eps)), gamma_(std::move(gamma)) {}
  int compare(const Monomial& a, const Monomial& b) const override {
    auto inG = [this](int i) { return std::find(gamma_.begin(), gamma_.end(), i) != gamma_.end(); };
    auto outG = [&inG](int i) { return !inG(i); };
    int d = a.degreeIn(inG) - b.degreeIn(inG);
    if (d) return sign(d);
    if (int c = eps_.compare(a.restrict(outG), b.restrict(outG))) return c;
    return zeta_.compare(a.restrict(inG).withComp(1), b.restrict(inG).withComp(1));
  }
  std::string describe() const override { return "xi(" + zeta_.describe() + "; " + eps_.describe() + ")"; }

 private:
  MonomialOrder zeta_, eps_;
  std::vector<int> gamma_;
};

}  // namespace

MonomialOrder MonomialOrder::lex(std::vector<int> precedence, std::vector<std::string> names) {
  return MonomialOrder(std::make_shared<LexImpl>(std::move(precedence), std::move(names), false));
}

MonomialOrder MonomialOrder::grlex(std::vector<int> precedence, std::vector<std::string> names) {
  return MonomialOrder(std::make_shared<LexImpl>(std::move(precedence), std::move(names), true));
}

MonomialOrder MonomialOrder::custom(std::function<int(const Monomial&, const Monomial&)> cmp,
                                    std::string name) {
  return MonomialOrder(std::make_shared<CustomImpl>(std::move(cmp), std::move(name)));
}

MonomialOrder extendOrder(const MonomialOrder& eta, int n) {
  return MonomialOrder(std::make_shared<ExtendImpl>(eta, n));
}

MonomialOrder homogenizedOrder(const MonomialOrder& local, int u) {
  return MonomialOrder(std::make_shared<HomogImpl>(local, u));
}

MonomialOrder makeOmegaOrder(OmegaSpec spec) {
  if (spec.activeVar < 0 || !spec.cellOf || spec.shift.size() != spec.rank.size() ||
      (!spec.regular.empty() && spec.regular.size() != spec.rank.size()))
    throw std::invalid_argument("makeOmegaOrder: invalid block partition");
  return MonomialOrder(std::make_shared<OmegaImpl>(std::move(spec)));
}

MonomialOrder makeZetaOrder(std::vector<int> ranking, std::vector<std::string> names) {
  return MonomialOrder(std::make_shared<ZetaImpl>(std::move(ranking), std::move(names)));
}

MonomialOrder makeXiOrder(const MonomialOrder& zeta, const MonomialOrder& epsilon,
                          std::vector<int> gammaVars) {
  return MonomialOrder(std::make_shared<XiImpl>(zeta, epsilon, std::move(gammaVars)));
}

InitialTerm initialVector(const Poly& g, const MonomialOrder& order) {
  if (g.isZero()) throw std::invalid_argument("initialVector of zero");
  const auto* best = &*g.terms().begin();
  for (const auto& t : g.terms())
    if (order.less(t.first, best->first)) best = &t;
  Poly tail = Poly(best->first) - g * Rational(1 / best->second);
  return {best->first, best->second, tail};
}

InitialTerm leadingVector(const Poly& g, const MonomialOrder& order) {
  if (g.isZero()) throw std::invalid_argument("leadingVector of zero");
  const auto* best = &*g.terms().begin();
  for (const auto& t : g.terms())
    if (order.less(best->first, t.first)) best = &t;
  Poly tail = Poly(best->first) - g * Rational(1 / best->second);
  return {best->first, best->second, tail};
}

Monomial initialMonomial(const Poly& g, const MonomialOrder& order) {
  if (g.isZero()) throw std::invalid_argument("initialMonomial of zero");
  const Monomial* best = &g.terms().begin()->first;
  for (const auto& t : g.terms())
    if (order.less(t.first, *best)) best = &t.first;
  return *best;
}

Monomial leadingMonomial(const Poly& g, const MonomialOrder& order) {
  if (g.isZero()) throw std::invalid_argument("leadingMonomial of zero");
  const Monomial* best = &g.terms().begin()->first;
  for (const auto& t : g.terms())
    if (order.less(*best, t.first)) best = &t.first;
  return *best;
}

std::vector<std::pair<Monomial, Rational>> sortedTerms(const Poly& g, const MonomialOrder& order) {
  std::vector<std::pair<Monomial, Rational>> v(g.terms().begin(), g.terms().end());
  std::stable_sort(v.begin(), v.end(),
                   [&order](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return v;
}

}  // namespace famcode
