#include "famcode/poly.hpp"

#include <algorithm>

namespace famcode {

Monomial::Monomial(std::vector<int> exps, int comp) : exp_(std::move(exps)), comp_(comp) {
  for (int e : exp_)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (comp_ < 1) throw std::invalid_argument("component index must be >= 1");
  trim();
}

Monomial Monomial::var(int index, int power, int comp) {
  std::vector<int> e(static_cast<std::size_t>(index) + 1, 0);
  e[static_cast<std::size_t>(index)] = power;
  return Monomial(std::move(e), comp);
}

void Monomial::trim() {
  while (!exp_.empty() && exp_.back() == 0) exp_.pop_back();
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exp_) d += e;
  return d;
}

Monomial Monomial::withComp(int c) const {
  Monomial m = *this;
  m.comp_ = c;
  return m;
}

Monomial Monomial::withExp(int var, int e) const {
  Monomial m = *this;
  if (static_cast<std::size_t>(var) >= m.exp_.size()) m.exp_.resize(static_cast<std::size_t>(var) + 1, 0);
  m.exp_[static_cast<std::size_t>(var)] = e;
  m.trim();
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (comp_ != 1 && o.comp_ != 1) throw AmbientError("product of two module monomials");
  Monomial m;
  m.exp_.assign(std::max(exp_.size(), o.exp_.size()), 0);
  for (std::size_t i = 0; i < m.exp_.size(); ++i) m.exp_[i] = (*this)[i] + o[i];
  m.comp_ = comp_ != 1 ? comp_ : o.comp_;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (comp_ != o.comp_) return false;
  if (exp_.size() > o.exp_.size()) return false;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  Monomial m;
  m.exp_.assign(o.exp_.size(), 0);
  for (std::size_t i = 0; i < o.exp_.size(); ++i) m.exp_[i] = o.exp_[i] - (*this)[i];
  m.trim();
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m;
  m.exp_.assign(std::max(exp_.size(), o.exp_.size()), 0);
  for (std::size_t i = 0; i < m.exp_.size(); ++i) m.exp_[i] = std::max((*this)[i], o[i]);
  m.comp_ = comp_;
  return m;
}

Monomial Monomial::restrict(const std::function<bool(int)>& keep) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < m.exp_.size(); ++i)
    if (!keep(static_cast<int>(i))) m.exp_[i] = 0;
  m.trim();
  return m;
}

int Monomial::degreeIn(const std::function<bool(int)>& pred) const {
  int d = 0;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (pred(static_cast<int>(i))) d += exp_[i];
  return d;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  std::size_t w = std::max(a.width(), b.width());
  for (std::size_t i = 0; i < w; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.comp() < b.comp();
}

}  // namespace famcode
