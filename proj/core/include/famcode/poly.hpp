#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace famcode {

using Rational = mpq_class;

/// Raised when two operands do not live in compatible ambients.
class AmbientError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector with a module component (1-based).
///
/// Trailing zero exponents are never stored, so monomials of a ring and
/// of any extension of it by appended variables compare and hash alike.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps, int comp = 1);

  static Monomial var(int index, int power = 1, int comp = 1);

  int operator[](std::size_t i) const { return i < exp_.size() ? exp_[i] : 0; }
  std::size_t width() const { return exp_.size(); }
  const std::vector<int>& exps() const { return exp_; }
  int comp() const { return comp_; }
  int degree() const;
  bool isOne() const { return exp_.empty(); }

  Monomial withComp(int c) const;
  Monomial withExp(int var, int e) const;
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this; requires divides(o). Component of the result is 1.
  Monomial quotient(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  /// Exponents restricted to variables with pred(i) true; component kept.
  Monomial restrict(const std::function<bool(int)>& keep) const;
  /// Total degree over the variables with pred(i) true.
  int degreeIn(const std::function<bool(int)>& pred) const;

  bool operator==(const Monomial& o) const { return comp_ == o.comp_ && exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  void trim();
  std::vector<int> exp_;
  int comp_ = 1;
};

/// Canonical storage order: lexicographic on exponents, then component.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial vector: a finite map from monomial vectors to nonzero
/// rationals. Scalars are vectors whose terms all sit in component 1.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT
  Poly(const Monomial& m, const Rational& c = 1);

  static Poly var(int index, int power = 1) { return Poly(Monomial::var(index, power)); }
  static Poly unitVector(int comp) { return Poly(Monomial({}, comp)); }

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  void addTerm(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
  Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
  /// Product; at most one factor may carry a component other than 1.
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly mulTerm(const Monomial& m, const Rational& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  bool isScalar() const;
  int maxComp() const;
  int degree() const;     ///< maximal total degree, -1 for zero
  int lowDegree() const;  ///< minimal total degree, -1 for zero
  int degreeIn(int var) const;
  Rational constantTerm() const;  ///< coefficient of 1 in component 1
  bool hasConstantTerm() const;
  std::set<int> variables() const;
  bool involves(int var) const;
  bool involvesAny(const std::function<bool(int)>& pred) const;

  /// Component c as a scalar polynomial.
  Poly component(int c) const;
  /// Scalar moved into component c.
  Poly inComponent(int c) const;
  Poly truncate(int D) const;
  /// Keeps only terms satisfying pred.
  Poly filter(const std::function<bool(const Monomial&)>& pred) const;
  Poly derivative(int var) const;
  /// Sets the given variables to zero.
  Poly zeroVars(const std::function<bool(int)>& pred) const;
  /// Coefficient of var^k as a polynomial free of var.
  Poly coeffOf(int var, int k) const;
  /// Content-free scaling so that the coefficient at m is 1.
  Poly monicAt(const Monomial& m) const;

 private:
  TermMap terms_;
};

Poly operator*(const Rational& c, const Poly& p);

/// Finite representative of a power series vector: terms of degree > D are
/// unknown.
struct TruncatedSeries {
  Poly value;
  int degree = 0;
};

TruncatedSeries truncate(const Poly& v, int D);

/// Product of scalars truncated at total degree D.
Poly mulTrunc(const Poly& a, const Poly& b, int D);
/// a^k truncated at D.
Poly powTrunc(const Poly& a, int k, int D);

/// Exact substitution of polynomials for variables; other variables stay.
Poly substitute(const Poly& g, const std::map<int, Poly>& assignment);
/// Substitution of truncated series vanishing at 0; the result is truncated
/// at the minimum truncation degree. Throws AmbientError if a series has a
/// nonzero constant term.
TruncatedSeries substitute(const Poly& g, const std::map<int, TruncatedSeries>& assignment);

/// Matrix of dH_i/dy_j at the origin.
std::vector<std::vector<Rational>> jacobianAtZero(const std::vector<Poly>& H,
                                                  const std::vector<int>& yVars);

/// Variable names of a polynomial ring that only ever grows by appending.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  int find(const std::string& n) const;  ///< -1 if absent
  int index(const std::string& n) const; ///< throws if absent
  int add(const std::string& n);         ///< appends, or returns the existing index
  /// Appends "<prefix><k>" with the smallest k above every existing such name.
  int fresh(const std::string& prefix);
  /// Renames variable i; throws if the name is taken by another variable.
  void rename(int i, const std::string& n);

 private:
  std::vector<std::string> names_;
};

std::string formatRational(const Rational& q);

}  // namespace famcode
