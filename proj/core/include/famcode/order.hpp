#pragma once

#include "famcode/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace famcode {

/// Comparison specification on monomial vectors.
///
/// All orders here are well-orders with 1 minimal. For series the initial
/// vector is the minimal support element; for polynomials under division
/// the leading vector is the maximal one.
class OrderImpl {
 public:
  virtual ~OrderImpl() = default;
  virtual int compare(const Monomial& a, const Monomial& b) const = 0;
  virtual std::string describe() const = 0;
};

class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::shared_ptr<const OrderImpl> impl) : impl_(std::move(impl)) {}

  /// -1, 0 or 1.
  int compare(const Monomial& a, const Monomial& b) const { return impl_->compare(a, b); }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  std::string describe() const { return impl_ ? impl_->describe() : "<none>"; }
  bool valid() const { return static_cast<bool>(impl_); }
  const OrderImpl* impl() const { return impl_.get(); }

  /// Lexicographic with precedence[0] most significant; variables not listed
  /// follow by ascending index; ties broken by ascending component.
  static MonomialOrder lex(std::vector<int> precedence, std::vector<std::string> names = {});
  /// Total degree first, then as lex.
  static MonomialOrder grlex(std::vector<int> precedence, std::vector<std::string> names = {});
  /// Arbitrary comparator (used for induced orders and tests).
  static MonomialOrder custom(std::function<int(const Monomial&, const Monomial&)> cmp,
                              std::string name);

 private:
  std::shared_ptr<const OrderImpl> impl_;
};

/// Extension of eta (defined on variables 0..n-1) to the code variables with
/// index >= n: compares the x-part with its component by eta first, then the
/// code part by total degree and lex (lower index more significant).
MonomialOrder extendOrder(const MonomialOrder& eta, int n);

/// Order used for Lazard homogenization with homogenizing variable u:
/// total degree first, then the reverse of `local` on the part without u.
MonomialOrder homogenizedOrder(const MonomialOrder& local, int u);

/// Data of the omega order at one level of the reduction.
struct OmegaSpec {
  std::vector<int> yVars;         ///< beta block, y_1..y_p in significance order
  int activeVar = -1;             ///< x_n of the level
  std::vector<int> restVars;      ///< alpha' block (other coefficient variables)
  std::vector<int> gammaVars;     ///< unknowns, most significant first
  /// Cell of a monomial (0-based) together with its shift d_m and rank
  /// (lower rank compares greater in the -m slot).
  std::function<int(const Monomial&)> cellOf;
  std::vector<int> shift;
  std::vector<int> rank;
  /// Cells carrying a generator x_n^{d_m}; when nonempty, terms in such
  /// cells compare above all other terms before any other slot.
  std::vector<bool> regular;
};

/// Compares (regular, beta, alpha_n - d_m, alpha', -m, gamma) lexicographically.
MonomialOrder makeOmegaOrder(OmegaSpec spec);

/// Graded order on the listed variables: total degree in them, then
/// lexicographic by `ranking` (ranking[0] largest). Other variables are
/// ignored; compare them separately if needed.
MonomialOrder makeZetaOrder(std::vector<int> ranking, std::vector<std::string> names = {});

/// Lexicographic on (|gamma|, epsilon on the non-gamma part with component,
/// zeta on the gamma part).
MonomialOrder makeXiOrder(const MonomialOrder& zeta, const MonomialOrder& epsilon,
                          std::vector<int> gammaVars);

struct InitialTerm {
  Monomial monomial;
  Rational coeff;
  Poly tail;  ///< g = coeff * (monomial - tail)
};

/// Minimal support element. Throws on zero input.
InitialTerm initialVector(const Poly& g, const MonomialOrder& order);
/// Maximal support element. Throws on zero input.
InitialTerm leadingVector(const Poly& g, const MonomialOrder& order);
Monomial initialMonomial(const Poly& g, const MonomialOrder& order);
Monomial leadingMonomial(const Poly& g, const MonomialOrder& order);

/// Terms of g sorted descending by the order.
std::vector<std::pair<Monomial, Rational>> sortedTerms(const Poly& g, const MonomialOrder& order);

}  // namespace famcode
