#pragma once

#include "famcode/order.hpp"
#include "famcode/poly.hpp"

#include <functional>
#include <vector>

namespace famcode {

/// Variables a quotient may involve.
using Scope = std::function<bool(int)>;

/// Scope x_1..x_k, i.e. variable indices 0..k-1.
Scope scopeUpTo(int k);
Scope scopeAll();

struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
  int truncation = -1;  ///< -1 for exact division
};

/// Divisor with the variables its multipliers may use.
struct ScopedDivisor {
  Poly poly;
  Scope scope;
};

class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated series division: repeatedly reduces the minimal term of degree
/// <= D divisible by some initial vector, using the first such divisor.
/// The identity f = sum q_k g_k + r holds modulo terms of degree > D. The
/// remainder agrees with the series remainder through degree D when the
/// order is degree compatible.
DivisionResult formalDivide(const TruncatedSeries& f, const std::vector<TruncatedSeries>& gens,
                            const MonomialOrder& order, int D);

/// As formalDivide with Janet scopes: the reducer of a term is the unique
/// block covering it. Throws DivisionError for a reducible term covered by
/// no block.
DivisionResult janetFormalDivide(const TruncatedSeries& f,
                                 const std::vector<std::pair<TruncatedSeries, int>>& janetGens,
                                 const MonomialOrder& order, int D);

/// Polynomial division by leading (maximal) terms with scopes; exact.
/// With strict set, a term divisible by some leading monomial but covered by
/// no scope raises DivisionError (the leading module is not an echelon).
DivisionResult janetPolyDivide(const Poly& F, const std::vector<ScopedDivisor>& basis,
                               const MonomialOrder& order, bool strict = false);
DivisionResult janetPolyDivide(const Poly& F, const std::vector<std::pair<Poly, int>>& basis,
                               const MonomialOrder& order);

struct GroebnerOptions {
  bool lift = false;  ///< record cofactors of each basis element
};

struct GroebnerResult {
  std::vector<Poly> basis;
  /// cofactors[j][k]: basis[j] = sum_k cofactors[j][k] * input[k] (when lifted).
  std::vector<std::vector<Poly>> cofactors;
};

/// Reduced, monic Groebner basis for a global (well-)order; pairs are
/// processed by lcm degree with input-index ties.
GroebnerResult groebnerBasisLift(const std::vector<Poly>& polys, const MonomialOrder& order,
                                 GroebnerOptions opts = {});
std::vector<Poly> groebnerBasis(const std::vector<Poly>& polys, const MonomialOrder& order);

struct WeakNormalFormResult {
  Poly unit;
  std::vector<Poly> multipliers;
  Poly remainder;
};

/// Tangent-cone weak normal form: unit * Q = sum W_k P_k + R with unit(0) = 1.
/// `order` is a series order (initial = minimal element).
WeakNormalFormResult moraWeakNormalForm(const Poly& Q, const std::vector<Poly>& P, const MonomialOrder& order);

struct StandardBasisResult {
  std::vector<Poly> basis;
  std::vector<std::vector<Poly>> cofactors;  ///< basis[j] = sum_k cofactors[j][k] * input[k]
};

/// Standard basis for the series ring by Lazard homogenization. `freeVar`
/// must be an index not used by the input (the homogenizing variable).
StandardBasisResult lazardStandardBasisLift(const std::vector<Poly>& polys, const MonomialOrder& localOrder,
                                            int freeVar, bool lift = false);
std::vector<Poly> lazardStandardBasis(const std::vector<Poly>& polys, const MonomialOrder& localOrder);

/// Smallest variable index not used by any of the polynomials.
int firstUnusedVar(const std::vector<Poly>& polys);

}  // namespace famcode
