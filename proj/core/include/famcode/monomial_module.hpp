#pragma once

#include "famcode/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace famcode {

/// Monomial submodule of K[[x_1..x_n]]^s given by a minimal generator set.
/// Variables are indices 0..n-1, x_n being index n-1.
struct MonomialModule {
  int n = 0;
  int s = 1;
  std::vector<Monomial> generators;
};

/// Free block x^delta * K[[x_1..x_scope]] * e.
struct Block {
  Monomial generator;
  int scope = 0;
  bool operator==(const Block& o) const { return generator == o.generator && scope == o.scope; }
};

struct JanetDecomposition {
  std::vector<Block> blocks;
};

struct ComplementDecomposition {
  std::vector<Block> blocks;
};

/// Failure of the box condition: a generator that lies in a part of the
/// complement of the pure x_a-power submodule that is not finitely generated
/// over K[[x_1..x_{a-1}]].
struct BoxFailure {
  Monomial witness;
  int level = 0;  ///< number of active variables when the failure was detected
  std::string message;
};

struct BoxResult {
  bool ok = false;
  JanetDecomposition janet;
  ComplementDecomposition complement;
  std::optional<BoxFailure> failure;
};

class BoxConditionFailed : public std::runtime_error {
 public:
  explicit BoxConditionFailed(BoxFailure f) : std::runtime_error(f.message), failure_(std::move(f)) {}
  const BoxFailure& failure() const { return failure_; }

 private:
  BoxFailure failure_;
};

/// Divisibility-minimal subset, per component; input order of survivors kept.
MonomialModule minimalGenerators(const std::vector<Monomial>& raw, int n, int s);

struct RegularityResult {
  bool regular = false;
  std::vector<Monomial> witness;  ///< the pure x_n-power generators
};
RegularityResult isXnRegular(const MonomialModule& M);

/// Decides the box condition by the nested-variable recursion; on success
/// returns both the Janet decomposition of M and the block decomposition of
/// its canonical complement.
BoxResult boxCondition(const MonomialModule& M);

/// Janet decomposition; throws BoxConditionFailed if the condition fails.
JanetDecomposition echelonDecompose(const MonomialModule& M);

/// Number of monomial vectors of total degree <= D covered by the blocks,
/// counted with multiplicity.
long long countMonomials(const std::vector<Block>& blocks, int D);
/// Number of monomial vectors of degree <= D in M, by enumeration.
long long bruteForceCount(const MonomialModule& M, int D);
/// All monomial vectors in n variables and s components of degree <= D.
std::vector<Monomial> enumerateMonomials(int n, int s, int D);
bool blockContains(const Block& b, const Monomial& m);

}  // namespace famcode
