#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace famcode {

/// Strict precedence a >_zeta b between two unknowns (node indices).
struct ZetaRelation {
  int greater = 0;
  int smaller = 0;
  int schema = 0;  ///< 1..8, which relation family produced it
};

class CycleError : public std::runtime_error {
 public:
  CycleError(const std::string& what, std::vector<int> cycle)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

/// Linear extension of the relations on nodes 0..count-1, largest first.
/// Among the currently maximal nodes the smallest index is taken, so callers
/// fix the tie-break by numbering the nodes. Throws CycleError naming one
/// cycle when the relations are contradictory.
std::vector<int> solveZetaConstraints(int count, const std::vector<ZetaRelation>& relations);

}  // namespace famcode
