#include "famcode/zeta.hpp"

#include <algorithm>
#include <set>

namespace famcode {

std::vector<int> solveZetaConstraints(int count, const std::vector<ZetaRelation>& relations) {
  auto N = static_cast<std::size_t>(count);
  std::vector<std::vector<int>> below(N);
  std::vector<int> indeg(N, 0);
  for (const auto& r : relations) {
    if (r.greater < 0 || r.smaller < 0 || r.greater >= count || r.smaller >= count)
      throw std::invalid_argument("zeta relation refers to an unknown node");
    if (r.greater == r.smaller) throw CycleError("node related to itself", {r.greater});
    below[static_cast<std::size_t>(r.greater)].push_back(r.smaller);
    ++indeg[static_cast<std::size_t>(r.smaller)];
  }
  std::set<int> ready;
  for (int i = 0; i < count; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) ready.insert(i);
  std::vector<int> ranking;
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    ranking.push_back(v);
    for (int w : below[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.insert(w);
  }
  if (ranking.size() == N) return ranking;

  // Every remaining node has a remaining predecessor; walk backwards.
  std::vector<std::vector<int>> above(N);
  for (const auto& r : relations) above[static_cast<std::size_t>(r.smaller)].push_back(r.greater);
  std::vector<bool> left(N, false);
  for (std::size_t i = 0; i < N; ++i) left[i] = indeg[i] > 0;
  int v = 0;
  while (!left[static_cast<std::size_t>(v)]) ++v;
  std::vector<int> path;
  std::vector<int> seenAt(N, -1);
  while (seenAt[static_cast<std::size_t>(v)] < 0) {
    seenAt[static_cast<std::size_t>(v)] = static_cast<int>(path.size());
    path.push_back(v);
    for (int p : above[static_cast<std::size_t>(v)])
      if (left[static_cast<std::size_t>(p)]) {
        v = p;
        break;
      }
  }
  std::vector<int> cycle(path.begin() + seenAt[static_cast<std::size_t>(v)], path.end());
  std::reverse(cycle.begin(), cycle.end());
  throw CycleError("contradictory ordering constraints on the unknowns", cycle);
}

}  // namespace famcode
