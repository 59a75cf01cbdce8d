#include "gamedyn/content.h"

#include <algorithm>
#include <stdexcept>

namespace gamedyn {

namespace {

// is a's strategy sets componentwise contained in b's?
bool box_subset(const SubgameSpec& a, const SubgameSpec& b) {
  for (std::size_t p = 0; p < a.sets.size(); ++p)
    for (int s : a.sets[p])
      if (!std::binary_search(b.sets[p].begin(), b.sets[p].end(), s))
        return false;
  return true;
}

}  // namespace

ComponentContent content(const ResponseGraph& rg, const std::vector<int>& nodes) {
  const auto& counts = rg.strategy_counts();
  int n = int(counts.size());
  long long combos = 1;
  for (int c : counts) {
    combos *= (1LL << c) - 1;
    if (combos > 4'000'000) throw std::invalid_argument("strategy space too large for content enumeration");
  }

  std::vector<bool> in_w(rg.node_count(), false);
  for (int v : nodes) in_w[v] = true;

  std::vector<int> strides(n, 1);
  for (int p = n - 2; p >= 0; --p) strides[p] = strides[p + 1] * counts[p + 1];

  // walk every combination of nonempty per-player subsets (bitmask odometer)
  std::vector<int> mask(n, 1);
  std::vector<SubgameSpec> boxes;
  for (;;) {
    SubgameSpec spec;
    spec.sets.resize(n);
    for (int p = 0; p < n; ++p)
      for (int s = 0; s < counts[p]; ++s)
        if (mask[p] >> s & 1) spec.sets[p].push_back(s);

    // product of the subsets inside W?
    bool ok = true;
    std::vector<int> idx(n, 0);
    for (;;) {
      int z = 0;
      for (int p = 0; p < n; ++p) z += spec.sets[p][idx[p]] * strides[p];
      if (!in_w[z]) { ok = false; break; }
      int p = n - 1;
      while (p >= 0 && ++idx[p] == int(spec.sets[p].size())) idx[p--] = 0;
      if (p < 0) break;
    }
    if (ok) boxes.push_back(std::move(spec));

    int p = n - 1;
    while (p >= 0 && ++mask[p] == (1 << counts[p])) mask[p--] = 1;
    if (p < 0) break;
  }

  ComponentContent c;
  c.nodes = nodes;
  std::sort(c.nodes.begin(), c.nodes.end());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < boxes.size() && maximal; ++j)
      if (i != j && box_subset(boxes[i], boxes[j]) && !(boxes[i] == boxes[j]))
        maximal = false;
    if (maximal) c.maximal_boxes.push_back(boxes[i]);
  }
  return c;
}

bool content_member(const Game& g, const ComponentContent& c, const State& x,
                    double tol) {
  SubgameSpec support = support_subgame(g, x, tol);
  for (const auto& box : c.maximal_boxes)
    if (box_subset(support, box)) return true;
  return false;
}

}  // namespace gamedyn
