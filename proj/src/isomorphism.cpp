#include "gamedyn/isomorphism.h"

#include <algorithm>
#include <cstdint>

namespace gamedyn {

namespace {

std::vector<int64_t> arc_keys(const ResponseGraph& g) {
  std::vector<int64_t> keys;
  keys.reserve(g.arcs().size());
  for (const Arc& a : g.arcs())
    keys.push_back(int64_t(a.tail) * g.node_count() + a.head);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

bool graphs_isomorphic(const ResponseGraph& a, const ResponseGraph& b) {
  auto ca = a.strategy_counts();
  auto cb = b.strategy_counts();
  if (ca.size() != cb.size()) return false;
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  if (a.arcs().size() != b.arcs().size()) return false;

  int n = int(ca.size());
  std::vector<int64_t> target = arc_keys(b);

  std::vector<int> strides_a(n, 1), strides_b(n, 1);
  for (int p = n - 2; p >= 0; --p) {
    strides_a[p] = strides_a[p + 1] * ca[p + 1];
    strides_b[p] = strides_b[p + 1] * cb[p + 1];
  }

  // candidate player permutations: player p of `a` takes role perm[p] in `b`
  std::vector<int> perm(n);
  for (int p = 0; p < n; ++p) perm[p] = p;
  std::sort(perm.begin(), perm.end());
  do {
    bool shape_ok = true;
    for (int p = 0; p < n && shape_ok; ++p) shape_ok = ca[p] == cb[perm[p]];
    if (!shape_ok) continue;

    // per-player strategy permutations, advanced as an odometer
    std::vector<std::vector<int>> smap(n);
    for (int p = 0; p < n; ++p) {
      smap[p].resize(ca[p]);
      for (int s = 0; s < ca[p]; ++s) smap[p][s] = s;
    }
    for (;;) {
      // map each node of `a` and compare arc sets
      std::vector<int64_t> mapped;
      mapped.reserve(a.arcs().size());
      auto map_node = [&](int v) {
        int w = 0;
        for (int p = 0; p < n; ++p) {
          int s = (v / strides_a[p]) % ca[p];
          w += smap[p][s] * strides_b[perm[p]];
        }
        return w;
      };
      for (const Arc& arc : a.arcs()) {
        mapped.push_back(int64_t(map_node(arc.tail)) * b.node_count() +
                         map_node(arc.head));
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped == target) return true;

      int p = n - 1;
      while (p >= 0 && !std::next_permutation(smap[p].begin(), smap[p].end()))
        --p;
      if (p < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace gamedyn
