#pragma once

// Test-only brute-force oracles for clique and chromatic number. Independent
// of the library solvers: plain subset/assignment enumeration.

#include <vector>

#include "ztg/graph.hpp"

namespace ztg_oracle {

inline int brute_omega(const ztg::Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (unsigned long s = 0; s < (1ul << n); ++s) {
    std::vector<int> mem;
    for (int i = 0; i < n; ++i)
      if (s & (1ul << i)) mem.push_back(i);
    bool clique = true;
    for (std::size_t i = 0; i < mem.size() && clique; ++i)
      for (std::size_t j = i + 1; j < mem.size() && clique; ++j)
        if (!g.adjacent(mem[i], mem[j])) clique = false;
    if (clique) best = std::max(best, static_cast<int>(mem.size()));
  }
  return best;
}

inline bool brute_colorable(const ztg::Graph& g, int k, std::vector<int>& color, int at) {
  if (at == g.vertex_count()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < at && ok; ++u)
      if (g.adjacent(at, u) && color[u] == c) ok = false;
    if (!ok) continue;
    color[at] = c;
    if (brute_colorable(g, k, color, at + 1)) return true;
    color[at] = -1;
  }
  return false;
}

inline int brute_chi(const ztg::Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> color(n, -1);
    if (brute_colorable(g, k, color, 0)) return k;
  }
  return n;
}

} // namespace ztg_oracle
