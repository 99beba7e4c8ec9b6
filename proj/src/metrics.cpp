#include "ztg/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ztg {

namespace {

std::vector<int> bfs_dist(const Graph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

// shortest cycle through BFS trees rooted at every vertex
int girth_of(const Graph& g) {
  int best = -1;
  int n = g.vertex_count();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), par(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          par[v] = u;
          q.push(v);
        } else if (v != par[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

struct BkState {
  const Graph* g;
  int best = 0;
};

void bron_kerbosch(BkState& st, Bitset r, Bitset p, Bitset x, int rsize) {
  if (p.none() && x.none()) {
    st.best = std::max(st.best, rsize);
    return;
  }
  if (rsize + p.count() <= st.best) return;
  // pivot: vertex of P ∪ X with most neighbours in P
  int pivot = -1, best_nbrs = -1;
  Bitset px = p | x;
  for (int u : px.members()) {
    int c = (st.g->adj[u] & p).count();
    if (c > best_nbrs) {
      best_nbrs = c;
      pivot = u;
    }
  }
  Bitset candidates = p;
  if (pivot >= 0) {
    Bitset keep = st.g->adj[pivot];
    for (int v : p.members())
      if (keep.test(v)) candidates.reset(v);
  }
  for (int v : candidates.members()) {
    Bitset r2 = r;
    r2.set(v);
    bron_kerbosch(st, r2, p & st.g->adj[v], x & st.g->adj[v], rsize + 1);
    p.reset(v);
    x.set(v);
  }
}

bool k_colorable(const Graph& g, const std::vector<int>& order, int k,
                 std::vector<int>& color, std::size_t at) {
  if (at == order.size()) return true;
  int v = order[at];
  int used = 0;
  for (std::size_t i = 0; i < at; ++i) used = std::max(used, color[order[i]] + 1);
  int limit = std::min(k, used + 1); // symmetry break: at most one fresh color
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < at && ok; ++i)
      if (g.adjacent(v, order[i]) && color[order[i]] == c) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (k_colorable(g, order, k, color, at + 1)) return true;
    color[v] = -1;
  }
  return false;
}

} // namespace

int clique_number(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  BkState st{&g, 0};
  Bitset r(n), p(n), x(n);
  p.set_all();
  bron_kerbosch(st, r, p, x, 0);
  return st.best;
}

int chromatic_number(const Graph& g, int max_vertices, int omega_hint) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > max_vertices)
    throw CapExceeded("max_chi_vertices", n, max_vertices);
  if (g.edges == 0) return 1;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  // greedy upper bound in the same order
  std::vector<int> greedy(n, -1);
  int upper = 0;
  for (int v : order) {
    std::vector<char> used(n + 1, 0);
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u) && greedy[u] >= 0) used[greedy[u]] = 1;
    int c = 0;
    while (used[c]) ++c;
    greedy[v] = c;
    upper = std::max(upper, c + 1);
  }

  int lower = omega_hint >= 0 ? omega_hint : clique_number(g);
  lower = std::max(lower, g.edges > 0 ? 2 : 1);
  for (int k = lower; k < upper; ++k) {
    std::vector<int> color(n, -1);
    if (k_colorable(g, order, k, color, 0)) return k;
  }
  return upper;
}

GraphMetrics structural_metrics(const Graph& g) {
  GraphMetrics m;
  m.vertices = g.vertex_count();
  m.edges = g.edges;
  m.clique_number = -1;
  m.chromatic_number = -1;
  int n = g.vertex_count();
  if (n == 0) {
    m.diam_kind = GraphMetrics::DiamKind::Empty;
    return m;
  }

  auto dist0 = bfs_dist(g, 0);
  bool connected = std::all_of(dist0.begin(), dist0.end(), [](int d) { return d >= 0; });
  if (!connected) {
    m.diam_kind = GraphMetrics::DiamKind::Disconnected;
  } else {
    int d = 0;
    for (int s = 0; s < n; ++s)
      for (int x : bfs_dist(g, s)) d = std::max(d, x);
    m.diam_kind = GraphMetrics::DiamKind::Finite;
    m.diameter = d;
  }

  int gr = girth_of(g);
  m.acyclic = gr < 0;
  m.girth = m.acyclic ? 0 : gr;

  // bipartite via 2-colouring
  {
    std::vector<int> side(n, -1);
    m.is_bipartite = true;
    for (int s = 0; s < n && m.is_bipartite; ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && m.is_bipartite) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v) {
          if (!g.adjacent(u, v)) continue;
          if (side[v] < 0) {
            side[v] = 1 - side[u];
            q.push(v);
          } else if (side[v] == side[u]) {
            m.is_bipartite = false;
            break;
          }
        }
      }
    }
    m.is_tree = connected && m.edges == n - 1;
    m.is_complete_bipartite = false;
    if (connected && m.is_bipartite && n >= 2) {
      int a = 0;
      for (int v = 0; v < n; ++v)
        if (side[v] == 0) ++a;
      int b = n - a;
      bool complete = a >= 1 && b >= 1;
      for (int u = 0; u < n && complete; ++u)
        for (int v = u + 1; v < n && complete; ++v)
          if (side[u] != side[v] && !g.adjacent(u, v)) complete = false;
      if (complete) {
        m.is_complete_bipartite = true;
        m.part_a = std::min(a, b);
        m.part_b = std::max(a, b);
      }
    }
    m.is_star = m.is_complete_bipartite && m.part_a == 1;
  }

  m.max_degree = 0;
  m.is_regular = true;
  for (int v = 0; v < n; ++v) {
    m.max_degree = std::max(m.max_degree, g.degree(v));
    if (g.degree(v) != g.degree(0)) m.is_regular = false;
  }
  m.degree = m.is_regular ? g.degree(0) : 0;

  if (!m.acyclic && m.girth == 3 && m.is_bipartite)
    throw std::logic_error("metrics invariant violated: bipartite with girth 3");
  return m;
}

GraphMetrics metrics(const Graph& g, int max_chi_vertices) {
  GraphMetrics m = structural_metrics(g);
  m.clique_number = clique_number(g);
  m.chromatic_number = chromatic_number(g, max_chi_vertices, m.clique_number);
  if (m.vertices > 0) {
    if (m.clique_number > m.chromatic_number)
      throw std::logic_error("metrics invariant violated: omega > chi");
    if (m.chromatic_number > m.max_degree + 1)
      throw std::logic_error("metrics invariant violated: chi > max_degree + 1");
  }
  return m;
}

} // namespace ztg
