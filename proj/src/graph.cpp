#include "ztg/graph.hpp"

#include <algorithm>
#include <sstream>

namespace ztg {

int Graph::index_of_vid(int vid) const {
  auto it = std::lower_bound(vids.begin(), vids.end(), vid);
  if (it == vids.end() || *it != vid) return -1;
  return static_cast<int>(it - vids.begin());
}

namespace {

Graph assemble(const ModuleCtx& ctx, std::vector<int> vids,
               const std::vector<std::pair<int, int>>& edge_ids) {
  Graph g;
  g.host = &ctx;
  std::sort(vids.begin(), vids.end());
  g.vids = std::move(vids);
  g.labels.reserve(g.vids.size());
  for (int id : g.vids) g.labels.push_back(submodule_label(ctx.m, ctx.lat.sub(id).mask));
  g.adj.assign(g.vids.size(), Bitset(static_cast<int>(g.vids.size())));
  for (auto [a, b] : edge_ids) {
    int i = g.index_of_vid(a), j = g.index_of_vid(b);
    if (i == j || g.adj[i].test(j)) continue;
    g.adj[i].set(j);
    g.adj[j].set(i);
    ++g.edges;
  }
  return g;
}

} // namespace

Graph build_g_tau(const TContext& tc) {
  const ModuleCtx& ctx = *tc.base;
  // candidates: proper N with V(N) a proper subset of T
  std::vector<int> cand;
  for (int i = 0; i < ctx.lat.count(); ++i) {
    if (!ctx.lat.is_proper(i)) continue;
    if (ctx.vtab[i] == tc.t) continue;
    if (!ctx.vtab[i].is_subset_of(tc.t)) continue;
    cand.push_back(i);
  }
  std::vector<char> is_vertex(cand.size(), 0);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if ((ctx.vtab[cand[i]] | ctx.vtab[cand[j]]) == tc.t) {
        is_vertex[i] = is_vertex[j] = 1;
        edges.emplace_back(cand[i], cand[j]);
      }
  std::vector<int> vids;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (is_vertex[i]) vids.push_back(cand[i]);
  return assemble(ctx, std::move(vids), edges);
}

namespace {

// NK = (0) iff (N:M)(K:M) <= Ann(M); pure divisor arithmetic
bool zero_product(const ModuleCtx& ctx, int a, int b) {
  const Ring& R = ctx.m.ring();
  Ideal ann = ctx.lat.colon_of(ctx.lat.zero_id());
  return R.ideal_contains(ann, R.ideal_product(ctx.lat.colon_of(a), ctx.lat.colon_of(b)));
}

} // namespace

Graph build_ag(const ModuleCtx& ctx) {
  if (ctx.m.is_zero_module())
    throw std::invalid_argument("annihilating-submodule graph of the zero module");
  // vertices: non-zero N with a non-zero proper partner K, NK = (0)
  std::vector<int> vids;
  for (int i = 0; i < ctx.lat.count(); ++i) {
    if (ctx.lat.is_zero(i)) continue;
    bool has_partner = false;
    for (int k = 0; k < ctx.lat.count() && !has_partner; ++k) {
      if (ctx.lat.is_zero(k) || !ctx.lat.is_proper(k)) continue;
      if (zero_product(ctx, i, k)) has_partner = true;
    }
    if (has_partner) vids.push_back(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vids.size(); ++i)
    for (std::size_t j = i + 1; j < vids.size(); ++j)
      if (zero_product(ctx, vids[i], vids[j])) edges.emplace_back(vids[i], vids[j]);
  return assemble(ctx, std::move(vids), edges);
}

Graph build_ag_star(const ModuleCtx& ctx) {
  if (ctx.m.is_zero_module())
    throw std::invalid_argument("annihilating-submodule graph of the zero module");
  Ideal ann = ctx.lat.colon_of(ctx.lat.zero_id());
  std::vector<int> cand;
  for (int i = 0; i < ctx.lat.count(); ++i)
    if (ctx.lat.is_proper(i) && !(ctx.lat.colon_of(i) == ann)) cand.push_back(i);
  std::vector<int> vids;
  for (int i : cand) {
    bool has_partner = false;
    for (int k : cand)
      if (zero_product(ctx, i, k)) {
        has_partner = true;
        break;
      }
    if (has_partner) vids.push_back(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vids.size(); ++i)
    for (std::size_t j = i + 1; j < vids.size(); ++j)
      if (zero_product(ctx, vids[i], vids[j])) edges.emplace_back(vids[i], vids[j]);
  return assemble(ctx, std::move(vids), edges);
}

bool check_graph_homomorphism(const Graph& g, const Graph& h,
                              const std::vector<int>& vertex_map) {
  if (static_cast<int>(vertex_map.size()) != g.vertex_count()) return false;
  for (int v : vertex_map)
    if (v < 0 || v >= h.vertex_count()) return false;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) {
        int a = vertex_map[i], b = vertex_map[j];
        if (a == b || !h.adjacent(a, b)) return false;
      }
  return true;
}

bool check_retract(const Graph& g, const Graph& h, const std::vector<int>& vertex_map) {
  if (!check_graph_homomorphism(g, h, vertex_map)) return false;
  // surjectivity and preimage lists
  std::vector<std::vector<int>> pre(h.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) pre[vertex_map[i]].push_back(i);
  for (const auto& p : pre)
    if (p.empty()) return false;
  // search for a section s with every h-edge embedded as a g-edge; then
  // s∘map is an endomorphism of g fixing s(h) pointwise
  std::vector<int> sec(h.vertex_count(), -1);
  auto embeds = [&](int hv, int gv) {
    for (int u = 0; u < h.vertex_count(); ++u)
      if (sec[u] >= 0 && h.adjacent(hv, u) && !g.adjacent(gv, sec[u])) return false;
    return true;
  };
  std::vector<int> order(h.vertex_count());
  for (int i = 0; i < h.vertex_count(); ++i) order[i] = i;
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == h.vertex_count()) return true;
    int hv = order[k];
    for (int gv : pre[hv]) {
      if (!embeds(hv, gv)) continue;
      sec[hv] = gv;
      if (self(self, k + 1)) return true;
      sec[hv] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

std::string to_dot(const Graph& g) {
  if (g.vertex_count() == 0) return "graph G { }\n";
  std::ostringstream os;
  os << "graph G {\n";
  for (int i = 0; i < g.vertex_count(); ++i) os << "  \"" << g.labels[i] << "\";\n";
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j))
        os << "  \"" << g.labels[i] << "\" -- \"" << g.labels[j] << "\";\n";
  os << "}\n";
  return os.str();
}

} // namespace ztg
