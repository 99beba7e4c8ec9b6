#pragma once

#include <string>
#include <vector>

#include "ztg/spectra.hpp"

namespace ztg {

// Finite simple undirected graph over submodule vertices. Vertices are
// lattice ids of the host module context, in ascending (canonical) order,
// so two builds of the same instance are identical.
struct Graph {
  const ModuleCtx* host = nullptr;
  std::vector<int> vids;
  std::vector<std::string> labels;
  std::vector<Bitset> adj;
  int edges = 0;

  int vertex_count() const { return static_cast<int>(vids.size()); }
  bool adjacent(int i, int j) const { return adj[i].test(j); }
  int degree(int i) const { return adj[i].count(); }
  int index_of_vid(int vid) const;
};

Graph build_g_tau(const TContext& tc);
Graph build_ag(const ModuleCtx& ctx);
Graph build_ag_star(const ModuleCtx& ctx);

// vertex_map[i] is an index into h's vertices for each vertex i of g
bool check_graph_homomorphism(const Graph& g, const Graph& h,
                              const std::vector<int>& vertex_map);
// retract: a surjective homomorphism g -> h that embeds h back into g by a
// section fixed by the map (h is identified with a subgraph of g through
// the section)
bool check_retract(const Graph& g, const Graph& h, const std::vector<int>& vertex_map);

std::string to_dot(const Graph& g);

} // namespace ztg
