#pragma once

#include "ztg/graph.hpp"

namespace ztg {

// Exact graph analytics. Disconnected and empty graphs report the diameter
// as a distinct marker, not a number; acyclic graphs likewise for girth.
struct GraphMetrics {
  int vertices = 0;
  int edges = 0;
  enum class DiamKind { Empty, Disconnected, Finite } diam_kind = DiamKind::Empty;
  int diameter = 0;    // valid when diam_kind == Finite
  bool acyclic = true; // girth marker
  int girth = 0;       // valid when !acyclic
  bool is_bipartite = true;
  bool is_tree = false;
  bool is_star = false;
  bool is_complete_bipartite = false;
  int part_a = 0, part_b = 0; // complete bipartite side sizes
  bool is_regular = false;
  int degree = 0; // valid when is_regular
  int max_degree = 0;
  int clique_number = 0;
  int chromatic_number = 0;
};

int clique_number(const Graph& g);
// exact; throws CapExceeded beyond max_vertices, no heuristic fallback
int chromatic_number(const Graph& g, int max_vertices, int omega_hint = -1);

// everything except the exact solvers (clique/chromatic left at -1)
GraphMetrics structural_metrics(const Graph& g);
GraphMetrics metrics(const Graph& g, int max_chi_vertices);

} // namespace ztg
