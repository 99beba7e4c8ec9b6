#include "doctest.h"

#include "ztg/graph.hpp"

using namespace ztg;

namespace {

const Caps kCaps{};

struct Fix {
  std::shared_ptr<const ModuleCtx> ctx;
  TContext tc;
};

Fix fixture(std::vector<std::int64_t> ring, std::vector<std::vector<std::int64_t>> blocks) {
  auto ctx = ModuleCtx::build(FiniteModule::direct_sum(Ring(ring), blocks), kCaps);
  Bitset t(ctx->spec_size());
  t.set_all();
  return Fix{ctx, make_t_context(ctx, t, kCaps)};
}

} // namespace

TEST_CASE("G(tau_Spec) fixtures") {
  auto f12 = fixture({12}, {{12}});
  Graph g = build_g_tau(f12.tc);
  REQUIRE(g.vertex_count() == 3);
  CHECK(g.labels == std::vector<std::string>{"<(2)>", "<(3)>", "<(4)>"});
  CHECK(g.edges == 2);
  // centre 3Z_12 is adjacent to both others
  int c = g.index_of_vid(f12.ctx->lat.require_id([&] {
    Bitset b(f12.ctx->m.size());
    for (int x : {0, 3, 6, 9}) b.set(x);
    return b;
  }()));
  CHECK(g.degree(c) == 2);

  auto f23 = fixture({6}, {{2, 3}});
  Graph g23 = build_g_tau(f23.tc);
  CHECK(g23.vertex_count() == 2);
  CHECK(g23.edges == 1);

  auto f4 = fixture({4}, {{4}});
  Graph g4 = build_g_tau(f4.tc);
  CHECK(g4.vertex_count() == 0);
  CHECK(is_irreducible(*f4.ctx, f4.tc.t));
}

TEST_CASE("annihilating-submodule graphs") {
  auto f12 = fixture({12}, {{12}});
  Graph ag = build_ag_star(*f12.ctx);
  REQUIRE(ag.vertex_count() == 4);
  CHECK(ag.edges == 3); // the path 2Z - 6Z - 4Z - 3Z

  auto f6 = fixture({6}, {{6}});
  Graph ag6 = build_ag_star(*f6.ctx);
  CHECK(ag6.vertex_count() == 2);
  CHECK(ag6.edges == 1);

  auto f5 = fixture({5}, {{5}});
  Graph ag5 = build_ag(*f5.ctx);
  CHECK(ag5.vertex_count() == 0);
}

TEST_CASE("homomorphism and retract checks") {
  auto f23 = fixture({6}, {{2, 3}});
  Graph g = build_g_tau(f23.tc);
  std::vector<int> identity = {0, 1};
  CHECK(check_graph_homomorphism(g, g, identity));
  CHECK(check_retract(g, g, identity));

  // a constant map sends the edge to a loop
  std::vector<int> constant = {0, 0};
  CHECK(!check_graph_homomorphism(g, g, constant));
}

TEST_CASE("dot export") {
  auto f4 = fixture({4}, {{4}});
  CHECK(to_dot(build_g_tau(f4.tc)) == "graph G { }\n");

  auto f23 = fixture({6}, {{2, 3}});
  Graph k2 = build_g_tau(f23.tc);
  std::string dot = to_dot(k2);
  CHECK(dot.find(" -- ") != std::string::npos);

  // stable across rebuilds
  auto f12 = fixture({12}, {{12}});
  CHECK(to_dot(build_g_tau(f12.tc)) == to_dot(build_g_tau(f12.tc)));
}
