#include <doctest.h>

#include <algorithm>

#include "hypercut/generators.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/rng.hpp"
#include "hypercut/smallcut.hpp"
#include "test_util.hpp"

using namespace hypercut;
using testutil::expect_error;
using testutil::make;

TEST_CASE("brute_min_cut enumerates every minimum side") {
  MinCutEnumeration single = brute_min_cut(make(2, {{0, 1}}));
  CHECK(single.capacity == 1);
  REQUIRE(single.sides.size() == 1);
  CHECK(single.sides[0] == VertexSet{0});

  MinCutEnumeration k43 = brute_min_cut(gen_complete_uniform(4, 3));
  CHECK(k43.capacity == 3);
  CHECK(k43.sides.size() == 4);  // each singleton, canonicalized around 0
  for (const VertexSet& side : k43.sides) {
    CHECK(std::binary_search(side.begin(), side.end(), 0));
    int small = std::min<int>(side.size(), 4 - side.size());
    CHECK(small == 1);
  }

  MinCutEnumeration disc = brute_min_cut(make(4, {{0, 1}, {2, 3}}));
  CHECK(disc.capacity == 0);

  expect_error([] { brute_min_cut(gen_complete_uniform(19, 2)); },
               ErrorCode::TooLarge);
}

TEST_CASE("brute_min_s_cut bounds the side size") {
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    int n = 4 + static_cast<int>(rng.below(5));
    Hypergraph g = gen_random(n, 3, 2 * n, rng.next_u64());
    CHECK(brute_min_s_cut(g, n - 1).capacity == brute_min_cut(g).capacity);
  }

  CHECK(brute_min_s_cut(gen_complete_uniform(4, 3), 1).capacity == 3);

  Hypergraph star = make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  Cut c = brute_min_s_cut(star, 2);
  CHECK(c.capacity == 1);
  CHECK(c.side.size() == 1);
  CHECK(c.side[0] != 0);
}

TEST_CASE("brute_min_separator finds cheapest node cuts") {
  BipartiteIncidence single = build_bipartite(make(2, {{0, 1}}));
  SeparatorChoice s =
      brute_min_separator(single.graph, single.vertex_node(0),
                          {single.vertex_node(1)});
  CHECK(s.weight == 1);
  CHECK(s.nodes == std::vector<int>{single.edge_node(0)});

  BipartiteIncidence k43 = build_bipartite(gen_complete_uniform(4, 3));
  SeparatorChoice s43 = brute_min_separator(
      k43.graph, k43.vertex_node(0),
      {k43.vertex_node(1), k43.vertex_node(2), k43.vertex_node(3)});
  CHECK(s43.weight == 3);

  // empty forbidden set needs no removals at all
  CHECK(brute_min_separator(single.graph, 0, {}).weight == 0);
}

TEST_CASE("brute_conductance scans internal splits") {
  Hypergraph pair = make(2, {{0, 1}});
  ConductanceSplit easy = brute_conductance(pair, VertexSet{0, 1});
  CHECK(easy.value == doctest::Approx(1.0));

  Hypergraph k4 = gen_complete_uniform(4, 2);
  ConductanceSplit best = brute_conductance(k4, VertexSet{0, 1, 2, 3});
  CHECK(best.value == doctest::Approx(2.0 / 3.0));
  CHECK(best.min_volume == 6);
  CHECK(best.crossing == 4);

  expect_error([&] { brute_conductance(k4, VertexSet{2}); },
               ErrorCode::NoSplit);
}

TEST_CASE("min_cut_union collects edges on some minimum cut") {
  MinCutUnion u43 = min_cut_union(gen_complete_uniform(4, 3));
  CHECK(u43.capacity == 3);
  CHECK(u43.edge_ids.size() == 4);

  MinCutUnion path = min_cut_union(make(3, {{0, 1}, {1, 2}}));
  CHECK(path.capacity == 1);
  CHECK(path.edge_ids.size() == 2);
}

TEST_CASE("min_cut_union on the paired-hub family at oracle scale") {
  // Below the guaranteed regime the hubs are cheaper than the intended pair
  // cuts: each hub meets C(n/2,2) edges versus 3n/2-3 per pair.
  Hypergraph g8 = gen_nontrivial_example(8);
  MinCutEnumeration mc8 = brute_min_cut(g8);
  CHECK(mc8.capacity == 6);
  CHECK(mc8.sides.size() == 3);  // the three hub singletons
  CHECK(cut_capacity(g8, VertexSet{0, 4}) == 9);  // intended pair cut cost
  MinCutUnion u8 = min_cut_union(g8);
  CHECK(u8.capacity == 6);
  CHECK(!u8.edge_ids.empty());

  // From n=14 on the pair cuts win and every minimum cut isolates one pair.
  Hypergraph g14 = gen_nontrivial_example(14);
  MinCutEnumeration mc14 = brute_min_cut(g14);
  CHECK(mc14.capacity == 3 * 14 / 2 - 3);
  CHECK(mc14.sides.size() == 7);
  for (const VertexSet& side : mc14.sides) {
    int small = std::min<int>(side.size(), g14.num_vertices() - side.size());
    CHECK(small == 2);
  }
}
