#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hypercut/generators.hpp"
#include "hypercut/hypergraph.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/rng.hpp"
#include "test_util.hpp"

using namespace hypercut;
using testutil::expect_error;
using testutil::make;

TEST_CASE("build collects sizes, rank and incidence") {
  Hypergraph g = make(2, {{0, 1}});
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.total_size() == 2);
  CHECK(g.rank() == 2);

  Hypergraph k43 = gen_complete_uniform(4, 3);
  CHECK(k43.num_edges() == 4);
  CHECK(k43.total_size() == 12);
  CHECK(k43.rank() == 3);
  for (int v = 0; v < 4; ++v) CHECK(k43.degree(v) == 3);
}

TEST_CASE("build normalizes edge member order") {
  Hypergraph g = make(4, {{3, 1, 2}});
  CHECK(g.edge(0)[0] == 1);
  CHECK(g.edge(0)[2] == 3);
}

TEST_CASE("build rejects malformed edges") {
  expect_error([] { make(3, {{0}}); }, ErrorCode::SingletonHyperedge);
  expect_error([] { make(3, {{0, 3}}); }, ErrorCode::VertexOutOfRange);
  expect_error([] { make(3, {{0, 1}, {1, 0}}); },
               ErrorCode::DuplicateHyperedge);
  // multi mode admits parallel copies
  Hypergraph g = make(3, {{0, 1}, {1, 0}}, true);
  CHECK(g.num_edges() == 2);
  CHECK(g.is_multi());
}

TEST_CASE("cut capacity counts crossing hyperedges") {
  Hypergraph k43 = gen_complete_uniform(4, 3);
  CHECK(cut_capacity(k43, VertexSet{0}) == 3);
  CHECK(cut_capacity(k43, VertexSet{0, 1}) == 4);
  Hypergraph single = make(2, {{0, 1}});
  CHECK(cut_capacity(single, VertexSet{0}) == 1);

  expect_error([&] { cut_capacity(k43, VertexSet{}); }, ErrorCode::EmptySide);
  expect_error([&] { cut_capacity(k43, VertexSet{0, 1, 2, 3}); },
               ErrorCode::InvalidSide);
}

TEST_CASE("cut capacity is symmetric under complement") {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    int n = 4 + static_cast<int>(rng.below(6));
    Hypergraph g = gen_random(n, 4, 2 * n, rng.next_u64());
    VertexSet side = testutil::random_proper_side(rng, n);
    CHECK(cut_capacity(g, side) ==
          cut_capacity(g, testutil::complement_of(side, n)));
  }
}

TEST_CASE("degree sum equals total size and bounds connectivity") {
  Rng rng(17);
  for (int it = 0; it < 30; ++it) {
    int n = 4 + static_cast<int>(rng.below(5));
    Hypergraph g = gen_random(n, 4, n + 4, rng.next_u64());
    long long sum = 0;
    for (int v = 0; v < n; ++v) sum += g.degree(v);
    CHECK(sum == g.total_size());
    CHECK(g.min_degree() >= brute_min_cut(g).capacity);
  }
}

TEST_CASE("degree within a block counts fully internal edges") {
  Hypergraph single = make(2, {{0, 1}});
  CHECK(degree_within(single, 0, VertexSet{0, 1}) == 1);
  CHECK(degree_within(single, 0, VertexSet{0}) == 0);

  Hypergraph k4 = gen_complete_uniform(4, 2);
  CHECK(degree_within(k4, 0, VertexSet{0, 1, 2}) == 2);  // {0,1} and {0,2}

  expect_error([&] { degree_within(k4, 3, VertexSet{0, 1}); },
               ErrorCode::VertexNotInSet);
}

TEST_CASE("edge classification splits internal, between and touching") {
  Hypergraph g = make(3, {{0, 1, 2}});
  EdgeSetCounts c = edge_sets(g, VertexSet{0}, VertexSet{1});
  CHECK(c.within_first == 0);
  CHECK(c.between == 0);    // the triple leaks outside {0,1}
  CHECK(c.touching == 1);

  Hypergraph pair = make(2, {{0, 1}});
  EdgeSetCounts c2 = edge_sets(pair, VertexSet{0}, VertexSet{1});
  CHECK(c2.between == 1);
  CHECK(c2.touching == 1);
}

TEST_CASE("nested count bound on hand instances") {
  Hypergraph g = make(3, {{0, 1, 2}});
  NestedCountBound b = check_nested_count_bound(g, VertexSet{0},
                                                VertexSet{0, 1, 2});
  CHECK(b.between == 1);
  CHECK(b.vol_inner == 1);
  CHECK(b.within_inner == 0);
  CHECK(b.holds);

  // inner == outer: nothing crosses and the bound degenerates
  NestedCountBound eq = check_nested_count_bound(g, VertexSet{0, 1, 2},
                                                 VertexSet{0, 1, 2});
  CHECK(eq.between == 0);
  CHECK(eq.holds);

  expect_error(
      [&] { check_nested_count_bound(g, VertexSet{1}, VertexSet{0, 2}); },
      ErrorCode::NotNested);
}

TEST_CASE("nested count bound holds on random nested pairs") {
  Rng rng(23);
  for (int it = 0; it < 300; ++it) {
    int n = 4 + static_cast<int>(rng.below(9));
    int r = 2 + static_cast<int>(rng.below(4));
    Hypergraph g = gen_random(n, r, testutil::feasible_m(n, r, 2 * n),
                              rng.next_u64());
    VertexSet outer = testutil::random_proper_side(rng, n);
    VertexSet inner;
    for (int v : outer)
      if (rng.below(2)) inner.push_back(v);
    if (inner.empty()) inner.push_back(outer[0]);
    CHECK(check_nested_count_bound(g, inner, outer).holds);
  }
}

TEST_CASE("contraction merges blocks and drops collapsed edges") {
  Hypergraph path = make(4, {{0, 1}, {1, 2}, {2, 3}});
  Contraction c = contract(path, VertexPartition{{{0, 1}}});
  CHECK(c.graph.num_vertices() == 3);
  CHECK(c.graph.num_edges() == 2);  // {0,1} collapsed away
  CHECK(c.vertex_map[0] == c.vertex_map[1]);

  // identity: all singleton blocks
  Contraction id = contract(path, VertexPartition{{{0}, {1}, {2}, {3}}});
  CHECK(id.graph.num_edges() == path.num_edges());
  CHECK(id.graph.num_vertices() == 4);

  // total collapse is allowed and leaves an edgeless single vertex
  Contraction all =
      contract(gen_complete_uniform(4, 3), VertexPartition{{{0, 1, 2, 3}}});
  CHECK(all.graph.num_vertices() == 1);
  CHECK(all.graph.num_edges() == 0);

  expect_error([&] { contract(path, VertexPartition{{{0, 1}, {1, 2}}}); },
               ErrorCode::OverlappingBlocks);
  expect_error([&] { contract(path, VertexPartition{{{}}}); },
               ErrorCode::EmptyBlock);
}

TEST_CASE("contraction preserves capacities of lifted cuts") {
  Rng rng(31);
  for (int it = 0; it < 40; ++it) {
    int n = 5 + static_cast<int>(rng.below(5));
    Hypergraph g = gen_random(n, 3, 2 * n, rng.next_u64());
    // random partition into two blocks plus loose vertices
    VertexSet a, b;
    for (int v = 0; v < n; ++v) {
      switch (rng.below(3)) {
        case 0: a.push_back(v); break;
        case 1: b.push_back(v); break;
        default: break;
      }
    }
    VertexPartition parts;
    if (!a.empty()) parts.blocks.push_back(a);
    if (!b.empty()) parts.blocks.push_back(b);
    Contraction c = contract(g, parts);
    int nn = c.graph.num_vertices();
    if (nn < 2) continue;
    VertexSet small_side = testutil::random_proper_side(rng, nn);
    // lift through the vertex map
    VertexSet lifted;
    for (int v = 0; v < n; ++v)
      if (std::binary_search(small_side.begin(), small_side.end(),
                             c.vertex_map[v]))
        lifted.push_back(v);
    CHECK(cut_capacity(c.graph, small_side) == cut_capacity(g, lifted));
  }
}

TEST_CASE("component helpers expose disconnected structure") {
  Hypergraph two = make(5, {{0, 1}, {2, 3, 4}});
  CHECK(component_count(two) == 2);
  std::vector<int> ids = component_ids(two);
  CHECK(ids[0] == 0);
  CHECK(ids[1] == 0);
  CHECK(ids[2] == ids[3]);
  Cut zero = component_zero_cut(two, "test");
  CHECK(zero.capacity == 0);
  CHECK(zero.side == VertexSet{0, 1});
  CHECK(zero.source == "test");
}
