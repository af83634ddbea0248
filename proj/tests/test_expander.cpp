#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hypercut/expander.hpp"
#include "hypercut/generators.hpp"
#include "hypercut/hypergraph.hpp"
#include "hypercut/rng.hpp"
#include "test_util.hpp"

using namespace hypercut;
using testutil::expect_error;
using testutil::make;

namespace {

long long hyperedges_crossing(const Hypergraph& g, const VertexPartition& p) {
  std::vector<int> block_of(g.num_vertices(), -1);
  for (int b = 0; b < static_cast<int>(p.blocks.size()); ++b)
    for (int v : p.blocks[b]) block_of[v] = b;
  long long crossing = 0;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto edge = g.edge(e);
    bool inside = true;
    for (int v : edge)
      if (block_of[v] != block_of[edge[0]] || block_of[v] < 0) inside = false;
    if (!inside) ++crossing;
  }
  return crossing;
}

void check_is_partition(const VertexPartition& p, int n) {
  std::vector<int> seen(n, 0);
  for (const VertexSet& block : p.blocks) {
    CHECK(!block.empty());
    for (int v : block) seen[v]++;
  }
  for (int v = 0; v < n; ++v) CHECK(seen[v] == 1);
}

}  // namespace

TEST_CASE("star_expand fans each hyperedge out of its smallest vertex") {
  Multigraph star = star_expand(make(3, {{0, 1, 2}}));
  REQUIRE(star.edges.size() == 2);
  CHECK(star.edges[0] == std::pair<int, int>{0, 1});
  CHECK(star.edges[1] == std::pair<int, int>{0, 2});

  // rank-2 input is reproduced edge for edge
  Hypergraph k4 = gen_complete_uniform(4, 2);
  Multigraph same = star_expand(k4);
  CHECK(same.edges.size() == 6);
  for (int v = 0; v < 4; ++v) CHECK(same.degree[v] == 3);
}

TEST_CASE("star expansion only inflates volumes and boundaries") {
  Rng rng(27);
  for (int it = 0; it < 200; ++it) {
    int n = 4 + static_cast<int>(rng.below(6));
    Hypergraph g = gen_random(n, 4, 2 * n, rng.next_u64());
    int r = std::max(2, g.rank());
    Multigraph star = star_expand(g);

    VertexSet block = testutil::random_proper_side(rng, n);
    if (block.size() < 2) continue;
    VertexSet inner;
    for (int v : block)
      if (rng.below(2)) inner.push_back(v);
    if (inner.empty()) inner.push_back(block[0]);
    if (inner.size() == block.size()) inner.pop_back();
    if (inner.empty()) continue;
    VertexSet outer_rest;
    std::set_difference(block.begin(), block.end(), inner.begin(), inner.end(),
                        std::back_inserter(outer_rest));

    long long vol_g = volume(g, block);
    long long vol_star = 0;
    for (int v : block) vol_star += star.degree[v];
    CHECK(vol_g <= vol_star);

    long long cut_g = cut_capacity(g, block);
    long long cut_star = 0;
    std::vector<char> in_block(n, 0);
    for (int v : block) in_block[v] = 1;
    for (auto [a, b] : star.edges)
      if (in_block[a] != in_block[b]) ++cut_star;
    CHECK(cut_g <= cut_star);

    // hyperedges touching both pieces dominate the graph crossing count / (r-1)
    long long touching = edge_sets(g, inner, outer_rest).touching;
    std::vector<char> in_inner(n, 0);
    for (int v : inner) in_inner[v] = 1;
    long long star_between = 0;
    for (auto [a, b] : star.edges)
      if (in_block[a] && in_block[b] && in_inner[a] != in_inner[b])
        ++star_between;
    CHECK((r - 1) * touching >= star_between);
  }
}

TEST_CASE("graph decomposition splits two triangles at the bridge") {
  Multigraph g = Multigraph::build(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
  Decomposition dec = graph_expander_decomposition(g, 0.2);
  REQUIRE(dec.partition.blocks.size() == 2);
  CHECK(dec.partition.blocks[0] == VertexSet{0, 1, 2});
  CHECK(dec.partition.blocks[1] == VertexSet{3, 4, 5});
  CHECK(dec.crossing_edges == 1);
  CHECK(dec.certified[0]);
  CHECK(dec.certified[1]);
}

TEST_CASE("graph decomposition keeps an expander whole") {
  Hypergraph k8 = gen_complete_uniform(8, 2);
  Decomposition dec = graph_expander_decomposition(star_expand(k8), 0.1);
  REQUIRE(dec.partition.blocks.size() == 1);
  CHECK(dec.partition.blocks[0].size() == 8);
  CHECK(dec.crossing_edges == 0);
}

TEST_CASE("graph decomposition at threshold 1 may shatter to singletons") {
  Hypergraph k4 = gen_complete_uniform(4, 2);
  Decomposition dec = graph_expander_decomposition(star_expand(k4), 1.0);
  // every 2-2 split of K4 has conductance 2/3 < 1, so nothing bigger survives
  CHECK(dec.partition.blocks.size() == 4);
  for (const VertexSet& block : dec.partition.blocks)
    CHECK(block.size() == 1);
}

TEST_CASE("hypergraph decomposition separates two dense clusters") {
  Hypergraph cluster = gen_complete_uniform(5, 3);
  std::vector<std::vector<int>> edges;
  for (const auto& e : cluster.edges()) edges.push_back(e);
  for (const auto& e : cluster.edges()) {
    std::vector<int> shifted;
    for (int v : e) shifted.push_back(v + 5);
    edges.push_back(shifted);
  }
  edges.push_back({4, 5});
  Hypergraph g = make(10, std::move(edges));

  Decomposition dec = hypergraph_expander_decomposition(g, 0.1);
  check_is_partition(dec.partition, 10);
  REQUIRE(dec.partition.blocks.size() == 2);
  CHECK(dec.partition.blocks[0] == VertexSet{0, 1, 2, 3, 4});
  CHECK(dec.partition.blocks[1] == VertexSet{5, 6, 7, 8, 9});
  CHECK(dec.crossing_edges == 1);
  CHECK(dec.crossing_edges == hyperedges_crossing(g, dec.partition));
  CHECK(dec.phi == doctest::Approx(0.1));
}

TEST_CASE("hypergraph decomposition rejects thresholds beyond 1/(r-1)") {
  Hypergraph g = gen_complete_uniform(5, 3);
  expect_error([&] { hypergraph_expander_decomposition(g, 0.6); },
               ErrorCode::BadPhi);
  expect_error([&] { hypergraph_expander_decomposition(g, 0.0); },
               ErrorCode::BadPhi);
}

TEST_CASE("rank-2 input follows the plain graph path") {
  Hypergraph g = gen_random(9, 2, 16, 311);
  Decomposition viah = hypergraph_expander_decomposition(g, 0.15, 14, 5);
  Decomposition direct =
      graph_expander_decomposition(star_expand(g), 0.15, 14, 5);
  CHECK(viah.partition.blocks == direct.partition.blocks);
  CHECK(viah.crossing_edges == direct.crossing_edges);
}

TEST_CASE("lowering the threshold never splits more on the frozen corpus") {
  std::vector<Hypergraph> corpus;
  corpus.push_back(gen_complete_uniform(6, 3));
  corpus.push_back(gen_random(10, 3, 20, 4));
  corpus.push_back(gen_random(12, 4, 18, 8));
  for (const Hypergraph& g : corpus) {
    std::size_t previous = g.num_vertices() + 1;
    for (double phi : {0.45, 0.3, 0.2, 0.1, 0.05}) {
      if (phi > 1.0 / (g.rank() - 1)) continue;  // out of range for this rank
      Decomposition dec = hypergraph_expander_decomposition(g, phi, 14, 17);
      check_is_partition(dec.partition, g.num_vertices());
      CHECK(dec.partition.blocks.size() <= previous);
      previous = dec.partition.blocks.size();
    }
  }
}
