#include <doctest.h>

#include <algorithm>

#include "hypercut/generators.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/ordering.hpp"
#include "hypercut/rng.hpp"
#include "test_util.hpp"

using namespace hypercut;
using testutil::make;

TEST_CASE("ma_ordering grows from vertex 0 by activated coverage") {
  AdjacencyOrdering single = ma_ordering(make(2, {{0, 1}}));
  CHECK(single.order == std::vector<int>{0, 1});
  CHECK(single.pendant_capacity == 1);

  AdjacencyOrdering path = ma_ordering(make(3, {{0, 1}, {1, 2}}));
  CHECK(path.order == std::vector<int>{0, 1, 2});
  CHECK(path.pendant_capacity == 1);

  AdjacencyOrdering k4 = ma_ordering(gen_complete_uniform(4, 2));
  CHECK(k4.order[0] == 0);
  CHECK(k4.pendant_capacity == 3);

  AdjacencyOrdering k43 = ma_ordering(gen_complete_uniform(4, 3));
  CHECK(k43.pendant_capacity == 3);
}

TEST_CASE("ma_ordering output is a permutation with ties to low ids") {
  Rng rng(5);
  for (int it = 0; it < 30; ++it) {
    int n = 3 + static_cast<int>(rng.below(8));
    Hypergraph g = gen_random(n, 4, testutil::feasible_m(n, 4, 2 * n),
                              rng.next_u64());
    AdjacencyOrdering o = ma_ordering(g);
    std::vector<int> sorted = o.order;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < n; ++v) CHECK(sorted[v] == v);
    CHECK(o.order[0] == 0);
    CHECK(o.pendant_capacity == g.degree(o.order[n - 1]));
  }

  // all vertices are symmetric, so ties must resolve to increasing ids
  AdjacencyOrdering tie = ma_ordering(gen_complete_uniform(5, 5));
  CHECK(tie.order == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("slow_min_cut matches hand values") {
  CHECK(slow_min_cut(make(3, {{0, 1}, {1, 2}})).capacity == 1);

  Cut k43 = slow_min_cut(gen_complete_uniform(4, 3));
  CHECK(k43.capacity == 3);
  int small = std::min<int>(k43.side.size(), 4 - k43.side.size());
  CHECK(small == 1);
  CHECK(k43.source == "slow");

  CHECK(slow_min_cut(make(4, {{0, 1}, {2, 3}})).capacity == 0);
}

TEST_CASE("slow_min_cut equals the oracle on random instances") {
  Rng rng(9);
  for (int it = 0; it < 200; ++it) {
    int n = 3 + static_cast<int>(rng.below(8));
    int r = 2 + static_cast<int>(rng.below(4));
    int m = testutil::feasible_m(
        n, r, 1 + static_cast<int>(rng.below(3 * static_cast<std::uint64_t>(n))));
    Hypergraph g = gen_random(n, r, m, rng.next_u64());
    Cut cut = slow_min_cut(g);
    CHECK(cut.capacity == brute_min_cut(g).capacity);
    if (!cut.side.empty() &&
        static_cast<int>(cut.side.size()) < g.num_vertices())
      CHECK(cut_capacity(g, cut.side) == cut.capacity);
  }
}
