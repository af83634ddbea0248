#include "hypercut/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "hypercut/numeric.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/ordering.hpp"
#include "hypercut/rng.hpp"

namespace hypercut {

namespace {

VertexSet sample_distinct(Rng& rng, int lo, int hi, int count) {
  VertexSet out;
  while (static_cast<int>(out.size()) < count) {
    int v = lo + static_cast<int>(rng.below(hi - lo));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// distinct candidate hyperedges of sizes 2..min(r, count) on `count` vertices
std::uint64_t internal_pool(int count, int r) {
  std::uint64_t pool = 0;
  for (int i = 2; i <= std::min(r, count); ++i)
    pool = sat_add(pool, sat_binomial(count, i));
  return pool;
}

template <typename F>
void for_each_combination(int n, int k, F&& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Hypergraph gen_random(int n, int r, int m, std::uint64_t seed) {
  if (n < 0 || m < 0 || r < 2)
    fail(ErrorCode::BadParams, "need rank >= 2 and non-negative counts");
  if (static_cast<std::uint64_t>(m) > internal_pool(n, r))
    fail(ErrorCode::Infeasible, "more hyperedges than distinct candidates");
  int max_size = std::min(r, n);
  Rng rng(seed);
  std::set<VertexSet> used;
  std::vector<std::vector<int>> edges;
  while (static_cast<int>(edges.size()) < m) {
    int size = static_cast<int>(rng.range(2, max_size));
    VertexSet e = sample_distinct(rng, 0, n, size);
    if (used.insert(e).second) edges.push_back(e);
  }
  return Hypergraph::build(n, std::move(edges));
}

PlantedInstance gen_planted_small_cut(int n, int r, int s, int lam,
                                      std::uint64_t seed) {
  if (n < 3 || r < 2 || s < 1 || lam < 1)
    fail(ErrorCode::BadParams, "need n >= 3, rank >= 2, s >= 1, lam >= 1");
  if (2 * s >= n)
    fail(ErrorCode::BadParams,
         "planted side must be strictly smaller than its complement");

  VertexSet side(s);
  std::iota(side.begin(), side.end(), 0);
  std::uint64_t side_pool = internal_pool(s, r);
  std::uint64_t comp_pool = internal_pool(n - s, r);

  auto verified = [&](const Hypergraph& g) {
    if (component_count(g) > 1) return false;
    if (n <= kOracleVertexLimit) {
      MinCutEnumeration all = brute_min_cut(g);
      return all.capacity == lam && all.sides.size() == 1 &&
             all.sides[0] == side;
    }
    Cut cut = slow_min_cut(g);
    if (cut.capacity != lam) return false;
    if (static_cast<int>(cut.side.size()) == s) return cut.side == side;
    if (static_cast<int>(cut.side.size()) == n - s) {
      VertexSet comp(n - s);
      std::iota(comp.begin(), comp.end(), s);
      return cut.side == comp;
    }
    return false;
  };

  for (int attempt = 0; attempt < 32; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    std::set<VertexSet> used;
    std::vector<std::vector<int>> edges;

    // crossing hyperedges; inside members go to the least-covered planted
    // vertices so no part of the side is left exposed
    std::vector<long long> cover(s, 0);
    bool placed_all = true;
    for (int c = 0; c < lam && placed_all; ++c) {
      placed_all = false;
      for (int tries = 0; tries < 400 && !placed_all; ++tries) {
        int size = static_cast<int>(rng.range(2, std::min(r, n)));
        int inside = 1 + static_cast<int>(rng.below(std::min(size - 1, s)));
        std::vector<std::pair<std::uint64_t, int>> order;
        for (int v = 0; v < s; ++v)
          order.emplace_back(
              (static_cast<std::uint64_t>(cover[v]) << 20) | rng.below(1 << 20),
              v);
        std::sort(order.begin(), order.end());
        VertexSet e;
        for (int i = 0; i < inside; ++i) e.push_back(order[i].second);
        while (static_cast<int>(e.size()) < size) {
          int v = s + static_cast<int>(rng.below(n - s));
          if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        std::sort(e.begin(), e.end());
        if (used.insert(e).second) {
          for (int i = 0; i < inside; ++i) ++cover[order[i].second];
          edges.push_back(e);
          placed_all = true;
        }
      }
    }
    if (!placed_all) continue;

    std::uint64_t side_have = 0, comp_have = 0;
    auto add_internal = [&](int lo, int hi, std::uint64_t& have,
                            std::uint64_t pool, std::uint64_t want) {
      int count = hi - lo;
      int max_size = std::min(r, count);
      if (max_size < 2) return;
      std::uint64_t added = 0;
      std::uint64_t tries = 0, budget = 200 * want + 1000;
      while (added < want && have < pool && tries < budget) {
        ++tries;
        int size = static_cast<int>(rng.range(2, max_size));
        VertexSet e = sample_distinct(rng, lo, hi, size);
        if (used.insert(e).second) {
          edges.push_back(e);
          ++added;
          ++have;
        }
      }
    };

    std::uint64_t batch = 8;
    while (true) {
      Hypergraph g = Hypergraph::build(n, edges);
      if (verified(g)) {
        PlantedInstance out;
        out.graph = std::move(g);
        out.side = side;
        out.capacity = lam;
        return out;
      }
      if (side_have >= side_pool && comp_have >= comp_pool) break;
      // finish small pools outright, grow big ones geometrically
      std::uint64_t side_want =
          side_pool - side_have <= 512 ? side_pool - side_have : batch;
      std::uint64_t comp_want =
          comp_pool - comp_have <= 512 ? comp_pool - comp_have : batch;
      add_internal(0, s, side_have, side_pool, side_want);
      add_internal(s, n, comp_have, comp_pool, comp_want);
      batch = std::min<std::uint64_t>(batch * 2, 1 << 20);
    }
  }
  fail(ErrorCode::Infeasible, "no densification protects the planted cut");
}

Hypergraph gen_nontrivial_example(int n) {
  if (n < 2) fail(ErrorCode::BadParams, "need at least one pair");
  if (n % 2 != 0) fail(ErrorCode::OddN, "pair construction needs even n");
  int half = n / 2;
  int hub_a = n, hub_b = n + 1, hub_c = n + 2;
  std::vector<std::vector<int>> edges;
  edges.reserve(3 * half * (half - 1) / 2 + half);
  for (int i = 0; i < half; ++i)
    for (int j = i + 1; j < half; ++j) {
      edges.push_back({i, half + i, j, half + j, hub_a});
      edges.push_back({i, half + i, j, half + j, hub_b});
      edges.push_back({i, half + i, j, half + j, hub_c});
    }
  for (int i = 0; i < half; ++i) edges.push_back({i, half + i});
  return Hypergraph::build(n + 3, std::move(edges));
}

Hypergraph gen_tight_example(int n, int r) {
  if (r < 2 || n < 1) fail(ErrorCode::BadParams, "need rank >= 2 and n >= 1");
  int q = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n))));
  while (q > 0 && q * q > n) --q;
  while ((q + 1) * (q + 1) <= n) ++q;
  if (q * q != n)
    fail(ErrorCode::NotSquare, "vertex count must be a perfect square");
  if (q < r + 1)
    fail(ErrorCode::BadParams, "needs sqrt(n) >= rank + 1");

  std::vector<std::vector<int>> edges;
  // outer hyperedges: one per r-subset of groups, each slot filled
  // round-robin inside its group so incidences stay as even as possible
  std::vector<int> next(q, 0);
  for_each_combination(q, r, [&](const std::vector<int>& groups) {
    std::vector<int> e;
    e.reserve(r);
    for (int u : groups) {
      e.push_back(u * q + next[u]);
      next[u] = (next[u] + 1) % q;
    }
    edges.push_back(std::move(e));
  });
  // inner: complete r-uniform inside every group
  for (int u = 0; u < q; ++u)
    for_each_combination(q, r, [&](const std::vector<int>& members) {
      std::vector<int> e;
      e.reserve(r);
      for (int i : members) e.push_back(u * q + i);
      edges.push_back(std::move(e));
    });
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph gen_complete_uniform(int n, int r) {
  if (r < 2 || n < r)
    fail(ErrorCode::BadParams, "need rank >= 2 and n >= rank");
  std::vector<std::vector<int>> edges;
  for_each_combination(n, r,
                       [&](const std::vector<int>& e) { edges.push_back(e); });
  return Hypergraph::build(n, std::move(edges));
}

}  // namespace hypercut
