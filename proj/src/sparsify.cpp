#include "hypercut/sparsify.hpp"

#include <numeric>

#include "hypercut/ordering.hpp"

namespace hypercut {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // true if a and b were in different sets
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Hypergraph certificate(const Hypergraph& g, int k) {
  if (k < 1) fail(ErrorCode::BadK, "certificate parameter must be >= 1");
  int n = g.num_vertices();
  int m = g.num_edges();
  std::vector<char> kept(m, 0);
  int kept_count = 0;

  for (int round = 0; round < k && kept_count < m; ++round) {
    UnionFind uf(n);
    for (int e = 0; e < m; ++e) {
      if (kept[e]) continue;
      auto edge = g.edge(e);
      bool joins = false;
      for (size_t i = 1; i < edge.size(); ++i)
        if (uf.unite(edge[0], edge[i])) joins = true;
      if (joins) {
        kept[e] = 1;
        ++kept_count;
      }
    }
  }

  std::vector<std::vector<int>> edges;
  edges.reserve(kept_count);
  for (int e = 0; e < m; ++e) {
    if (kept[e]) {
      auto span = g.edge(e);
      edges.emplace_back(span.begin(), span.end());
    }
  }
  return Hypergraph::build(n, std::move(edges), g.is_multi());
}

int approximate_connectivity(const Hypergraph& g) {
  if (g.num_vertices() < 2)
    fail(ErrorCode::TooSmall, "connectivity needs at least 2 vertices");
  for (int k = 1;; k *= 2) {
    Hypergraph sparse = certificate(g, k);
    long long lambda_hat = slow_min_cut(sparse).capacity;
    if (lambda_hat < k)
      return lambda_hat == 0 ? 0 : static_cast<int>(lambda_hat) + 1;
    // lambda_hat == k means cuts at k may be clipped; double and retry.
  }
}

}  // namespace hypercut
