#include "hypercut/ordering.hpp"

#include <algorithm>
#include <queue>

namespace hypercut {

AdjacencyOrdering ma_ordering(const Hypergraph& g) {
  int n = g.num_vertices();
  if (n < 2) fail(ErrorCode::TooSmall, "ordering needs at least 2 vertices");

  std::vector<long long> key(n, 0);
  std::vector<char> in_prefix(n, 0);
  std::vector<char> active(g.num_edges(), 0);

  // Lazy max-heap over (key, -vertex): stale entries are skipped on pop, so
  // activations only ever push.
  using Entry = std::pair<long long, int>;  // (key, -v) for smallest-id ties
  std::priority_queue<Entry> heap;

  AdjacencyOrdering result;
  result.order.reserve(n);

  auto absorb = [&](int u) {
    in_prefix[u] = 1;
    result.order.push_back(u);
    for (int e : g.incident_edges(u)) {
      if (active[e]) continue;
      active[e] = 1;
      for (int w : g.edge(e)) {
        if (!in_prefix[w]) {
          ++key[w];
          heap.emplace(key[w], -w);
        }
      }
    }
  };

  absorb(0);
  for (int v = 1; v < n; ++v) heap.emplace(0, -v);

  int picked = 1;
  long long last_key = 0;
  while (picked < n) {
    auto [k, neg_v] = heap.top();
    heap.pop();
    int v = -neg_v;
    if (in_prefix[v] || key[v] != k) continue;  // stale
    last_key = k;
    ++picked;
    absorb(v);
  }
  result.pendant_capacity = last_key;
  return result;
}

namespace {

// One contraction round: merge the vertices at the ordering's last two
// positions, dropping hyperedges that collapse below size 2 but keeping
// parallel copies.
Hypergraph merge_pair(const Hypergraph& g, int a, int b) {
  int n = g.num_vertices();
  int keep = std::min(a, b), gone = std::max(a, b);
  std::vector<int> map(n);
  for (int v = 0; v < n; ++v) {
    if (v == gone) map[v] = keep;
    else if (v > gone) map[v] = v - 1;
    else map[v] = v;
  }
  std::vector<std::vector<int>> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    std::vector<int> image;
    image.reserve(e.size());
    for (int v : e) image.push_back(map[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image.size() >= 2) edges.push_back(std::move(image));
  }
  return Hypergraph::build(n - 1, std::move(edges), /*allow_multi=*/true,
                           /*drop_small=*/true);
}

}  // namespace

Cut slow_min_cut(const Hypergraph& g) {
  int n = g.num_vertices();
  if (n < 2) fail(ErrorCode::TooSmall, "min cut needs at least 2 vertices");
  if (component_count(g) > 1) return component_zero_cut(g, "slow");

  Hypergraph current = g;
  // groups[v] = original vertices merged into current vertex v
  std::vector<VertexSet> groups(n);
  for (int v = 0; v < n; ++v) groups[v] = {v};

  Cut best;
  best.capacity = -1;
  best.source = "slow";

  while (current.num_vertices() >= 2) {
    auto ordering = ma_ordering(current);
    int last = ordering.order.back();
    int prev = ordering.order[ordering.order.size() - 2];
    if (best.capacity < 0 || ordering.pendant_capacity < best.capacity) {
      best.capacity = ordering.pendant_capacity;
      best.side = groups[last];
    }

    int keep = std::min(prev, last), gone = std::max(prev, last);
    groups[keep].insert(groups[keep].end(), groups[gone].begin(),
                        groups[gone].end());
    groups.erase(groups.begin() + gone);
    current = merge_pair(current, prev, last);
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

}  // namespace hypercut
