#include "hypercut/expander.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypercut/rng.hpp"

namespace hypercut {

Multigraph Multigraph::build(int n, std::vector<std::pair<int, int>> edges) {
  Multigraph g;
  g.num_vertices = n;
  g.incident.assign(n, {});
  g.degree.assign(n, 0);
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrorCode::VertexOutOfRange, "multigraph edge endpoint out of range");
    if (a == b) fail(ErrorCode::BadParams, "self-loop in multigraph");
    if (a > b) std::swap(a, b);
  }
  g.edges = std::move(edges);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [a, b] = g.edges[e];
    g.incident[a].push_back(e);
    g.incident[b].push_back(e);
    ++g.degree[a];
    ++g.degree[b];
  }
  return g;
}

Multigraph star_expand(const Hypergraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(g.total_size() - g.num_edges()));
  for (const auto& e : g.edges()) {
    int center = e[0];  // edges are stored sorted, so this is the min id
    for (size_t i = 1; i < e.size(); ++i) edges.emplace_back(center, e[i]);
  }
  return Multigraph::build(g.num_vertices(), std::move(edges));
}

namespace {

// Split quality inside a block, compared exactly as rationals.
struct SplitValue {
  long long crossing = 0;
  long long min_volume = 0;
  bool valid = false;

  bool better_than(const SplitValue& other) const {
    if (!valid) return false;
    if (!other.valid) return true;
    return crossing * other.min_volume < other.crossing * min_volume;
  }

  bool below(double threshold) const {
    return valid && static_cast<double>(crossing) <
                        threshold * static_cast<double>(min_volume);
  }
};

struct BlockSplitter {
  const Multigraph& g;
  std::uint64_t seed;
  int exact_limit;

  // scratch indexed by global vertex id
  std::vector<int> local_index;

  explicit BlockSplitter(const Multigraph& graph, std::uint64_t s, int limit)
      : g(graph), seed(s), exact_limit(limit),
        local_index(graph.num_vertices, -1) {}

  // Induced edges of the block as local index pairs.
  std::vector<std::pair<int, int>> induced_edges(const std::vector<int>& block) {
    for (int i = 0; i < static_cast<int>(block.size()); ++i)
      local_index[block[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int v : block) {
      for (int e : g.incident[v]) {
        auto [a, b] = g.edges[e];
        if (a != v) continue;  // visit each edge from its lower endpoint once
        if (local_index[b] >= 0 && local_index[a] >= 0)
          edges.emplace_back(local_index[a], local_index[b]);
      }
    }
    for (int v : block) local_index[v] = -1;
    return edges;
  }

  SplitValue evaluate(const std::vector<int>& block,
                      const std::vector<std::pair<int, int>>& edges,
                      const std::vector<char>& in_s) {
    SplitValue value;
    long long vol_s = 0, vol_all = 0;
    bool any = false, all = true;
    for (int i = 0; i < static_cast<int>(block.size()); ++i) {
      vol_all += g.degree[block[i]];
      if (in_s[i]) {
        vol_s += g.degree[block[i]];
        any = true;
      } else {
        all = false;
      }
    }
    if (!any || all) return value;
    value.min_volume = std::min(vol_s, vol_all - vol_s);
    if (value.min_volume <= 0) return value;
    for (auto [a, b] : edges)
      if (in_s[a] != in_s[b]) ++value.crossing;
    value.valid = true;
    return value;
  }

  // Exhaustive best split for small blocks.
  std::pair<SplitValue, std::vector<char>> best_exact(
      const std::vector<int>& block,
      const std::vector<std::pair<int, int>>& edges) {
    int bn = static_cast<int>(block.size());
    SplitValue best;
    std::vector<char> best_side(bn, 0), in_s(bn, 0);
    // fix vertex 0 out of S to halve the space
    for (std::uint64_t mask = 1; mask < (1ULL << (bn - 1)); ++mask) {
      for (int i = 0; i < bn - 1; ++i) in_s[i + 1] = (mask >> i) & 1;
      auto value = evaluate(block, edges, in_s);
      if (value.better_than(best)) {
        best = value;
        best_side = in_s;
      }
    }
    return {best, best_side};
  }

  // Spectral sweep: power iteration for the second eigenvector of the
  // normalized Laplacian of the induced subgraph, then the best prefix cut
  // in embedding order.
  std::pair<SplitValue, std::vector<char>> sweep(
      const std::vector<int>& block,
      const std::vector<std::pair<int, int>>& edges, Rng& rng) {
    int bn = static_cast<int>(block.size());
    std::vector<double> induced_degree(bn, 0.0);
    for (auto [a, b] : edges) {
      induced_degree[a] += 1.0;
      induced_degree[b] += 1.0;
    }
    std::vector<double> d_sqrt(bn);
    for (int i = 0; i < bn; ++i) d_sqrt[i] = std::sqrt(std::max(induced_degree[i], 1e-12));
    double d_norm = std::sqrt(std::inner_product(d_sqrt.begin(), d_sqrt.end(),
                                                 d_sqrt.begin(), 0.0));

    std::vector<double> v(bn), next(bn);
    for (int i = 0; i < bn; ++i) v[i] = rng.unit() - 0.5;
    auto deflate = [&]() {
      double dot = 0.0;
      for (int i = 0; i < bn; ++i) dot += v[i] * d_sqrt[i] / d_norm;
      for (int i = 0; i < bn; ++i) v[i] -= dot * d_sqrt[i] / d_norm;
    };
    for (int iter = 0; iter < 200; ++iter) {
      deflate();
      // next = (I + D^-1/2 A D^-1/2)/2 * v
      std::fill(next.begin(), next.end(), 0.0);
      for (auto [a, b] : edges) {
        next[a] += v[b] / (d_sqrt[a] * d_sqrt[b]);
        next[b] += v[a] / (d_sqrt[a] * d_sqrt[b]);
      }
      double norm = 0.0;
      for (int i = 0; i < bn; ++i) {
        next[i] = 0.5 * (v[i] + next[i]);
        norm += next[i] * next[i];
      }
      norm = std::sqrt(norm);
      if (norm < 1e-14) break;
      for (int i = 0; i < bn; ++i) v[i] = next[i] / norm;
    }
    deflate();

    std::vector<int> order(bn);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      double xa = v[a] / d_sqrt[a], xb = v[b] / d_sqrt[b];
      if (xa != xb) return xa < xb;
      return a < b;
    });

    SplitValue best;
    std::vector<char> best_side(bn, 0), in_s(bn, 0);
    int prefix_best = -1;
    // incremental crossing along the sweep
    long long crossing = 0, vol_s = 0, vol_all = 0;
    for (int i = 0; i < bn; ++i) vol_all += g.degree[block[i]];
    std::vector<std::vector<int>> local_adj(bn);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      local_adj[edges[e].first].push_back(edges[e].second);
      local_adj[edges[e].second].push_back(edges[e].first);
    }
    for (int i = 0; i + 1 < bn; ++i) {
      int u = order[i];
      in_s[u] = 1;
      vol_s += g.degree[block[u]];
      for (int w : local_adj[u]) crossing += in_s[w] ? -1 : 1;
      long long mv = std::min(vol_s, vol_all - vol_s);
      if (mv <= 0) continue;
      SplitValue value{crossing, mv, true};
      if (value.better_than(best)) {
        best = value;
        prefix_best = i;
      }
    }
    std::fill(in_s.begin(), in_s.end(), 0);
    if (prefix_best >= 0)
      for (int i = 0; i <= prefix_best; ++i) in_s[order[i]] = 1;
    return {best, in_s};
  }

  // Greedy single-vertex moves from a random start.
  std::pair<SplitValue, std::vector<char>> local_pass(
      const std::vector<int>& block,
      const std::vector<std::pair<int, int>>& edges, Rng& rng) {
    int bn = static_cast<int>(block.size());
    std::vector<char> in_s(bn, 0);
    int count = 0;
    for (int i = 0; i < bn; ++i) {
      in_s[i] = rng.one_in(2);
      count += in_s[i];
    }
    if (count == 0) in_s[static_cast<int>(rng.below(bn))] = 1;
    if (count == bn) in_s[static_cast<int>(rng.below(bn))] = 0;

    SplitValue current = evaluate(block, edges, in_s);
    for (int step = 0; step < 2 * bn; ++step) {
      SplitValue best_move;
      int best_vertex = -1;
      for (int i = 0; i < bn; ++i) {
        in_s[i] = !in_s[i];
        auto value = evaluate(block, edges, in_s);
        in_s[i] = !in_s[i];
        if (value.better_than(best_move)) {
          best_move = value;
          best_vertex = i;
        }
      }
      if (best_vertex < 0 || !best_move.better_than(current)) break;
      in_s[best_vertex] = !in_s[best_vertex];
      current = best_move;
    }
    return {current, in_s};
  }

  std::pair<SplitValue, std::vector<char>> best_heuristic(
      const std::vector<int>& block,
      const std::vector<std::pair<int, int>>& edges) {
    std::uint64_t block_hash = 0x9e3779b97f4a7c15ULL;
    for (int v : block) block_hash = splitmix64(block_hash ^ v);
    Rng rng(derive_seed(seed, block_hash));

    auto [best, best_side] = sweep(block, edges, rng);
    for (int pass = 0; pass < 20; ++pass) {
      auto [value, side] = local_pass(block, edges, rng);
      if (value.better_than(best)) {
        best = value;
        best_side = side;
      }
    }
    return {best, best_side};
  }
};

std::vector<std::vector<int>> induced_components(
    const Multigraph& g, const std::vector<int>& block,
    std::vector<int>& local_index) {
  int bn = static_cast<int>(block.size());
  for (int i = 0; i < bn; ++i) local_index[block[i]] = i;
  std::vector<int> comp(bn, -1);
  std::vector<int> stack;
  int comps = 0;
  for (int i = 0; i < bn; ++i) {
    if (comp[i] != -1) continue;
    comp[i] = comps;
    stack.push_back(i);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : g.incident[block[u]]) {
        auto [a, b] = g.edges[e];
        int other = (a == block[u]) ? b : a;
        int j = local_index[other];
        if (j >= 0 && comp[j] == -1) {
          comp[j] = comps;
          stack.push_back(j);
        }
      }
    }
    ++comps;
  }
  std::vector<std::vector<int>> result(comps);
  for (int i = 0; i < bn; ++i) result[comp[i]].push_back(block[i]);
  for (int v : block) local_index[v] = -1;
  return result;
}

}  // namespace

Decomposition graph_expander_decomposition(const Multigraph& g,
                                           double phi_prime, int exact_limit,
                                           std::uint64_t seed) {
  if (!(phi_prime > 0.0) || phi_prime > 1.0)
    fail(ErrorCode::BadPhi, "threshold must be in (0, 1]");

  BlockSplitter splitter(g, seed, exact_limit);
  std::vector<int> local_index(g.num_vertices, -1);

  std::vector<std::vector<int>> work;
  {
    std::vector<int> all(g.num_vertices);
    std::iota(all.begin(), all.end(), 0);
    work.push_back(std::move(all));
  }

  Decomposition result;
  result.phi = phi_prime;

  while (!work.empty()) {
    std::vector<int> block = std::move(work.back());
    work.pop_back();
    if (block.empty()) continue;
    if (block.size() == 1) {
      result.partition.blocks.push_back(std::move(block));
      result.certified.push_back(1);
      continue;
    }
    auto comps = induced_components(g, block, local_index);
    if (comps.size() > 1) {
      for (auto& c : comps) work.push_back(std::move(c));
      continue;
    }

    auto edges = splitter.induced_edges(block);
    SplitValue best;
    std::vector<char> side;
    bool exact = static_cast<int>(block.size()) <= exact_limit;
    if (exact)
      std::tie(best, side) = splitter.best_exact(block, edges);
    else
      std::tie(best, side) = splitter.best_heuristic(block, edges);

    if (best.below(phi_prime)) {
      std::vector<int> left, right;
      for (int i = 0; i < static_cast<int>(block.size()); ++i)
        (side[i] ? left : right).push_back(block[i]);
      work.push_back(std::move(left));
      work.push_back(std::move(right));
    } else {
      result.partition.blocks.push_back(std::move(block));
      result.certified.push_back(exact ? 1 : 0);
    }
  }

  // deterministic block order: by smallest vertex id
  std::vector<int> perm(result.partition.blocks.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return result.partition.blocks[a][0] < result.partition.blocks[b][0];
  });
  VertexPartition sorted_parts;
  std::vector<char> sorted_cert;
  for (int i : perm) {
    sorted_parts.blocks.push_back(std::move(result.partition.blocks[i]));
    sorted_cert.push_back(result.certified[i]);
  }
  result.partition = std::move(sorted_parts);
  result.certified = std::move(sorted_cert);

  std::vector<int> block_of(g.num_vertices, -1);
  for (int b = 0; b < static_cast<int>(result.partition.blocks.size()); ++b)
    for (int v : result.partition.blocks[b]) block_of[v] = b;
  for (auto [a, b] : g.edges)
    if (block_of[a] != block_of[b]) ++result.crossing_edges;
  return result;
}

Decomposition hypergraph_expander_decomposition(const Hypergraph& g, double phi,
                                                int exact_limit,
                                                std::uint64_t seed) {
  int r = std::max(g.rank(), 2);
  if (!(phi > 0.0) || phi > 1.0 / (r - 1))
    fail(ErrorCode::BadPhi, "need 0 < phi <= 1/(r-1)");

  Multigraph expanded = star_expand(g);
  double phi_prime = (r - 1) * phi;
  Decomposition dec =
      graph_expander_decomposition(expanded, phi_prime, exact_limit, seed);
  dec.phi = phi;

  std::vector<int> block_of(g.num_vertices(), -1);
  for (int b = 0; b < static_cast<int>(dec.partition.blocks.size()); ++b)
    for (int v : dec.partition.blocks[b]) block_of[v] = b;
  dec.crossing_edges = 0;
  for (const auto& e : g.edges()) {
    int first = block_of[e[0]];
    for (int v : e) {
      if (block_of[v] != first) {
        ++dec.crossing_edges;
        break;
      }
    }
  }
  return dec;
}

}  // namespace hypercut
