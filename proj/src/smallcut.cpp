#include "hypercut/smallcut.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hypercut/numeric.hpp"
#include "hypercut/ordering.hpp"
#include "hypercut/sparsify.hpp"

namespace hypercut {

// ---------------------------------------------------------------------------
// directed encoding

DirectedCutGraph DirectedCutGraph::build(const Hypergraph& g) {
  DirectedCutGraph d;
  d.num_vertices_ = g.num_vertices();
  d.num_edges_ = g.num_edges();
  d.rank_ = std::max(g.rank(), 2);
  d.infinite_ = static_cast<std::uint64_t>(g.num_edges()) + 1;
  d.arcs_.reserve(static_cast<size_t>(g.num_edges() + 2 * g.total_size()));
  for (int e = 0; e < g.num_edges(); ++e) {
    d.arcs_.push_back({d.edge_in_node(e), d.edge_out_node(e), 1});
    for (int v : g.edge(e)) {
      d.arcs_.push_back({d.vertex_node(v), d.edge_in_node(e), d.infinite_});
      d.arcs_.push_back({d.edge_out_node(e), d.vertex_node(v), d.infinite_});
    }
  }
  d.arcs_at_.assign(d.node_count(), {});
  for (int a = 0; a < d.arc_count(); ++a) {
    d.arcs_at_[d.arcs_[a].tail].push_back(a);
    d.arcs_at_[d.arcs_[a].head].push_back(a);
  }
  d.flipped_.assign(d.arc_count(), 0);
  d.marked_.assign(d.arc_count(), 0);
  d.seen_epoch_.assign(d.node_count(), 0);
  d.parent_arc_.assign(d.node_count(), -1);
  return d;
}

DirectedCutGraph build_directed(const Hypergraph& g) {
  return DirectedCutGraph::build(g);
}

void DirectedCutGraph::flip(int a) {
  if (!flipped_[a]) flipped_list_.push_back(a);
  flipped_[a] = !flipped_[a];
}

void DirectedCutGraph::reset_orientation() {
  for (int a : flipped_list_) flipped_[a] = 0;
  flipped_list_.clear();
}

std::uint64_t directed_cut_weight(const DirectedCutGraph& d,
                                  const std::vector<int>& nodes) {
  std::vector<char> in(d.node_count(), 0);
  int vertex_side = 0;
  for (int node : nodes) {
    if (node < 0 || node >= d.node_count())
      fail(ErrorCode::VertexOutOfRange, "node id out of range");
    if (in[node]) fail(ErrorCode::BadParams, "duplicate node id");
    in[node] = 1;
    if (d.is_vertex_node(node)) ++vertex_side;
  }
  if (vertex_side == 0 || vertex_side == d.num_hyper_vertices())
    fail(ErrorCode::InvalidDirectedCut,
         "vertex-node trace must be a proper non-empty subset");
  std::uint64_t weight = 0;
  for (int a = 0; a < d.arc_count(); ++a)
    if (in[d.arc_tail(a)] && !in[d.arc_head(a)])
      weight = sat_add(weight, d.arc(a).weight);
  return weight;
}

namespace {

// Arcs leaving `in` under the original orientations.  Each earlier stopped
// round flips one tree path, and a path can cross out of a set that is closed
// under the current orientations at most once (crossing back in would leave a
// flipped arc pointing out of the set).  So a round that exhausts its
// frontier returns a set with at most round-1 such arcs -- an arc count, not
// a weight sum, since a flipped path may cross via a sentinel-weight arc.
long long original_out_arcs(const DirectedCutGraph& d,
                            const std::vector<char>& in) {
  long long count = 0;
  for (int a = 0; a < d.arc_count(); ++a)
    if (in[d.arc(a).tail] && !in[d.arc(a).head]) ++count;
  return count;
}

}  // namespace

std::optional<std::vector<int>> small_size_small_min_cut(DirectedCutGraph& d,
                                                         int source_vertex,
                                                         int k, int s, Rng& rng,
                                                         ProbeStats* stats) {
  if (source_vertex < 0 || source_vertex >= d.num_hyper_vertices())
    fail(ErrorCode::VertexOutOfRange, "source vertex out of range");
  if (k < 1) fail(ErrorCode::BadK, "connectivity bound must be >= 1");
  if (s < 1) fail(ErrorCode::BadS, "side bound must be >= 1");
  ProbeStats local;
  if (!stats) stats = &local;
  *stats = ProbeStats{};

  std::uint64_t r = d.rank();
  std::uint64_t s_pow = sat_pow(static_cast<std::uint64_t>(s), r);
  std::uint64_t mark_cap = sat_mul(sat_mul(512, sat_mul(k, k)), sat_mul(r, s_pow));
  std::uint64_t stop_denom =
      sat_mul(8 * r, sat_add(sat_mul(4, s_pow), static_cast<std::uint64_t>(k)));

  for (int a : d.marked_list_) d.marked_[a] = 0;
  d.marked_list_.clear();
  std::uint64_t marked_count = 0;

  int x = d.vertex_node(source_vertex);
  std::vector<int> queue;
  for (int round = 1; round <= k + 1; ++round) {
    ++d.epoch_;
    queue.clear();
    queue.push_back(x);
    d.seen_epoch_[x] = d.epoch_;
    d.parent_arc_[x] = -1;
    int stop_node = -1;
    size_t head = 0;
    while (head < queue.size() && stop_node < 0) {
      int u = queue[head++];
      for (int a : d.arcs_at_[u]) {
        if (d.arc_tail(a) != u) continue;  // not an out-arc right now
        int v = d.arc_head(a);
        bool fresh_node = d.seen_epoch_[v] != d.epoch_;
        if (!d.marked_[a]) {
          d.marked_[a] = 1;
          d.marked_list_.push_back(a);
          stats->arcs_marked = ++marked_count;
          if (marked_count >= mark_cap) {
            stats->mark_cap_hit = true;
            return std::nullopt;
          }
          if (rng.one_in(stop_denom)) {
            if (fresh_node) {
              d.seen_epoch_[v] = d.epoch_;
              d.parent_arc_[v] = a;
            }
            stop_node = v;
            break;
          }
        }
        if (fresh_node) {
          d.seen_epoch_[v] = d.epoch_;
          d.parent_arc_[v] = a;
          queue.push_back(v);
        }
      }
    }
    ++stats->rounds_completed;
    if (stop_node < 0) {
      // Frontier exhausted: the reached set is closed under the current
      // orientations, so every arc that originally left it was flipped by
      // one of the earlier stopped rounds.
      std::vector<char> in(d.node_count(), 0);
      for (int node : queue) in[node] = 1;
      if (original_out_arcs(d, in) > round - 1)
        throw std::logic_error(
            "directed probe returned a set crossed by more original arcs "
            "than its round budget allows");
      return queue;
    }
    // Flip the tree path from the source to the stop node.
    for (int node = stop_node; d.parent_arc_[node] >= 0;) {
      int a = d.parent_arc_[node];
      int prev = d.arc_tail(a);
      d.flip(a);
      node = prev;
    }
  }
  return std::nullopt;
}

Cut small_lambda_small_cut(const Hypergraph& g, int max_side,
                           std::uint64_t seed, int repeat_factor) {
  int n = g.num_vertices();
  if (n < 2) fail(ErrorCode::TooSmall, "need at least 2 vertices");
  if (max_side < 1) fail(ErrorCode::BadS, "side bound must be >= 1");
  int k = approximate_connectivity(g);
  if (k == 0) return component_zero_cut(g, "small-lambda");

  std::uint64_t r = std::max(g.rank(), 2);
  std::uint64_t s_pow = sat_pow(static_cast<std::uint64_t>(max_side), r);
  std::uint64_t probe_budget =
      sat_mul(sat_mul(512, sat_mul(k, k)), sat_mul(r, s_pow));
  if (static_cast<std::uint64_t>(g.total_size()) <= probe_budget) {
    Cut cut = slow_min_cut(g);
    cut.source = "small-lambda-base";
    return cut;
  }

  DirectedCutGraph d = build_directed(g);
  int reps = repeat_factor * std::max(1, ceil_log2(n));
  Cut best;
  best.capacity = -1;
  std::uint64_t trial = 0;
  for (int rep = 0; rep < reps; ++rep) {
    for (int v = 0; v < n; ++v, ++trial) {
      d.reset_orientation();
      Rng rng(derive_seed(seed, trial));
      auto nodes = small_size_small_min_cut(d, v, k, max_side, rng);
      if (!nodes) continue;
      VertexSet side;
      for (int node : *nodes)
        if (d.is_vertex_node(node)) side.push_back(node);
      std::sort(side.begin(), side.end());
      if (side.empty() || static_cast<int>(side.size()) >= n) continue;
      long long cap = cut_capacity(g, side);
      if (best.capacity < 0 || cap < best.capacity) {
        best.capacity = cap;
        best.side = std::move(side);
      }
    }
  }
  if (best.capacity < 0)
    fail(ErrorCode::NoCutFound, "no probe isolated a proper cut");
  best.source = "small-lambda";
  return best;
}

// ---------------------------------------------------------------------------
// bipartite encoding

BipartiteIncidence build_bipartite(const Hypergraph& g) {
  BipartiteIncidence b;
  b.num_hyper_vertices = g.num_vertices();
  b.num_hyper_edges = g.num_edges();
  int total = b.node_count();
  b.graph.adj.assign(total, {});
  b.graph.infinite = static_cast<std::uint64_t>(g.num_edges()) + 1;
  b.graph.weight.assign(total, 1);
  for (int v = 0; v < g.num_vertices(); ++v)
    b.graph.weight[v] = b.graph.infinite;
  for (int e = 0; e < g.num_edges(); ++e) {
    for (int v : g.edge(e)) {
      b.graph.adj[b.vertex_node(v)].push_back(b.edge_node(e));
      b.graph.adj[b.edge_node(e)].push_back(b.vertex_node(v));
    }
  }
  return b;
}

Separator separator_from_cut(const Hypergraph& g, const BipartiteIncidence& b,
                             std::span<const int> side) {
  if (side.empty()) fail(ErrorCode::EmptySide, "cut side is empty");
  if (static_cast<int>(side.size()) >= g.num_vertices())
    fail(ErrorCode::InvalidSide, "cut side must be a proper subset");
  validate_vertex_set(g, side, "cut side");
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : side) in[v] = 1;

  Separator sep;
  for (int v = 0; v < g.num_vertices(); ++v)
    (in[v] ? sep.left : sep.right).push_back(b.vertex_node(v));
  for (int e = 0; e < g.num_edges(); ++e) {
    bool has_in = false, has_out = false;
    for (int v : g.edge(e)) (in[v] ? has_in : has_out) = true;
    if (has_in && has_out) {
      sep.cut.push_back(b.edge_node(e));
      sep.weight += b.graph.weight[b.edge_node(e)];
    } else {
      (has_in ? sep.left : sep.right).push_back(b.edge_node(e));
    }
  }
  std::sort(sep.left.begin(), sep.left.end());
  std::sort(sep.cut.begin(), sep.cut.end());
  std::sort(sep.right.begin(), sep.right.end());
  return sep;
}

Cut cut_from_separator(const Hypergraph& g, const BipartiteIncidence& b,
                       const Separator& sep) {
  int total = b.node_count();
  std::vector<int> role(total, -1);  // 0=left 1=cut 2=right
  auto assign = [&](const std::vector<int>& nodes, int tag) {
    for (int node : nodes) {
      if (node < 0 || node >= total)
        fail(ErrorCode::VertexOutOfRange, "separator node out of range");
      if (role[node] != -1)
        fail(ErrorCode::InvalidSeparator, "separator parts overlap");
      role[node] = tag;
    }
  };
  assign(sep.left, 0);
  assign(sep.cut, 1);
  assign(sep.right, 2);
  for (int node = 0; node < total; ++node)
    if (role[node] == -1)
      fail(ErrorCode::InvalidSeparator, "separator parts must cover all nodes");
  for (int node : sep.cut)
    if (b.is_vertex_node(node))
      fail(ErrorCode::InvalidSeparator, "removed nodes must be edge nodes");
  for (int node = 0; node < total; ++node) {
    if (role[node] != 0) continue;
    for (int other : b.graph.adj[node])
      if (role[other] == 2)
        fail(ErrorCode::InvalidSeparator, "edge between left and right parts");
  }

  Cut cut;
  for (int node : sep.left)
    if (b.is_vertex_node(node)) cut.side.push_back(node);
  if (cut.side.empty()) fail(ErrorCode::EmptySide, "left part has no vertices");
  if (static_cast<int>(cut.side.size()) >= g.num_vertices())
    fail(ErrorCode::InvalidSide, "left part holds every vertex");
  cut.capacity = cut_capacity(g, cut.side);
  cut.source = "separator";
  return cut;
}

// ---------------------------------------------------------------------------
// kernels

std::vector<Kernel> find_kernels(const BipartiteIncidence& b,
                                 const std::vector<int>& source_vertices,
                                 std::uint64_t scale, std::uint64_t seed) {
  if (scale < 1) fail(ErrorCode::BadParams, "sample scale must be >= 1");
  int total = b.node_count();
  const auto& adj = b.graph.adj;

  Rng rng(seed);
  std::vector<char> sampled(total, 0);
  for (int node = 0; node < total; ++node)
    sampled[node] = rng.one_in(8 * scale);

  std::vector<Kernel> kernels;
  kernels.reserve(source_vertices.size());
  const int term = total;  // contracted terminal's provisional id

  for (int x_vertex : source_vertices) {
    if (x_vertex < 0 || x_vertex >= b.num_hyper_vertices)
      fail(ErrorCode::VertexOutOfRange, "source vertex out of range");
    int x = b.vertex_node(x_vertex);

    Kernel kernel;
    kernel.x_node = x;

    // far sample: drop x's closed neighborhood
    std::vector<char> in_far(sampled.begin(), sampled.end());
    in_far[x] = 0;
    for (int u : adj[x]) in_far[u] = 0;
    bool far_empty = true;
    for (int node = 0; node < total && far_empty; ++node)
      if (in_far[node]) far_empty = false;
    if (far_empty) {
      kernel.degenerate = true;
      kernels.push_back(std::move(kernel));
      continue;
    }

    // absorb the far set's vertex-side neighbors too, then contract
    std::vector<char> contracted = in_far;
    for (int node = 0; node < total; ++node) {
      if (!in_far[node]) continue;
      for (int u : adj[node])
        if (b.is_vertex_node(u)) contracted[u] = 1;
    }

    // contracted simple graph over surviving nodes + term
    std::vector<std::vector<int>> adj2(total + 1);
    auto image = [&](int node) { return contracted[node] ? term : node; };
    for (int a = 0; a < total; ++a) {
      for (int nb : adj[a]) {
        if (nb < a) continue;
        int u = image(a), v = image(nb);
        if (u == v) continue;
        adj2[u].push_back(v);
        adj2[v].push_back(u);
      }
    }
    for (auto& list : adj2) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    // common neighbors of x and the terminal get recorded and removed
    std::vector<char> near_term(total + 1, 0);
    for (int u : adj2[term]) near_term[u] = 1;
    std::vector<char> dead(total + 1, 0);
    for (int u : adj2[x]) {
      if (u != term && near_term[u]) {
        kernel.absorbed.push_back(u);
        dead[u] = 1;
      }
    }

    // drop edges running inside the terminal's neighborhood
    auto edge_alive = [&](int u, int v) {
      if (dead[u] || dead[v]) return false;
      return !(near_term[u] && near_term[v]);
    };

    // keep only what can still matter: the terminal's closed neighborhood
    // plus everything reachable from x avoiding it
    std::vector<char> blocked(total + 1, 0);
    blocked[term] = 1;
    for (int u : adj2[term])
      if (!dead[u] && edge_alive(term, u)) blocked[u] = 1;
    std::vector<char> keep(total + 1, 0);
    {
      std::vector<int> stack{x};
      keep[x] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj2[u]) {
          if (keep[v] || dead[v] || blocked[v] || !edge_alive(u, v)) continue;
          keep[v] = 1;
          stack.push_back(v);
        }
      }
    }
    for (int node = 0; node <= total; ++node)
      if (blocked[node] && !dead[node]) keep[node] = 1;

    // degree-one hangers on the terminal are useless
    std::vector<int> degree(total + 1, 0);
    for (int u = 0; u <= total; ++u) {
      if (!keep[u]) continue;
      for (int v : adj2[u])
        if (v > u && keep[v] && edge_alive(u, v)) {
          ++degree[u];
          ++degree[v];
        }
    }
    for (int u : adj2[term])
      if (keep[u] && edge_alive(term, u) && degree[u] == 1) keep[u] = 0;

    // compact
    std::vector<int> local(total + 1, -1);
    for (int node = 0; node <= total; ++node) {
      if (!keep[node]) continue;
      local[node] = static_cast<int>(kernel.node_ids.size());
      kernel.node_ids.push_back(node == term ? -1 : node);
      if (node != term && b.is_vertex_node(node)) ++kernel.vertex_node_count;
    }
    int kn = static_cast<int>(kernel.node_ids.size());
    kernel.graph.adj.assign(kn, {});
    kernel.graph.infinite = b.graph.infinite;
    kernel.graph.weight.assign(kn, 1);
    for (int node = 0; node <= total; ++node) {
      if (local[node] < 0) continue;
      if (node == term || b.is_vertex_node(node))
        kernel.graph.weight[local[node]] = b.graph.infinite;
      for (int v : adj2[node]) {
        if (v > node && local[v] >= 0 && edge_alive(node, v)) {
          kernel.graph.adj[local[node]].push_back(local[v]);
          kernel.graph.adj[local[v]].push_back(local[node]);
          ++kernel.edge_count;
        }
      }
    }
    kernel.source = local[x];
    kernel.target = local[term];
    if (kernel.target < 0) kernel.degenerate = true;
    kernels.push_back(std::move(kernel));
  }
  return kernels;
}

namespace {

// node-split max flow (Dinitz)
struct FlowNetwork {
  struct Edge {
    int to;
    std::uint64_t cap;
    int rev;
  };
  std::vector<std::vector<Edge>> net;
  std::vector<int> level, iter;

  explicit FlowNetwork(int n) : net(n), level(n), iter(n) {}

  void add(int from, int to, std::uint64_t cap) {
    net[from].push_back({to, cap, static_cast<int>(net[to].size())});
    net[to].push_back({from, 0, static_cast<int>(net[from].size()) - 1});
  }

  bool levels(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{s};
    level[s] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (const auto& e : net[u]) {
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[u] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level[t] >= 0;
  }

  std::uint64_t augment(int u, int t, std::uint64_t limit) {
    if (u == t) return limit;
    for (int& i = iter[u]; i < static_cast<int>(net[u].size()); ++i) {
      Edge& e = net[u][i];
      if (e.cap == 0 || level[e.to] != level[u] + 1) continue;
      std::uint64_t pushed = augment(e.to, t, std::min(limit, e.cap));
      if (pushed > 0) {
        e.cap -= pushed;
        net[e.to][e.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::uint64_t max_flow(int s, int t, std::uint64_t abort_at) {
    std::uint64_t flow = 0;
    while (levels(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (std::uint64_t pushed = augment(s, t, ~std::uint64_t{0})) {
        flow = sat_add(flow, pushed);
        if (flow >= abort_at) return flow;
      }
    }
    return flow;
  }
};

}  // namespace

KernelSeparator kernel_min_separator(const Kernel& kernel) {
  if (kernel.degenerate)
    fail(ErrorCode::BadParams, "degenerate kernel has no terminal");
  int kn = kernel.graph.size();
  auto in_node = [](int i) { return 2 * i; };
  auto out_node = [](int i) { return 2 * i + 1; };
  std::uint64_t infinite = kernel.graph.infinite;

  FlowNetwork net(2 * kn);
  for (int i = 0; i < kn; ++i) net.add(in_node(i), out_node(i), kernel.graph.weight[i]);
  for (int i = 0; i < kn; ++i)
    for (int j : kernel.graph.adj[i])
      if (j > i) {
        net.add(out_node(i), in_node(j), infinite);
        net.add(out_node(j), in_node(i), infinite);
      }

  int source = out_node(kernel.source), sink = in_node(kernel.target);
  std::uint64_t flow = net.max_flow(source, sink, infinite);
  if (flow >= infinite)
    fail(ErrorCode::Unbounded, "source and terminal cannot be separated");

  // residual reachability picks out the saturated node splits
  std::vector<char> reach(2 * kn, 0);
  std::vector<int> stack{source};
  reach[source] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& e : net.net[u]) {
      if (e.cap > 0 && !reach[e.to]) {
        reach[e.to] = 1;
        stack.push_back(e.to);
      }
    }
  }
  KernelSeparator result;
  result.weight = flow;
  std::uint64_t check = 0;
  for (int i = 0; i < kn; ++i) {
    if (reach[in_node(i)] && !reach[out_node(i)]) {
      result.cut_nodes.push_back(i);
      check = sat_add(check, kernel.graph.weight[i]);
    }
  }
  if (check != flow)
    throw std::logic_error("separator weight disagrees with flow value");
  return result;
}

// ---------------------------------------------------------------------------
// kernelization wrapper and dispatcher

Cut big_lambda_small_cut(const Hypergraph& g, int max_side, std::uint64_t seed,
                         int repeat_factor) {
  int n = g.num_vertices();
  if (n < 2) fail(ErrorCode::TooSmall, "need at least 2 vertices");
  if (max_side < 1) fail(ErrorCode::BadS, "side bound must be >= 1");
  int k = approximate_connectivity(g);
  if (k == 0) return component_zero_cut(g, "big-lambda");

  std::uint64_t r = std::max(g.rank(), 2);
  std::uint64_t s_pow = sat_pow(static_cast<std::uint64_t>(max_side), r);
  std::uint64_t log_n = std::max(1, ceil_log2(n));
  std::uint64_t log_p = std::max(1, ceil_log2(g.total_size()));
  std::uint64_t budget =
      sat_add(static_cast<std::uint64_t>(k) + r, sat_mul(300, sat_mul(s_pow, log_n)));
  std::uint64_t vertex_bound = sat_mul(9, sat_mul(r, s_pow));

  BipartiteIncidence b = build_bipartite(g);
  std::vector<int> sources(n);
  for (int v = 0; v < n; ++v) sources[v] = v;

  int reps = repeat_factor * static_cast<int>(log_n);
  int scale_steps = ceil_log2(sat_mul(3, s_pow)) + 1;

  Cut best;
  best.capacity = -1;
  for (int step = 0; step < scale_steps; ++step) {
    std::uint64_t scale = std::uint64_t{1} << std::min(step, 62);
    std::uint64_t edge_bound =
        sat_mul(64, sat_mul(budget, sat_mul(scale, log_p)));
    for (int rep = 0; rep < reps; ++rep) {
      auto kernels =
          find_kernels(b, sources, scale, derive_seed(seed, step, rep));
      for (const auto& kernel : kernels) {
        if (kernel.degenerate) continue;
        if (static_cast<std::uint64_t>(kernel.vertex_node_count) > vertex_bound)
          continue;
        if (static_cast<std::uint64_t>(kernel.edge_count) > edge_bound) continue;
        KernelSeparator sep;
        try {
          sep = kernel_min_separator(kernel);
        } catch (const Error& err) {
          if (err.code() == ErrorCode::Unbounded) continue;
          throw;
        }
        // lift: removed kernel nodes plus the absorbed common neighbors
        std::vector<char> removed(b.node_count(), 0);
        for (int local : sep.cut_nodes) {
          int node = kernel.node_ids[local];
          if (node >= 0) removed[node] = 1;
        }
        for (int node : kernel.absorbed) removed[node] = 1;
        // component of x in B minus the removed nodes
        std::vector<char> reached(b.node_count(), 0);
        std::vector<int> stack{kernel.x_node};
        reached[kernel.x_node] = 1;
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (int v : b.graph.adj[u]) {
            if (!reached[v] && !removed[v]) {
              reached[v] = 1;
              stack.push_back(v);
            }
          }
        }
        VertexSet side;
        for (int v = 0; v < n; ++v)
          if (reached[b.vertex_node(v)]) side.push_back(v);
        if (side.empty() || static_cast<int>(side.size()) >= n) continue;
        long long cap = cut_capacity(g, side);
        if (best.capacity < 0 || cap < best.capacity) {
          best.capacity = cap;
          best.side = std::move(side);
        }
      }
    }
  }
  if (best.capacity < 0)
    fail(ErrorCode::NoCutFound, "no kernel produced a proper cut");
  best.source = "big-lambda";
  return best;
}

Cut small_size_min_cut(const Hypergraph& g, int max_side, std::uint64_t seed,
                       int repeat_factor) {
  int n = g.num_vertices();
  if (n < 2) fail(ErrorCode::TooSmall, "need at least 2 vertices");
  if (max_side < 1) fail(ErrorCode::BadS, "side bound must be >= 1");
  int k = approximate_connectivity(g);
  if (k == 0) return component_zero_cut(g, "small-size");

  std::uint64_t r = std::max(g.rank(), 2);
  std::uint64_t s_pow = sat_pow(static_cast<std::uint64_t>(max_side), r);
  std::uint64_t threshold =
      sat_mul(2700, sat_mul(s_pow, std::max(1, ceil_log2(n))));
  try {
    if (static_cast<std::uint64_t>(k) <= threshold)
      return small_lambda_small_cut(g, max_side, seed, repeat_factor);
    return big_lambda_small_cut(g, max_side, seed, repeat_factor);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NoCutFound) throw;
    Cut cut = slow_min_cut(g);
    cut.source = "small-size-fallback";
    return cut;
  }
}

ScratchCheck check_scratch(const BipartiteIncidence& b, const Separator& sep,
                           std::uint64_t budget) {
  ScratchCheck check;
  check.budget = budget;
  check.log_mn = std::max(1, ceil_log2(b.node_count()));
  std::uint64_t left = sep.left.size();
  std::uint64_t cut = sep.cut.size();
  for (int node : sep.cut)
    if (b.graph.adj[node].size() <= 8 * budget) ++check.low_degree_nodes;
  check.cut_size_ok = cut <= budget;
  check.left_size_ok =
      sat_mul(100, sat_mul(left, check.log_mn)) <= budget;
  check.low_degree_ok =
      static_cast<std::uint64_t>(check.low_degree_nodes) >=
      sat_mul(300, sat_mul(left, check.log_mn));
  check.is_scratch =
      check.cut_size_ok && check.left_size_ok && check.low_degree_ok;
  return check;
}

// ---------------------------------------------------------------------------
// exhaustive bounded-side solver

SubsetCounts subset_counts(const Hypergraph& g, int max_size) {
  if (max_size < 1) fail(ErrorCode::BadS, "subset size bound must be >= 1");
  SubsetCounts counts;
  VertexSet subset;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto edge = g.edge(e);
    int sz = static_cast<int>(edge.size());
    if (sz > 30) fail(ErrorCode::TooLarge, "hyperedge too large to enumerate");
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << sz); ++mask) {
      if (std::popcount(mask) > max_size) continue;
      subset.clear();
      for (int i = 0; i < sz; ++i)
        if (mask >> i & 1) subset.push_back(edge[i]);
      ++counts.containing[subset];
    }
    if (sz <= max_size)
      ++counts.edge_copies[VertexSet(edge.begin(), edge.end())];
  }
  return counts;
}

Cut exhaustive_small_min_cut(const Hypergraph& g, int max_side,
                             int size_limit) {
  int n = g.num_vertices();
  if (n < 2) fail(ErrorCode::TooSmall, "need at least 2 vertices");
  if (max_side < 1 || max_side > size_limit)
    fail(ErrorCode::BadS, "side bound outside the configured range");
  int s = std::min(max_side, n - 1);
  SubsetCounts counts = subset_counts(g, s);
  auto members = [&](const VertexSet& key) -> long long {
    auto it = counts.containing.find(key);
    return it == counts.containing.end() ? 0 : it->second;
  };
  auto copies = [&](const VertexSet& key) -> long long {
    auto it = counts.edge_copies.find(key);
    return it == counts.edge_copies.end() ? 0 : it->second;
  };

  Cut best;
  best.capacity = -1;
  VertexSet current, inner, full;
  auto evaluate = [&]() {
    int sz = static_cast<int>(current.size());
    std::uint32_t all = (std::uint32_t{1} << sz) - 1;
    long long crossing = 0;
    for (std::uint32_t sub = 1; sub <= all; ++sub) {
      inner.clear();
      for (int i = 0; i < sz; ++i)
        if (sub >> i & 1) inner.push_back(current[i]);
      // #{e : e and current meet exactly in `inner`} by inclusion-exclusion
      long long exact = 0;
      std::uint32_t rest = all & ~sub;
      std::uint32_t extra = 0;
      while (true) {
        full.clear();
        std::uint32_t key = sub | extra;
        for (int i = 0; i < sz; ++i)
          if (key >> i & 1) full.push_back(current[i]);
        long long term = members(full);
        exact += (std::popcount(extra) % 2 == 0) ? term : -term;
        if (extra == rest) break;
        extra = (extra - rest) & rest;
      }
      crossing += exact - copies(inner);
    }
    if (best.capacity < 0 || crossing < best.capacity) {
      best.capacity = crossing;
      best.side = current;
    }
  };
  auto grow = [&](auto&& self, int start) -> void {
    for (int v = start; v < n; ++v) {
      current.push_back(v);
      evaluate();
      if (static_cast<int>(current.size()) < s) self(self, v + 1);
      current.pop_back();
    }
  };
  grow(grow, 0);

  long long direct = cut_capacity(g, best.side);
  if (direct != best.capacity)
    throw std::logic_error(
        "membership-count cut value disagrees with direct evaluation");
  best.source = "exhaustive";
  return best;
}

}  // namespace hypercut
