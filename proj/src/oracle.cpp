#include "hypercut/oracle.hpp"

#include <algorithm>
#include <bit>

namespace hypercut {

namespace {

// Shared Gray-code walk over subsets of `universe` (never empty, never the
// full universe unless allow_full).  visit(flipped_vertex) is called after
// each single-vertex flip; the visitor keeps its own incremental state.
template <typename Visit>
void gray_walk(int bits, Visit&& visit) {
  std::uint64_t steps = (1ULL << bits) - 1;
  for (std::uint64_t i = 1; i <= steps; ++i)
    visit(std::countr_zero(i));
}

}  // namespace

MinCutEnumeration brute_min_cut(const Hypergraph& g, int limit) {
  int n = g.num_vertices();
  if (n < 2) fail(ErrorCode::TooSmall, "need at least 2 vertices for a cut");
  if (n > limit) fail(ErrorCode::TooLarge, "oracle limit exceeded");

  int m = g.num_edges();
  std::vector<int> in_count(m, 0);     // |e ∩ S|
  std::vector<int> edge_size(m);
  for (int e = 0; e < m; ++e) edge_size[e] = static_cast<int>(g.edge(e).size());

  // S always contains vertex 0; Gray code runs over vertices 1..n-1.
  std::vector<char> in(n, 0);
  in[0] = 1;
  long long crossing = 0;
  for (int e : g.incident_edges(0)) {
    in_count[e] = 1;
    if (edge_size[e] > 1) ++crossing;
  }
  long long size_s = 1;

  MinCutEnumeration best;
  best.capacity = crossing;  // S = {0}
  auto record = [&](long long cap) {
    if (cap < best.capacity) {
      best.capacity = cap;
      best.sides.clear();
    }
    if (cap == best.capacity) {
      VertexSet side;
      for (int v = 0; v < n; ++v)
        if (in[v]) side.push_back(v);
      best.sides.push_back(std::move(side));
    }
  };
  {
    VertexSet side{0};
    best.sides.push_back(std::move(side));
  }

  gray_walk(n - 1, [&](int bit) {
    int v = bit + 1;
    int delta = in[v] ? -1 : 1;
    in[v] = !in[v];
    size_s += delta;
    for (int e : g.incident_edges(v)) {
      bool was_crossing = in_count[e] > 0 && in_count[e] < edge_size[e];
      in_count[e] += delta;
      bool now_crossing = in_count[e] > 0 && in_count[e] < edge_size[e];
      crossing += static_cast<int>(now_crossing) - static_cast<int>(was_crossing);
    }
    if (size_s < n) record(crossing);
  });
  return best;
}

Cut brute_min_s_cut(const Hypergraph& g, int max_side, int limit) {
  int n = g.num_vertices();
  if (n < 2) fail(ErrorCode::TooSmall, "need at least 2 vertices for a cut");
  if (n > limit) fail(ErrorCode::TooLarge, "oracle limit exceeded");
  if (max_side < 1) fail(ErrorCode::BadS, "side bound must be positive");

  int cap_size = std::min(max_side, n - 1);
  Cut best;
  best.capacity = -1;
  best.source = "oracle-small-side";
  std::vector<int> pick;
  // Enumerate all subsets of size 1..cap_size in lexicographic order.
  auto evaluate = [&](const std::vector<int>& side) {
    long long cap = cut_capacity(g, side);
    if (best.capacity < 0 || cap < best.capacity) {
      best.capacity = cap;
      best.side = side;
    }
  };
  std::vector<int> stack;
  auto recurse = [&](auto&& self, int start) -> void {
    if (!stack.empty()) evaluate(stack);
    if (static_cast<int>(stack.size()) == cap_size) return;
    for (int v = start; v < n; ++v) {
      stack.push_back(v);
      self(self, v + 1);
      stack.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

ConductanceSplit brute_conductance(const Hypergraph& g,
                                   std::span<const int> block, int limit) {
  validate_vertex_set(g, block, "conductance block");
  int bn = static_cast<int>(block.size());
  if (bn < 2) fail(ErrorCode::NoSplit, "block has no internal split");
  if (bn > limit) fail(ErrorCode::TooLarge, "oracle limit exceeded");

  int m = g.num_edges();
  std::vector<int> in_block_count(m, 0);
  for (int v : block)
    for (int e : g.incident_edges(v)) ++in_block_count[e];

  long long vol_block = volume(g, block);
  std::vector<int> in_s_count(m, 0);
  std::vector<char> in_s(bn, 0);
  long long vol_s = 0;
  long long crossing = 0;  // |E^o(S, X\S)|

  ConductanceSplit best;
  bool found = false;
  auto consider = [&]() {
    long long mv = std::min(vol_s, vol_block - vol_s);
    if (mv <= 0) return;  // zero-volume side: skip
    // exact rational compare crossing/mv < best
    if (!found || crossing * best.min_volume < best.crossing * mv) {
      found = true;
      best.crossing = crossing;
      best.min_volume = mv;
      best.side.clear();
      for (int i = 0; i < bn; ++i)
        if (in_s[i]) best.side.push_back(block[i]);
    }
  };

  gray_walk(bn, [&](int bit) {
    int delta = in_s[bit] ? -1 : 1;
    in_s[bit] = !in_s[bit];
    int v = block[bit];
    vol_s += delta * g.degree(v);
    for (int e : g.incident_edges(v)) {
      int total = in_block_count[e];
      bool was = in_s_count[e] > 0 && in_s_count[e] < total;
      in_s_count[e] += delta;
      bool now = in_s_count[e] > 0 && in_s_count[e] < total;
      crossing += static_cast<int>(now) - static_cast<int>(was);
    }
    // proper split only
    bool all = true, none = true;
    for (int i = 0; i < bn; ++i) (in_s[i] ? none : all) = false;
    if (!all && !none) consider();
  });

  if (!found) fail(ErrorCode::NoSplit, "every split has a zero-volume side");
  best.value = static_cast<double>(best.crossing) /
               static_cast<double>(best.min_volume);
  return best;
}

MinCutUnion min_cut_union(const Hypergraph& g, int limit) {
  auto enumeration = brute_min_cut(g, limit);
  MinCutUnion result;
  result.capacity = enumeration.capacity;
  std::vector<char> in_union(g.num_edges(), 0);
  std::vector<char> in_side(g.num_vertices(), 0);
  for (const auto& side : enumeration.sides) {
    std::fill(in_side.begin(), in_side.end(), 0);
    for (int v : side) in_side[v] = 1;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (in_union[e]) continue;
      bool has_in = false, has_out = false;
      for (int v : g.edge(e)) (in_side[v] ? has_in : has_out) = true;
      if (has_in && has_out) in_union[e] = 1;
    }
  }
  for (int e = 0; e < g.num_edges(); ++e)
    if (in_union[e]) result.edge_ids.push_back(e);
  return result;
}

SeparatorChoice brute_min_separator(const NodeWeightedGraph& g, int x,
                                    const std::vector<int>& forbidden,
                                    int candidate_limit) {
  int n = g.size();
  if (x < 0 || x >= n) fail(ErrorCode::VertexOutOfRange, "source out of range");
  std::vector<char> is_forbidden(n, 0);
  for (int v : forbidden) {
    if (v < 0 || v >= n) fail(ErrorCode::VertexOutOfRange, "target out of range");
    if (v == x) fail(ErrorCode::BadParams, "source cannot be its own target");
    is_forbidden[v] = 1;
  }

  std::vector<int> candidates;
  for (int v = 0; v < n; ++v)
    if (v != x && !is_forbidden[v] && g.weight[v] < g.infinite)
      candidates.push_back(v);
  if (static_cast<int>(candidates.size()) > candidate_limit)
    fail(ErrorCode::TooLarge, "too many separator candidates to enumerate");

  std::vector<char> removed(n, 0);
  std::vector<int> stack;
  std::vector<char> seen(n, 0);
  auto reaches_forbidden = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    stack.clear();
    stack.push_back(x);
    seen[x] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (is_forbidden[v]) return true;
      for (int u : g.adj[v]) {
        if (!seen[u] && !removed[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    return false;
  };

  bool found = false;
  SeparatorChoice best;
  int c = static_cast<int>(candidates.size());
  for (std::uint64_t mask = 0; mask < (1ULL << c); ++mask) {
    std::uint64_t weight = 0;
    for (int i = 0; i < c; ++i)
      if (mask >> i & 1) weight += g.weight[candidates[i]];
    if (found && weight >= best.weight) continue;
    for (int i = 0; i < c; ++i) removed[candidates[i]] = (mask >> i) & 1;
    if (!reaches_forbidden()) {
      found = true;
      best.weight = weight;
      best.nodes.clear();
      for (int i = 0; i < c; ++i)
        if (mask >> i & 1) best.nodes.push_back(candidates[i]);
    }
  }
  if (!found)
    fail(ErrorCode::Unbounded, "no finite-weight separator exists");
  std::sort(best.nodes.begin(), best.nodes.end());
  return best;
}

}  // namespace hypercut
