#include "hypercut/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hypercut {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SingletonHyperedge: return "SingletonHyperedge";
    case ErrorCode::DuplicateHyperedge: return "DuplicateHyperedge";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::InvalidSide: return "InvalidSide";
    case ErrorCode::VertexNotInSet: return "VertexNotInSet";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoSplit: return "NoSplit";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::BadPhi: return "BadPhi";
    case ErrorCode::BadS: return "BadS";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidDirectedCut: return "InvalidDirectedCut";
    case ErrorCode::InvalidSeparator: return "InvalidSeparator";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NoCutFound: return "NoCutFound";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::BadParams: return "BadParams";
  }
  return "UnknownError";
}

Hypergraph Hypergraph::build(int num_vertices, std::vector<std::vector<int>> edges,
                             bool allow_multi, bool drop_small) {
  if (num_vertices < 0) fail(ErrorCode::BadParams, "negative vertex count");
  Hypergraph g;
  g.num_vertices_ = num_vertices;
  g.multi_ = allow_multi;
  g.edges_.reserve(edges.size());
  for (auto& e : edges) {
    for (int v : e) {
      if (v < 0 || v >= num_vertices)
        fail(ErrorCode::VertexOutOfRange,
             "vertex " + std::to_string(v) + " outside [0," +
                 std::to_string(num_vertices) + ")");
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() <= 1) {
      if (drop_small) continue;
      fail(ErrorCode::SingletonHyperedge,
           "hyperedge with fewer than 2 distinct vertices");
    }
    g.edges_.push_back(std::move(e));
  }
  if (!allow_multi) {
    auto sorted = g.edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorCode::DuplicateHyperedge, "parallel hyperedge in simple input");
  }
  g.incidence_.assign(num_vertices, {});
  for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
    g.total_size_ += static_cast<long long>(g.edges_[i].size());
    g.rank_ = std::max(g.rank_, static_cast<int>(g.edges_[i].size()));
    for (int v : g.edges_[i]) g.incidence_[v].push_back(i);
  }
  return g;
}

int Hypergraph::min_degree() const {
  int best = num_vertices_ == 0 ? 0 : degree(0);
  for (int v = 1; v < num_vertices_; ++v) best = std::min(best, degree(v));
  return best;
}

void validate_vertex_set(const Hypergraph& g, std::span<const int> set,
                         const char* what) {
  int prev = -1;
  for (int v : set) {
    if (v < 0 || v >= g.num_vertices())
      fail(ErrorCode::VertexOutOfRange, std::string(what) + ": vertex " +
                                            std::to_string(v) + " out of range");
    if (v <= prev)
      fail(ErrorCode::BadParams,
           std::string(what) + ": vertex set must be sorted and duplicate-free");
    prev = v;
  }
}

namespace {

std::vector<char> mask_of(const Hypergraph& g, std::span<const int> set,
                          const char* what) {
  validate_vertex_set(g, set, what);
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : set) in[v] = 1;
  return in;
}

}  // namespace

long long cut_capacity(const Hypergraph& g, std::span<const int> side) {
  if (side.empty()) fail(ErrorCode::EmptySide, "cut side is empty");
  if (static_cast<int>(side.size()) >= g.num_vertices())
    fail(ErrorCode::InvalidSide, "cut side must be a proper subset");
  auto in = mask_of(g, side, "cut side");
  long long crossing = 0;
  for (const auto& e : g.edges()) {
    bool has_in = false, has_out = false;
    for (int v : e) (in[v] ? has_in : has_out) = true;
    if (has_in && has_out) ++crossing;
  }
  return crossing;
}

int degree_within(const Hypergraph& g, int v, std::span<const int> block) {
  auto in = mask_of(g, block, "block");
  if (v < 0 || v >= g.num_vertices())
    fail(ErrorCode::VertexOutOfRange, "vertex out of range");
  if (!in[v]) fail(ErrorCode::VertexNotInSet, "vertex not inside its block");
  int count = 0;
  for (int e : g.incident_edges(v)) {
    bool inside = true;
    for (int u : g.edge(e))
      if (!in[u]) { inside = false; break; }
    if (inside) ++count;
  }
  return count;
}

long long volume(const Hypergraph& g, std::span<const int> set) {
  validate_vertex_set(g, set, "volume set");
  long long total = 0;
  for (int v : set) total += g.degree(v);
  return total;
}

long long volume_within(const Hypergraph& g, std::span<const int> inner,
                        std::span<const int> outer) {
  auto in_outer = mask_of(g, outer, "outer set");
  validate_vertex_set(g, inner, "inner set");
  long long total = 0;
  for (int v : inner) {
    if (!in_outer[v]) fail(ErrorCode::NotNested, "inner set leaves outer set");
    for (int e : g.incident_edges(v)) {
      bool inside = true;
      for (int u : g.edge(e))
        if (!in_outer[u]) { inside = false; break; }
      if (inside) ++total;
    }
  }
  return total;
}

EdgeSetCounts edge_sets(const Hypergraph& g, std::span<const int> s,
                        std::span<const int> t) {
  auto in_s = mask_of(g, s, "first set");
  auto in_t = mask_of(g, t, "second set");
  for (int v : t)
    if (in_s[v]) fail(ErrorCode::BadParams, "edge_sets needs disjoint sets");
  EdgeSetCounts counts;
  for (const auto& e : g.edges()) {
    int hits_s = 0, hits_t = 0, outside = 0;
    for (int v : e) {
      if (in_s[v]) ++hits_s;
      else if (in_t[v]) ++hits_t;
      else ++outside;
    }
    int size = static_cast<int>(e.size());
    if (hits_s == size) ++counts.within_first;
    if (hits_t == size) ++counts.within_second;
    if (hits_s > 0 && hits_t > 0) {
      ++counts.touching;
      if (outside == 0) ++counts.between;
    }
  }
  return counts;
}

NestedCountBound check_nested_count_bound(const Hypergraph& g,
                                          std::span<const int> inner,
                                          std::span<const int> outer) {
  auto in_outer = mask_of(g, outer, "outer set");
  auto in_inner = mask_of(g, inner, "inner set");
  for (int v : inner)
    if (!in_outer[v]) fail(ErrorCode::NotNested, "inner set leaves outer set");

  NestedCountBound result;
  for (const auto& e : g.edges()) {
    int hits_outer = 0, hits_inner = 0;
    for (int v : e) {
      if (in_outer[v]) ++hits_outer;
      if (in_inner[v]) ++hits_inner;
    }
    int size = static_cast<int>(e.size());
    if (hits_outer == size) {
      if (hits_inner == size) ++result.within_inner;
      if (hits_inner > 0 && hits_inner < size) ++result.between;
    }
  }
  result.vol_inner = volume_within(g, inner, outer);
  int r = std::max(g.rank(), 2);
  // Integer form of between >= (vol_S(T) - r|E[T]|) / (r-1).
  result.holds = static_cast<long long>(r - 1) * result.between >=
                 result.vol_inner - static_cast<long long>(r) * result.within_inner;
  return result;
}

Contraction contract(const Hypergraph& g, const VertexPartition& parts) {
  std::vector<int> map(g.num_vertices(), -1);
  int next = 0;
  for (const auto& block : parts.blocks) {
    if (block.empty()) fail(ErrorCode::EmptyBlock, "empty partition block");
    validate_vertex_set(g, block, "partition block");
    for (int v : block) {
      if (map[v] != -1)
        fail(ErrorCode::OverlappingBlocks,
             "vertex " + std::to_string(v) + " in two blocks");
      map[v] = next;
    }
    ++next;
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (map[v] == -1) map[v] = next++;

  std::vector<std::vector<int>> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    std::vector<int> image;
    image.reserve(e.size());
    for (int v : e) image.push_back(map[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image.size() >= 2) edges.push_back(std::move(image));
  }
  Contraction result;
  result.graph = Hypergraph::build(next, std::move(edges), /*allow_multi=*/true,
                                   /*drop_small=*/true);
  result.vertex_map = std::move(map);
  return result;
}

std::vector<int> component_ids(const Hypergraph& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  int id = 0;
  std::vector<int> stack;
  for (int start = 0; start < g.num_vertices(); ++start) {
    if (comp[start] != -1) continue;
    comp[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident_edges(v)) {
        for (int u : g.edge(e)) {
          if (comp[u] == -1) {
            comp[u] = id;
            stack.push_back(u);
          }
        }
      }
    }
    ++id;
  }
  return comp;
}

int component_count(const Hypergraph& g) {
  auto comp = component_ids(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

Cut component_zero_cut(const Hypergraph& g, const std::string& source) {
  auto comp = component_ids(g);
  Cut cut;
  cut.capacity = 0;
  cut.source = source;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (comp[v] == 0) cut.side.push_back(v);
  if (static_cast<int>(cut.side.size()) == g.num_vertices())
    fail(ErrorCode::InvalidSide, "hypergraph is connected; no zero cut");
  return cut;
}

}  // namespace hypercut
