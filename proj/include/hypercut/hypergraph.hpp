#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypercut/errors.hpp"

namespace hypercut {

// Vertex sets passed across the API are sorted, duplicate-free id vectors.
using VertexSet = std::vector<int>;

// A cut is one side C with 0 < |C| < n; capacity counts hyperedges meeting
// both C and its complement.  `source` records which solver produced it.
struct Cut {
  VertexSet side;
  long long capacity = 0;
  std::string source;
};

// Disjoint non-empty vertex blocks.  A partition does not have to cover all
// vertices; operations that need full coverage treat uncovered vertices as
// implicit singletons.
struct VertexPartition {
  std::vector<VertexSet> blocks;
};

// Static hypergraph over vertices 0..n-1.  Hyperedges keep their input order
// (several algorithms scan them in that order) and are stored sorted within
// each edge.  Simple instances reject duplicate edges; contracted instances
// are flagged multi and may carry parallel edges with multiplicity.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Edges of size <= 1 are an error by default; drop_small discards them
  // instead (contraction uses this path).
  static Hypergraph build(int num_vertices, std::vector<std::vector<int>> edges,
                          bool allow_multi = false, bool drop_small = false);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  long long total_size() const { return total_size_; }  // sum of |e|
  int rank() const { return rank_; }                    // max |e| (0 if no edges)
  bool is_multi() const { return multi_; }

  std::span<const int> edge(int e) const { return edges_[e]; }
  std::span<const int> incident_edges(int v) const { return incidence_[v]; }
  int degree(int v) const { return static_cast<int>(incidence_[v].size()); }
  int min_degree() const;

  const std::vector<std::vector<int>>& edges() const { return edges_; }

 private:
  int num_vertices_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> incidence_;
  long long total_size_ = 0;
  int rank_ = 0;
  bool multi_ = false;
};

void validate_vertex_set(const Hypergraph& g, std::span<const int> set,
                         const char* what);

// |delta(C)|.  C must be a proper non-empty vertex subset.
long long cut_capacity(const Hypergraph& g, std::span<const int> side);

// d_X(v): hyperedges containing v that lie entirely inside X.  v must be in X.
int degree_within(const Hypergraph& g, int v, std::span<const int> block);

// vol(S) = sum of degrees; vol_S(T) = sum over T of d_S(v), T subset of S.
long long volume(const Hypergraph& g, std::span<const int> set);
long long volume_within(const Hypergraph& g, std::span<const int> inner,
                        std::span<const int> outer);

struct EdgeSetCounts {
  long long within_first = 0;   // |E[S]|
  long long within_second = 0;  // |E[T]|
  long long between = 0;        // |E(S,T)|: edges inside S+T meeting both
  long long touching = 0;       // |E^o(S,T)|: edges meeting both, anywhere else too
};

// S and T must be disjoint.
EdgeSetCounts edge_sets(const Hypergraph& g, std::span<const int> s,
                        std::span<const int> t);

struct NestedCountBound {
  long long between = 0;     // |E(T, S \ T)|
  long long vol_inner = 0;   // vol_S(T)
  long long within_inner = 0;  // |E[T]|
  bool holds = false;        // (r-1)*between >= vol_inner - r*within_inner
};

// Lower bound on edges leaving T inside S, for T nested in S.
NestedCountBound check_nested_count_bound(const Hypergraph& g,
                                          std::span<const int> inner,
                                          std::span<const int> outer);

struct Contraction {
  Hypergraph graph;
  std::vector<int> vertex_map;  // old vertex id -> new vertex id
};

// Each block collapses to one vertex; uncovered vertices stay as singletons.
// Edges that shrink to size <= 1 disappear; parallel copies are kept and the
// result is flagged multi.
Contraction contract(const Hypergraph& g, const VertexPartition& parts);

// Connected component id per vertex (component of vertex 0 is id 0).
std::vector<int> component_ids(const Hypergraph& g);
int component_count(const Hypergraph& g);

// Capacity-zero cut for a disconnected hypergraph: the component of vertex 0.
Cut component_zero_cut(const Hypergraph& g, const std::string& source);

}  // namespace hypercut
