#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hypercut/hypergraph.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/rng.hpp"

namespace hypercut {

// Directed encoding of a hypergraph: one node per vertex, an in/out node pair
// per hyperedge.  The only unit-weight arcs are (e_in -> e_out); vertex/edge
// attachment arcs carry the infinite sentinel m+1.  Minimum directed cut
// weight (over sets whose vertex-node trace is proper) equals the hypergraph
// connectivity.  Arcs can be flipped in place; search scratch lives here so
// repeated randomized probes don't pay per-call allocations.
class DirectedCutGraph {
 public:
  struct Arc {
    int tail = 0, head = 0;
    std::uint64_t weight = 0;
  };

  static DirectedCutGraph build(const Hypergraph& g);

  int node_count() const { return num_vertices_ + 2 * num_edges_; }
  int num_hyper_vertices() const { return num_vertices_; }
  int num_hyper_edges() const { return num_edges_; }
  int rank() const { return rank_; }
  std::uint64_t infinite() const { return infinite_; }

  int vertex_node(int v) const { return v; }
  int edge_in_node(int e) const { return num_vertices_ + 2 * e; }
  int edge_out_node(int e) const { return num_vertices_ + 2 * e + 1; }
  bool is_vertex_node(int node) const { return node < num_vertices_; }

  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int a) const { return arcs_[a]; }
  bool arc_flipped(int a) const { return flipped_[a]; }
  int arc_tail(int a) const { return flipped_[a] ? arcs_[a].head : arcs_[a].tail; }
  int arc_head(int a) const { return flipped_[a] ? arcs_[a].tail : arcs_[a].head; }
  const std::vector<int>& arcs_at(int node) const { return arcs_at_[node]; }

  void flip(int a);
  void reset_orientation();

 private:
  friend std::optional<std::vector<int>> small_size_small_min_cut(
      DirectedCutGraph&, int, int, int, Rng&, struct ProbeStats*);

  int num_vertices_ = 0, num_edges_ = 0, rank_ = 2;
  std::uint64_t infinite_ = 1;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> arcs_at_;  // node -> arc ids touching it
  std::vector<char> flipped_;
  std::vector<int> flipped_list_;

  // epoch-stamped BFS scratch
  std::vector<std::uint32_t> seen_epoch_;
  std::vector<int> parent_arc_;
  std::vector<char> marked_;
  std::vector<int> marked_list_;
  std::uint32_t epoch_ = 0;
};

DirectedCutGraph build_directed(const Hypergraph& g);

// Weight of (nodes, rest) under the current orientations.  The vertex-node
// trace of `nodes` must be a proper non-empty vertex subset.  Arc weights at
// or above the sentinel make the answer "infinite" (callers compare against
// infinite()).
std::uint64_t directed_cut_weight(const DirectedCutGraph& d,
                                  const std::vector<int>& nodes);

struct ProbeStats {
  bool mark_cap_hit = false;     // aborted because the mark budget ran out
  int rounds_completed = 0;      // BFS rounds that ran to a stop or exhaustion
  std::uint64_t arcs_marked = 0;
};

// Randomized probe for a small directed cut around source vertex x: up to
// k+1 truncated BFS rounds; each newly seen arc is marked (global abort once
// 512*k^2*r*s^r arcs are marked) and with probability 1/(8r(4s^r+k)) ends its
// round, flipping the tree path to the arc's head like an augmenting path.
// A round that exhausts its frontier returns the reached node set, which is
// checked to be left (under the original orientations) by fewer arcs than
// the round number.  Empty result means no cut was isolated.  Flips persist
// in `d`; call reset_orientation() between independent probes.
std::optional<std::vector<int>> small_size_small_min_cut(
    DirectedCutGraph& d, int source_vertex, int k, int s, Rng& rng,
    ProbeStats* stats = nullptr);

// Wrapper: derive k, fall back to the exact contraction solver when the
// instance is small enough that the probe budget covers it anyway, otherwise
// run the probe from every vertex, repeat_factor*ceil_log2(n) times, and keep
// the best proper cut found.
Cut small_lambda_small_cut(const Hypergraph& g, int max_side,
                           std::uint64_t seed, int repeat_factor = 3);

// Bipartite incidence encoding: vertex nodes (infinite weight) on one side,
// edge nodes (weight 1) on the other, one edge per incidence.  Node-weighted
// separators here correspond to hypergraph cuts.
struct BipartiteIncidence {
  int num_hyper_vertices = 0, num_hyper_edges = 0;
  NodeWeightedGraph graph;

  int vertex_node(int v) const { return v; }
  int edge_node(int e) const { return num_hyper_vertices + e; }
  bool is_vertex_node(int node) const { return node < num_hyper_vertices; }
  int node_count() const { return num_hyper_vertices + num_hyper_edges; }
};

BipartiteIncidence build_bipartite(const Hypergraph& g);

struct Separator {
  std::vector<int> left, cut, right;  // disjoint node sets, no left-right edge
  std::uint64_t weight = 0;
};

// The separator induced by a hypergraph cut: left holds the side's vertex
// nodes plus its internal edge nodes, cut holds the crossing edge nodes.
Separator separator_from_cut(const Hypergraph& g, const BipartiteIncidence& b,
                             std::span<const int> side);

// Inverse direction; requires the removed nodes to be edge nodes.  The
// returned capacity is re-evaluated on the hypergraph.
Cut cut_from_separator(const Hypergraph& g, const BipartiteIncidence& b,
                       const Separator& sep);

// A compressed neighborhood of source vertex-node x: a sampled far set is
// contracted into one terminal, common x/terminal neighbors are recorded and
// removed, and everything irrelevant to x-terminal separation is deleted.
struct Kernel {
  NodeWeightedGraph graph;      // kernel-local ids
  std::vector<int> node_ids;    // kernel node -> node id in B; -1 = terminal
  int source = -1;              // kernel-local x
  int target = -1;              // kernel-local terminal
  int x_node = -1;              // x's node id in B
  std::vector<int> absorbed;    // removed common neighbors (node ids in B)
  bool degenerate = false;      // sampled far set was empty
  int vertex_node_count = 0;    // kernel nodes from the vertex side
  long long edge_count = 0;
};

// One shared random node sample (each node with probability 1/(8*scale)),
// then one kernel per requested source vertex.
std::vector<Kernel> find_kernels(const BipartiteIncidence& b,
                                 const std::vector<int>& source_vertices,
                                 std::uint64_t scale, std::uint64_t seed);

struct KernelSeparator {
  std::uint64_t weight = 0;
  std::vector<int> cut_nodes;  // kernel-local, all finite-weight
};

// Minimum-weight node separator between the kernel's source and terminal via
// node-split max flow.  Throws Unbounded if only infinite-weight nodes could
// separate them.
KernelSeparator kernel_min_separator(const Kernel& kernel);

// Kernelization wrapper: sweep the sample-scale grid with repetitions, solve
// each small-enough kernel exactly, lift each separator back (adding the
// absorbed common neighbors) and keep the cheapest resulting cut.
Cut big_lambda_small_cut(const Hypergraph& g, int max_side, std::uint64_t seed,
                         int repeat_factor = 3);

// Dispatcher: connectivity estimate decides between the directed-probe path
// and the kernelization path; any NoCutFound falls back to the exact solver.
Cut small_size_min_cut(const Hypergraph& g, int max_side, std::uint64_t seed,
                       int repeat_factor = 3);

struct ScratchCheck {
  std::uint64_t budget = 0;       // t
  long long log_mn = 0;           // ceil_log2(m+n)
  long long low_degree_nodes = 0; // |{v in cut : deg(v) <= 8t}|
  bool cut_size_ok = false;       // |cut| <= t
  bool left_size_ok = false;      // 100 |left| log(m+n) <= t
  bool low_degree_ok = false;     // low_degree_nodes >= 300 |left| log(m+n)
  bool is_scratch = false;
};

// Budgeted-separator shape test used by the kernelization analysis.
ScratchCheck check_scratch(const BipartiteIncidence& b, const Separator& sep,
                           std::uint64_t budget);

// Membership counts for every vertex subset (of size <= max_size) that sits
// inside some hyperedge: containing[S] = #{e : S subset of e}; edge_copies[S]
// counts hyperedges exactly equal to S (0/1 on simple inputs).  Keys are
// canonical sorted tuples; an absent key means zero.
struct SubsetCounts {
  std::map<VertexSet, long long> containing;
  std::map<VertexSet, long long> edge_copies;
};

SubsetCounts subset_counts(const Hypergraph& g, int max_size);

// Exact bounded-side min cut from membership counts alone: for every S with
// 1 <= |S| <= max_side, |delta(S)| is recovered by inclusion-exclusion over
// the subsets of S, and the argmin side is returned.  Cost grows like
// C(n, max_side) * 4^max_side, so max_side is capped by size_limit.
Cut exhaustive_small_min_cut(const Hypergraph& g, int max_side,
                             int size_limit = 4);

}  // namespace hypercut
