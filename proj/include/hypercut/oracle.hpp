#pragma once

#include <cstdint>
#include <vector>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Exhaustive reference solvers.  Everything here is deliberately independent
// of the real algorithms: plain subset enumeration, no shared shortcuts, so
// the fast paths can be checked against these on small instances.

inline constexpr int kOracleVertexLimit = 18;

struct MinCutEnumeration {
  long long capacity = 0;
  // Every minimum-cut side, canonicalized to contain vertex 0, in a fixed
  // enumeration order.
  std::vector<VertexSet> sides;
};

MinCutEnumeration brute_min_cut(const Hypergraph& g,
                                int limit = kOracleVertexLimit);

// Minimum capacity over sides C with 1 <= |C| <= max_side (C itself small,
// not just min{|C|, n-|C|}).
Cut brute_min_s_cut(const Hypergraph& g, int max_side,
                    int limit = kOracleVertexLimit);

struct ConductanceSplit {
  double value = 0.0;
  VertexSet side;             // argmin S
  long long crossing = 0;     // |E^o(S, X\S)|
  long long min_volume = 0;   // min{vol(S), vol(X\S)}, global degrees
};

// min over nonempty S strictly inside X of |E^o(S,X\S)| / min{vol(S),vol(X\S)}.
// Splits with a zero-volume side carry no information and are skipped.
ConductanceSplit brute_conductance(const Hypergraph& g,
                                   std::span<const int> block,
                                   int limit = kOracleVertexLimit);

struct MinCutUnion {
  long long capacity = 0;
  std::vector<int> edge_ids;  // union of delta(C) over all minimum cuts
};

MinCutUnion min_cut_union(const Hypergraph& g, int limit = kOracleVertexLimit);

// Undirected graph with node weights; nodes at or above `infinite` can never
// be removed by a separator.
struct NodeWeightedGraph {
  std::vector<std::vector<int>> adj;
  std::vector<std::uint64_t> weight;
  std::uint64_t infinite = 0;

  int size() const { return static_cast<int>(adj.size()); }
};

struct SeparatorChoice {
  std::uint64_t weight = 0;
  std::vector<int> nodes;  // removed node ids, sorted
};

// Cheapest finite-weight node set whose removal disconnects x from every node
// in `forbidden` (possibly empty, weight 0).  Throws Unbounded when no
// finite-weight subset works.
SeparatorChoice brute_min_separator(const NodeWeightedGraph& g, int x,
                                    const std::vector<int>& forbidden,
                                    int candidate_limit = 18);

}  // namespace hypercut
