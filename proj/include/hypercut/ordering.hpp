#pragma once

#include <vector>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

struct AdjacencyOrdering {
  std::vector<int> order;       // permutation of 0..n-1, order[0] == 0
  long long pendant_capacity = 0;  // degree of the last vertex = capacity of
                                   // the cut splitting it off
};

// Maximum-adjacency ordering: grow a prefix from vertex 0, always appending
// the vertex covered by the most already-activated hyperedges.  A hyperedge
// activates (counts toward every remaining member) the first time any of its
// vertices enters the prefix.  Ties break toward the smallest vertex id.
AdjacencyOrdering ma_ordering(const Hypergraph& g);

// Exact minimum cut in O(n) ordering rounds: each round splits off the last
// ordered vertex (recording the original vertices merged into it) and then
// contracts the final two positions.  Multiplicities from contractions are
// kept, so pendant degrees stay faithful.  Disconnected inputs short-circuit
// to a zero-capacity component cut.
Cut slow_min_cut(const Hypergraph& g);

}  // namespace hypercut
