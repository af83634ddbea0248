#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Undirected multigraph (parallel edges meaningful, no self-loops).
struct Multigraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> incident;  // vertex -> edge ids
  std::vector<int> degree;

  static Multigraph build(int n, std::vector<std::pair<int, int>> edges);
};

// Star expansion: every hyperedge becomes a star of plain edges from its
// smallest vertex to each other member.  Volumes only grow and any split of
// a vertex set loses at most a factor r-1 in crossing count, which is what
// lets graph blocks certify hypergraph blocks.
Multigraph star_expand(const Hypergraph& g);

struct Decomposition {
  VertexPartition partition;
  double phi = 0.0;
  long long crossing_edges = 0;
  // certified[i]: block i was verified exhaustively (small blocks).  Large
  // blocks that merely survived the heuristic splitter stay unflagged.
  std::vector<char> certified;
};

// Recursive certify-or-split partitioning of a multigraph: a block is kept
// when every internal split S has
//   cross(S, X\S) >= phi_prime * min(vol(S), vol(X\S))
// with volumes taken in the whole input graph.  Blocks up to exact_limit are
// checked by enumeration; larger blocks use a spectral sweep plus seeded
// local-improvement passes and recurse on the best split found below the
// threshold.
Decomposition graph_expander_decomposition(const Multigraph& g,
                                           double phi_prime,
                                           int exact_limit = 14,
                                           std::uint64_t seed = 0);

// Hypergraph version via star expansion at threshold (r-1)*phi.  Requires
// 0 < phi <= 1/(r-1).
Decomposition hypergraph_expander_decomposition(const Hypergraph& g, double phi,
                                                int exact_limit = 14,
                                                std::uint64_t seed = 0);

}  // namespace hypercut
