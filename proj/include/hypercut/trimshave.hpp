#pragma once

#include <vector>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Per-vertex bookkeeping for a block assignment, built in one pass over the
// hyperedges: global degree, degree counting only edges fully inside the
// vertex's block, and the ids of those internal edges.
struct TrimShaveData {
  std::vector<int> part;       // vertex -> block index, -1 if unassigned
  std::vector<int> degree;     // d(v)
  std::vector<int> degree_in;  // d_X(v), X = own block
  std::vector<std::vector<int>> internal_edges;  // per vertex
};

TrimShaveData trim_shave_helper(const Hypergraph& g,
                                const VertexPartition& parts);

// Repeatedly discard vertices whose within-block degree has fallen below
// d(v)/(2r), smallest vertex id first, until none remain.  The result is the
// unique fixed point.  Emptied blocks are dropped.
VertexPartition trim(const Hypergraph& g, const VertexPartition& parts);

// One-shot filter: keep v only while d_X(v) > (1 - 1/r^2) * d(v), with d_X
// measured against the blocks as given (removals in this round do not feed
// back).  Emptied blocks are dropped.
VertexPartition shave(const Hypergraph& g, const VertexPartition& parts);

// shave composed `rounds` times, recomputing within-block degrees each round.
VertexPartition shave_rounds(const Hypergraph& g, const VertexPartition& parts,
                             int rounds);

struct TrimShaveClaims {
  // X' = trim(X), X'' = shave(X')
  long long within_x = 0, within_trimmed = 0, within_shaved = 0;
  long long boundary_x = 0, boundary_trimmed = 0, boundary_shaved = 0;
  bool trim_loss_ok = false;      // |E[X]| - |E[X']| <= |boundary(X)|
  bool trim_boundary_ok = false;  // |boundary(X')| <= 2 |boundary(X)|
  bool shave_loss_ok = false;     // |E[X']| - |E[X'']| <= r^2 (r-1) |boundary(X')|
  bool shave_boundary_ok = false; // |boundary(X'')| <= r^3 |boundary(X')|
};

// Unconditional bounds on how much one trim pass and one follow-up shave pass
// can erode a single vertex set X.
TrimShaveClaims check_trim_shave_claims(const Hypergraph& g,
                                        const VertexSet& block);

}  // namespace hypercut
