#pragma once

#include <cstdint>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

// m distinct hyperedges with sizes uniform in [2, min(r, n)] and members
// sampled without replacement; duplicates are rejection-sampled away.
Hypergraph gen_random(int n, int r, int m, std::uint64_t seed);

struct PlantedInstance {
  Hypergraph graph;
  VertexSet side;          // the planted smaller side {0 .. s-1}
  long long capacity = 0;  // its cut capacity (= lam)
};

// Hypergraph whose unique minimum cut is a planted side of size s crossed by
// exactly `lam` hyperedges.  Both sides are densified in stages until every
// competing cut is strictly more expensive; the result is verified before
// returning (full enumeration at oracle scale, the contraction solver above
// it).  Throws Infeasible when no densification can protect the plant.
PlantedInstance gen_planted_small_cut(int n, int r, int s, int lam,
                                      std::uint64_t seed);

// Fixed 5-uniform family on n+3 vertices (n even): pair edges {u_i, v_i}
// plus, for every two pairs, three hyperedges joining them through one of
// three shared hub vertices.  Every minimum cut isolates one pair, so no min
// cut is a single vertex.  Guarantees hold for n >= 100.
Hypergraph gen_nontrivial_example(int n);

// Two-level r-uniform family on n = q*q vertices (q = sqrt(n) >= r+1): a
// complete r-uniform outer hypergraph over q groups with each outer slot
// assigned round-robin inside its group, plus a complete r-uniform hypergraph
// inside every group.  Every minimum cut is one whole group.
Hypergraph gen_tight_example(int n, int r);

// All C(n, r) hyperedges of size exactly r.
Hypergraph gen_complete_uniform(int n, int r);

}  // namespace hypercut
