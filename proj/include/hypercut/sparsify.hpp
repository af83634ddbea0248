#pragma once

#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Connectivity certificate: k greedy rounds, each keeping hyperedges (scanned
// in input order) that still join two components of the union-find built from
// that round's kept edges.  The result is a sub-hypergraph with at most
// k*(n-1) edges satisfying, for every cut C,
//   |delta_certificate(C)| >= min(k, |delta(C)|).
Hypergraph certificate(const Hypergraph& g, int k);

// Exact connectivity by doubling: run the exact solver on certificates with
// k = 1, 2, 4, ... until the certificate's min cut drops below k, at which
// point that value is the true connectivity lambda.  Returns lambda + 1 (a
// value strictly above lambda and at most 3*lambda), or 0 when the input is
// disconnected; callers treat 0 as a sentinel.
int approximate_connectivity(const Hypergraph& g);

}  // namespace hypercut
