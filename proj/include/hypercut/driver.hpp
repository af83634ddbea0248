#pragma once

#include <cstdint>
#include <vector>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Exact pipeline: estimate connectivity, sparsify to a certificate at that
// level, solve the certificate by repeated contraction, and re-price the
// returned side on the input.
Cut cx_min_cut(const Hypergraph& g);

// Decomposition pipeline: certificate -> expander decomposition at a
// degree-derived conductance threshold -> trim -> 3r^2 shave rounds ->
// contract the surviving blocks -> exact pipeline on the contraction ->
// lift the side back and re-price it on the input.
Cut exp_decomp_min_cut(const Hypergraph& g, std::uint64_t seed);

struct MinCutOptions {
  std::uint64_t seed = 0;
  int repeat_factor = 3;
  // Test hook: run the two-branch path even when the connectivity estimate
  // is small enough for the exact pipeline alone.
  bool force_large_branch = false;
};

// Top-level solver: exact route for small connectivity estimates, otherwise
// the better of the bounded-side search and the decomposition pipeline,
// ties going to the bounded-side result.
Cut min_cut(const Hypergraph& g, const MinCutOptions& options = {});

// Structural measurements over the full min-cut enumeration (oracle scale
// only): cut sizes, the union of all min-cut edge sets, and the size-gap
// predicate that every min cut is either very small or polynomially large.
struct StructuralReport {
  long long lambda = 0;
  long long num_edges = 0;
  int rank = 2;
  std::vector<int> min_cut_sizes;  // min(|C|, n-|C|) per min cut, sorted
  long long union_size = 0;        // |union of delta(C) over min cuts|
  double small_size_bound = 0.0;   // r - log2(lambda/4r)/log2(n)
  bool has_small_min_cut = false;  // some size <= small_size_bound
  double union_ratio = 0.0;        // union_size / (m * lambda^{-1/(r-1)})
  bool gap_hypothesis = false;     // lambda >= r * 2^(r+1)
  double gap_low = 0.0;            // = small_size_bound
  double gap_high = 0.0;           // (lambda/2)^(1/r)
  bool gap_holds = false;          // no size strictly inside (gap_low, gap_high)
};

StructuralReport structural_report(const Hypergraph& g);

}  // namespace hypercut
