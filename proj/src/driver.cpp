#include "hypercut/driver.hpp"

#include <algorithm>
#include <cmath>

#include "hypercut/expander.hpp"
#include "hypercut/numeric.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/ordering.hpp"
#include "hypercut/rng.hpp"
#include "hypercut/smallcut.hpp"
#include "hypercut/sparsify.hpp"
#include "hypercut/trimshave.hpp"

namespace hypercut {

Cut cx_min_cut(const Hypergraph& g) {
  if (g.num_vertices() < 2) fail(ErrorCode::TooSmall, "need at least 2 vertices");
  int k = approximate_connectivity(g);
  if (k == 0) return component_zero_cut(g, "cx");
  Cut cut = slow_min_cut(certificate(g, k));
  cut.capacity = cut_capacity(g, cut.side);
  cut.source = "cx";
  return cut;
}

Cut exp_decomp_min_cut(const Hypergraph& g, std::uint64_t seed) {
  int n = g.num_vertices();
  if (n < 2) fail(ErrorCode::TooSmall, "need at least 2 vertices");
  int k = approximate_connectivity(g);
  if (k == 0) return component_zero_cut(g, "exp-decomp");
  Hypergraph cert = certificate(g, k);
  int r = std::max(cert.rank(), 2);
  int min_deg = cert.min_degree();
  double phi = std::min(std::pow(6.0 * r * r / min_deg, 1.0 / (r - 1)),
                        1.0 / (r - 1));
  Decomposition dec =
      hypergraph_expander_decomposition(cert, phi, 14, derive_seed(seed, 1));
  VertexPartition parts = trim(cert, dec.partition);
  parts = shave_rounds(cert, parts, 3 * r * r);
  Contraction contraction = contract(cert, parts);
  if (contraction.graph.num_vertices() < 2) {
    // Everything collapsed into one super-vertex; the contraction carries no
    // cut at all, so solve the input directly.
    Cut cut = cx_min_cut(g);
    cut.source = "exp-decomp";
    return cut;
  }
  Cut inner = cx_min_cut(contraction.graph);
  std::vector<char> in(contraction.graph.num_vertices(), 0);
  for (int v : inner.side) in[v] = 1;
  Cut cut;
  for (int v = 0; v < n; ++v)
    if (in[contraction.vertex_map[v]]) cut.side.push_back(v);
  cut.capacity = cut_capacity(g, cut.side);
  cut.source = "exp-decomp";
  return cut;
}

Cut min_cut(const Hypergraph& g, const MinCutOptions& options) {
  int n = g.num_vertices();
  if (n < 2) fail(ErrorCode::TooSmall, "need at least 2 vertices");
  int k = approximate_connectivity(g);
  if (k == 0) return component_zero_cut(g, "min-cut");
  std::uint64_t r = std::max(g.rank(), 2);
  std::uint64_t shortcut = sat_mul(3 * r, sat_pow(4 * r * r, r));
  if (!options.force_large_branch && static_cast<std::uint64_t>(k) <= shortcut)
    return cx_min_cut(g);

  Hypergraph cert = certificate(g, k);
  double s_value =
      static_cast<double>(r) -
      std::log2(static_cast<double>(k) / (12.0 * static_cast<double>(r))) /
          std::log2(static_cast<double>(n));
  int s = static_cast<int>(std::floor(s_value));
  s = std::clamp(s, 1, std::max(1, n / 2));

  Cut side_bounded = small_size_min_cut(cert, s, derive_seed(options.seed, 1),
                                        options.repeat_factor);
  Cut decomposed = exp_decomp_min_cut(cert, derive_seed(options.seed, 2));
  side_bounded.capacity = cut_capacity(g, side_bounded.side);
  decomposed.capacity = cut_capacity(g, decomposed.side);
  return side_bounded.capacity <= decomposed.capacity ? side_bounded
                                                      : decomposed;
}

StructuralReport structural_report(const Hypergraph& g) {
  int n = g.num_vertices();
  MinCutEnumeration all = brute_min_cut(g);
  StructuralReport report;
  report.lambda = all.capacity;
  report.num_edges = g.num_edges();
  report.rank = std::max(g.rank(), 2);
  for (const auto& side : all.sides)
    report.min_cut_sizes.push_back(
        std::min<int>(static_cast<int>(side.size()),
                      n - static_cast<int>(side.size())));
  std::sort(report.min_cut_sizes.begin(), report.min_cut_sizes.end());
  report.union_size = static_cast<long long>(min_cut_union(g).edge_ids.size());

  double r = report.rank;
  if (report.lambda > 0) {
    report.small_size_bound =
        r - std::log2(report.lambda / (4.0 * r)) / std::log2(double(n));
    report.union_ratio =
        report.num_edges > 0
            ? report.union_size *
                  std::pow(double(report.lambda), 1.0 / (r - 1.0)) /
                  double(report.num_edges)
            : 0.0;
    report.gap_hypothesis =
        report.lambda >= static_cast<long long>(
                             sat_mul(report.rank, sat_pow(2, report.rank + 1)));
    report.gap_low = report.small_size_bound;
    report.gap_high = std::pow(report.lambda / 2.0, 1.0 / r);
  } else {
    // Disconnected input: every component split is a zero cut; the size
    // bound is vacuous.
    report.small_size_bound = double(n);
    report.gap_low = double(n);
    report.gap_high = 0.0;
  }
  report.has_small_min_cut = false;
  report.gap_holds = true;
  for (int size : report.min_cut_sizes) {
    if (size <= report.small_size_bound) report.has_small_min_cut = true;
    if (size > report.gap_low && size < report.gap_high)
      report.gap_holds = false;
  }
  return report;
}

}  // namespace hypercut
