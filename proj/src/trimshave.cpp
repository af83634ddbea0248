#include "hypercut/trimshave.hpp"

#include <algorithm>
#include <set>

namespace hypercut {

namespace {

std::vector<int> part_of(const Hypergraph& g, const VertexPartition& parts) {
  std::vector<int> part(g.num_vertices(), -1);
  for (int b = 0; b < static_cast<int>(parts.blocks.size()); ++b) {
    const auto& block = parts.blocks[b];
    if (block.empty()) fail(ErrorCode::EmptyBlock, "empty block");
    validate_vertex_set(g, block, "block");
    for (int v : block) {
      if (part[v] != -1)
        fail(ErrorCode::OverlappingBlocks, "vertex in two blocks");
      part[v] = b;
    }
  }
  return part;
}

VertexPartition collect_blocks(const std::vector<int>& part, int num_blocks) {
  std::vector<VertexSet> blocks(num_blocks);
  for (int v = 0; v < static_cast<int>(part.size()); ++v)
    if (part[v] >= 0) blocks[part[v]].push_back(v);
  VertexPartition result;
  for (auto& b : blocks)
    if (!b.empty()) result.blocks.push_back(std::move(b));
  return result;
}

long long boundary_count(const Hypergraph& g, const std::vector<char>& in) {
  long long count = 0;
  for (const auto& e : g.edges()) {
    bool has_in = false, has_out = false;
    for (int v : e) (in[v] ? has_in : has_out) = true;
    if (has_in && has_out) ++count;
  }
  return count;
}

long long within_count(const Hypergraph& g, const std::vector<char>& in) {
  long long count = 0;
  for (const auto& e : g.edges()) {
    bool inside = true;
    for (int v : e)
      if (!in[v]) { inside = false; break; }
    if (inside) ++count;
  }
  return count;
}

}  // namespace

TrimShaveData trim_shave_helper(const Hypergraph& g,
                                const VertexPartition& parts) {
  TrimShaveData data;
  data.part = part_of(g, parts);
  data.degree.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) data.degree[v] = g.degree(v);
  data.degree_in.assign(g.num_vertices(), 0);
  data.internal_edges.assign(g.num_vertices(), {});
  for (int e = 0; e < g.num_edges(); ++e) {
    auto edge = g.edge(e);
    int block = data.part[edge[0]];
    if (block < 0) continue;
    bool internal = true;
    for (int v : edge)
      if (data.part[v] != block) { internal = false; break; }
    if (!internal) continue;
    for (int v : edge) {
      ++data.degree_in[v];
      data.internal_edges[v].push_back(e);
    }
  }
  return data;
}

VertexPartition trim(const Hypergraph& g, const VertexPartition& parts) {
  auto data = trim_shave_helper(g, parts);
  long long two_r = 2LL * std::max(g.rank(), 2);

  auto weak = [&](int v) {
    return data.part[v] >= 0 &&
           two_r * data.degree_in[v] < static_cast<long long>(data.degree[v]);
  };

  std::set<int> worklist;  // smallest id first
  for (int v = 0; v < g.num_vertices(); ++v)
    if (weak(v)) worklist.insert(v);

  std::vector<char> edge_internal(g.num_edges(), 0);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int e : data.internal_edges[v]) edge_internal[e] = 1;

  while (!worklist.empty()) {
    int v = *worklist.begin();
    worklist.erase(worklist.begin());
    data.part[v] = -1;
    for (int e : data.internal_edges[v]) {
      if (!edge_internal[e]) continue;
      edge_internal[e] = 0;
      for (int u : g.edge(e)) {
        if (u == v || data.part[u] < 0) continue;
        --data.degree_in[u];
        if (weak(u)) worklist.insert(u);
      }
    }
  }
  return collect_blocks(data.part, static_cast<int>(parts.blocks.size()));
}

VertexPartition shave(const Hypergraph& g, const VertexPartition& parts) {
  auto data = trim_shave_helper(g, parts);
  long long r = std::max(g.rank(), 2);
  long long r2 = r * r;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (data.part[v] < 0) continue;
    // keep only while d_X(v) > (1 - 1/r^2) d(v)
    if (r2 * data.degree_in[v] <= (r2 - 1) * static_cast<long long>(data.degree[v]))
      data.part[v] = -1;
  }
  return collect_blocks(data.part, static_cast<int>(parts.blocks.size()));
}

VertexPartition shave_rounds(const Hypergraph& g, const VertexPartition& parts,
                             int rounds) {
  if (rounds < 0) fail(ErrorCode::BadParams, "negative shave rounds");
  VertexPartition current = parts;
  for (int i = 0; i < rounds && !current.blocks.empty(); ++i)
    current = shave(g, current);
  return current;
}

TrimShaveClaims check_trim_shave_claims(const Hypergraph& g,
                                        const VertexSet& block) {
  validate_vertex_set(g, block, "block");
  long long r = std::max(g.rank(), 2);

  auto mask = [&](const std::vector<VertexSet>& blocks) {
    std::vector<char> in(g.num_vertices(), 0);
    for (const auto& b : blocks)
      for (int v : b) in[v] = 1;
    return in;
  };

  VertexPartition start;
  if (!block.empty()) start.blocks.push_back(block);
  VertexPartition trimmed = block.empty() ? start : trim(g, start);
  VertexPartition shaved =
      trimmed.blocks.empty() ? trimmed : shave(g, trimmed);

  auto in_x = mask(start.blocks);
  auto in_t = mask(trimmed.blocks);
  auto in_s = mask(shaved.blocks);

  TrimShaveClaims claims;
  claims.within_x = within_count(g, in_x);
  claims.within_trimmed = within_count(g, in_t);
  claims.within_shaved = within_count(g, in_s);
  claims.boundary_x = boundary_count(g, in_x);
  claims.boundary_trimmed = boundary_count(g, in_t);
  claims.boundary_shaved = boundary_count(g, in_s);

  claims.trim_loss_ok =
      claims.within_x - claims.within_trimmed <= claims.boundary_x;
  claims.trim_boundary_ok = claims.boundary_trimmed <= 2 * claims.boundary_x;
  claims.shave_loss_ok = claims.within_trimmed - claims.within_shaved <=
                         r * r * (r - 1) * claims.boundary_trimmed;
  claims.shave_boundary_ok =
      claims.boundary_shaved <= r * r * r * claims.boundary_trimmed;
  return claims;
}

}  // namespace hypercut
