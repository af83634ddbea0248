#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

// Text format: header line "m n", then m lines each listing one hyperedge as
// 1-based vertex ids.  Lines starting with '%' are comments; blank lines are
// ignored.  Vertex ids are 0-based everywhere inside the library and 1-based
// only in this format.
Hypergraph read_hgr(std::istream& in, bool allow_multi = false,
                    bool drop_small = false);
Hypergraph read_hgr_file(const std::string& path, bool allow_multi = false,
                         bool drop_small = false);

void write_hgr(std::ostream& out, const Hypergraph& g);
void write_hgr_file(const std::string& path, const Hypergraph& g);

// One solver invocation, serialized with sorted keys so identical runs give
// byte-identical output.
struct ResultRecord {
  std::string algorithm;
  long long lambda = 0;
  VertexSet side;
  std::optional<std::uint64_t> seed;
  double wall_ms = 0.0;
  std::map<std::string, std::string> params;
};

std::string to_json(const ResultRecord& record);

}  // namespace hypercut
