#include "hypercut/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hypercut {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

// Next meaningful line (skips blanks and '%' comments); returns false at EOF.
bool next_line(std::istream& in, std::string& out, int& line_no) {
  while (std::getline(in, out)) {
    ++line_no;
    auto first = out.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (out[first] == '%') continue;
    return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::istringstream stream(line);
  std::vector<long long> values;
  std::string token;
  while (stream >> token) {
    try {
      size_t used = 0;
      long long value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(value);
    } catch (const std::exception&) {
      parse_fail(line_no, "expected integer, got '" + token + "'");
    }
  }
  return values;
}

}  // namespace

Hypergraph read_hgr(std::istream& in, bool allow_multi, bool drop_small) {
  int line_no = 0;
  std::string line;
  if (!next_line(in, line, line_no))
    fail(ErrorCode::ParseError, "empty input, missing header");
  auto header = parse_ints(line, line_no);
  if (header.size() != 2)
    parse_fail(line_no, "header must be 'm n'");
  long long m = header[0], n = header[1];
  if (m < 0 || n < 0) parse_fail(line_no, "negative count in header");
  if (n > 100'000'000) parse_fail(line_no, "implausible vertex count");

  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, line_no))
      parse_fail(line_no, "expected " + std::to_string(m) + " hyperedges, got " +
                              std::to_string(i));
    auto ids = parse_ints(line, line_no);
    if (ids.empty()) parse_fail(line_no, "empty hyperedge line");
    std::vector<int> edge;
    edge.reserve(ids.size());
    for (long long id : ids) {
      if (id < 1 || id > n)
        parse_fail(line_no, "vertex id " + std::to_string(id) +
                                " outside [1," + std::to_string(n) + "]");
      edge.push_back(static_cast<int>(id - 1));
    }
    edges.push_back(std::move(edge));
  }
  if (next_line(in, line, line_no))
    parse_fail(line_no, "trailing content after last hyperedge");
  return Hypergraph::build(static_cast<int>(n), std::move(edges), allow_multi,
                           drop_small);
}

Hypergraph read_hgr_file(const std::string& path, bool allow_multi,
                         bool drop_small) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_hgr(in, allow_multi, drop_small);
}

void write_hgr(std::ostream& out, const Hypergraph& g) {
  out << g.num_edges() << ' ' << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i] + 1;
    }
    out << '\n';
  }
}

void write_hgr_file(const std::string& path, const Hypergraph& g) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for write");
  write_hgr(out, g);
}

std::string to_json(const ResultRecord& record) {
  nlohmann::json j;  // object keys serialize sorted
  j["algorithm"] = record.algorithm;
  j["lambda"] = record.lambda;
  j["side"] = record.side;
  if (record.seed)
    j["seed"] = *record.seed;
  else
    j["seed"] = nullptr;
  j["wall_ms"] = record.wall_ms;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : record.params) params[key] = value;
  j["params"] = params;
  return j.dump();
}

}  // namespace hypercut
