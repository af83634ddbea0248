#include <doctest.h>

#include <sstream>

#include "hypercut/generators.hpp"
#include "hypercut/io.hpp"
#include "hypercut/rng.hpp"
#include "test_util.hpp"

using namespace hypercut;
using testutil::expect_error;

namespace {

Hypergraph parse(const std::string& text, bool allow_multi = false,
                 bool drop_small = false) {
  std::istringstream in(text);
  return read_hgr(in, allow_multi, drop_small);
}

std::string render(const Hypergraph& g) {
  std::ostringstream out;
  write_hgr(out, g);
  return out.str();
}

}  // namespace

TEST_CASE("read_hgr parses the m-n header and 1-based members") {
  Hypergraph g = parse("1 2\n1 2\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.edge(0)[0] == 0);
  CHECK(g.edge(0)[1] == 1);

  Hypergraph k43 = parse("4 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
  CHECK(k43.num_edges() == 4);
  CHECK(k43.rank() == 3);
  CHECK(k43.total_size() == 12);
}

TEST_CASE("read_hgr skips comments and blank lines") {
  Hypergraph g = parse("% header comment\n\n2 3\n1 2\n\n% mid\n2 3\n");
  CHECK(g.num_edges() == 2);
  CHECK(g.num_vertices() == 3);
}

TEST_CASE("read_hgr rejects malformed input") {
  expect_error([] { parse(""); }, ErrorCode::ParseError);
  expect_error([] { parse("1\n"); }, ErrorCode::ParseError);
  expect_error([] { parse("2 2\n1 2\n"); }, ErrorCode::ParseError);  // missing edge
  expect_error([] { parse("1 2\n1 x\n"); }, ErrorCode::ParseError);
  expect_error([] { parse("1 2\n1 3\n"); }, ErrorCode::ParseError);  // id range
  expect_error([] { parse("1 2\n1 2\nleftover\n"); }, ErrorCode::ParseError);
  // duplicate edges surface the core error, not a parse error
  expect_error([] { parse("2 3\n1 2\n1 2\n"); },
               ErrorCode::DuplicateHyperedge);
}

TEST_CASE("read_hgr honors multi and drop-small switches") {
  Hypergraph multi = parse("2 3\n1 2\n1 2\n", true);
  CHECK(multi.num_edges() == 2);
  CHECK(multi.is_multi());

  expect_error([] { parse("1 3\n2\n"); }, ErrorCode::SingletonHyperedge);
  Hypergraph dropped = parse("2 3\n2\n1 3\n", false, true);
  CHECK(dropped.num_edges() == 1);
}

TEST_CASE("write_hgr emits the canonical text form") {
  Hypergraph g = testutil::make(3, {{2, 0}, {1, 2}});
  CHECK(render(g) == "2 3\n1 3\n2 3\n");
  Hypergraph empty = testutil::make(4, {});
  CHECK(render(empty) == "0 4\n");
}

TEST_CASE("hgr round trip preserves the canonical form") {
  Rng rng(7);
  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng.below(10));
    int m = testutil::feasible_m(
        n, 4, static_cast<int>(rng.below(3 * static_cast<std::uint64_t>(n))));
    Hypergraph g = gen_random(n, 4, m, rng.next_u64());
    Hypergraph back = parse(render(g));
    CHECK(back.num_vertices() == g.num_vertices());
    CHECK(back.edges() == g.edges());
    CHECK(render(back) == render(g));
  }
}

TEST_CASE("result records serialize with stable key order") {
  ResultRecord rec;
  rec.algorithm = "slow";
  rec.lambda = 3;
  rec.side = {0, 2};
  rec.wall_ms = 1.5;
  rec.params["s"] = "2";
  CHECK(to_json(rec) ==
        R"({"algorithm":"slow","lambda":3,"params":{"s":"2"},"seed":null,)"
        R"("side":[0,2],"wall_ms":1.5})");

  rec.seed = 42;
  rec.params.clear();
  CHECK(to_json(rec) ==
        R"({"algorithm":"slow","lambda":3,"params":{},"seed":42,)"
        R"("side":[0,2],"wall_ms":1.5})");
}
