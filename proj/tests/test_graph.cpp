#include <sstream>

#include "ccdh/graph.hpp"
#include "ccdh/synth.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ccdh;

TEST_CASE("edge list ingestion") {
  SUBCASE("comments and plain edges") {
    std::istringstream in("# c\n0 1\n1 2\n");
    auto g = load_edge_list(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
  }
  SUBCASE("duplicates and self-loops dropped by default") {
    std::istringstream in("0 1\n1 0\n2 2\n");
    IngestSummary sum;
    auto g = load_edge_list(in, {}, &sum);
    CHECK(g.vertex_count() == 3);  // id 2 seen on the dropped self-loop
    CHECK(g.edge_count() == 1);
    CHECK(sum.self_loops_dropped == 1);
    CHECK(sum.duplicates_dropped == 1);
  }
  SUBCASE("empty input with n_override") {
    std::istringstream in("");
    auto g = load_edge_list(in, {.n_override = 5});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("malformed line reports its number") {
    std::istringstream in("0 1\nnope\n");
    CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("line 2"),
                         ParseError);
  }
  SUBCASE("three fields rejected") {
    std::istringstream in("0 1 7\n");
    CHECK_THROWS_AS(load_edge_list(in), ParseError);
  }
  SUBCASE("id beyond n_override") {
    std::istringstream in("0 9\n");
    CHECK_THROWS_AS(load_edge_list(in, {.n_override = 5}), BoundsError);
  }
  SUBCASE("strict modes reject instead of dropping") {
    std::istringstream loop("1 1\n");
    IngestOptions strict_loops;
    strict_loops.drop_self_loops = false;
    CHECK_THROWS_AS(load_edge_list(loop, strict_loops), ParseError);
    std::istringstream dup("0 1\n1 0\n");
    IngestOptions strict_dups;
    strict_dups.dedupe = false;
    CHECK_THROWS_AS(load_edge_list(dup, strict_dups), ParseError);
  }
}

TEST_CASE("degree_array and active_vertex_count") {
  auto path = gen_path(3);
  CHECK(degree_array(path) == std::vector<std::uint64_t>{1, 2, 1});
  auto star = gen_star(5);
  CHECK(degree_array(star) == std::vector<std::uint64_t>{5, 1, 1, 1, 1, 1});
  auto empty = Graph::from_edges(4, {});
  CHECK(degree_array(empty) == std::vector<std::uint64_t>{0, 0, 0, 0});

  std::istringstream in("0 1\n1 2\n");
  auto path_in_5 = load_edge_list(in, {.n_override = 5});
  CHECK(active_vertex_count(path_in_5) == 3);
  CHECK(active_vertex_count(Graph::from_edges(7, {})) == 0);
  CHECK(active_vertex_count(gen_matching(5)) == 10);
}

TEST_CASE("graph invariants hold on random graphs") {
  SeededRng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::uint64_t n = 2 + rng.uniform_below(60);
    auto g = gen_gnp(n, 0.15, rng);
    auto deg = degree_array(g);
    std::uint64_t sum = 0;
    for (auto d : deg) sum += d;
    CHECK(sum == 2 * g.edge_count());
    CHECK(active_vertex_count(g) <= 2 * g.edge_count());
    CHECK(active_vertex_count(g) <= g.vertex_count());
    CHECK(deg == oracles::degrees_by_edge_scan(g));
    // adjacency consistent with the edge array
    for (const auto& e : g.edges()) {
      CHECK(g.has_edge(e.u, e.v));
      CHECK(g.has_edge(e.v, e.u));
    }
  }
}

TEST_CASE("edge-list round trip is idempotent") {
  SeededRng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = gen_gnp(2 + rng.uniform_below(50), 0.2, rng);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    auto h = load_edge_list(in, {.n_override = g.vertex_count()});
    CHECK(g == h);
  }
}

TEST_CASE("rejects malformed edge sets") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), ParamError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ParamError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), ParamError);
  auto g = gen_path(3);
  CHECK_THROWS_AS(g.degree(3), BoundsError);
}
