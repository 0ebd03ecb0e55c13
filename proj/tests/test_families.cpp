#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "euler/cycles.hpp"
#include "euler/families.hpp"
#include "support.hpp"

using namespace euler;

TEST_CASE("cycle_graph") {
  Graph t = cycle_graph(3);
  CHECK(t == Graph::build(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(classify(cycle_graph(5)).epsilon == std::vector<int>{1});
  CHECK(classify(cycle_graph(8)).epsilon == std::vector<int>{0});
  CHECK_THROWS_AS(cycle_graph(2), Error);
}

TEST_CASE("block_cycle_graph") {
  Graph two5 = block_cycle_graph({5, 5});
  CHECK(two5.order() == 9);
  CHECK(is_eulerian(two5));
  CHECK(classify(two5).epsilon == std::vector<int>{1});

  CHECK(classify(block_cycle_graph({3, 7})).epsilon == std::vector<int>{3});
  CHECK(classify(block_cycle_graph({5, 3})).epsilon == std::vector<int>{1, 3});
  CHECK_THROWS_AS(block_cycle_graph({}), Error);
  CHECK_THROWS_AS(block_cycle_graph({5, 2}), Error);

  // Degrees stay 2 or 4 and consecutive blocks meet in exactly one node.
  Graph chain = block_cycle_graph({4, 5, 3, 6});
  CHECK(is_eulerian(chain));
  int quads = 0;
  for (int d : degree_sequence(chain)) {
    CHECK((d == 2 || d == 4));
    quads += d == 4;
  }
  CHECK(quads == 3);
  CHECK(classify(chain).epsilon == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("hypercube") {
  Graph square = hypercube(2);
  CHECK(square.order() == 4);
  CHECK(degree_sequence(square) == std::vector<int>{2, 2, 2, 2});
  CHECK(is_connected(square));

  Graph q4 = hypercube(4);
  CHECK(q4.order() == 16);
  CHECK(q4.size() == 32);
  for (int d : degree_sequence(q4)) CHECK(d == 4);
  CHECK(is_eulerian(q4));
  CHECK(is_bipartite(q4));

  Graph q3 = hypercube(3);
  for (int d : degree_sequence(q3)) CHECK(d == 3);
  CHECK(!is_eulerian(q3));

  CHECK_THROWS_AS(hypercube(0), Error);
  CHECK_THROWS_AS(hypercube(11), Error);
}

TEST_CASE("gts order and size formulas") {
  GtsLayout g43 = gts({4, 3});
  CHECK(g43.graph.order() == 32);
  CHECK(g43.graph.size() == 48);

  GtsLayout g12 = gts({1, 2});
  CHECK(g12.graph.order() == 6);
  CHECK(g12.graph.size() == 8);

  for (int t = 1; t <= 6; ++t)
    for (int s = 1; s <= 6; ++s) {
      GtsLayout layout = gts({t, s});
      CHECK(layout.graph.order() == 2 * t * (s + 1));
      CHECK(layout.graph.size() == 4 * t * s);
      CHECK(is_eulerian(layout.graph));
    }
  CHECK_THROWS_AS(gts({0, 1}), Error);
}

TEST_CASE("gts with s=1 is the plain ring") {
  for (int t = 1; t <= 4; ++t) {
    GtsLayout layout = gts({t, 1});
    CHECK(layout.graph.order() == 4 * t);
    CHECK(layout.graph.size() == 4 * t);
    for (int d : degree_sequence(layout.graph)) CHECK(d == 2);
    CHECK(is_connected(layout.graph));
  }
}

TEST_CASE("gts grid structure") {
  for (auto [t, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 2}, {4, 3}}) {
    GtsLayout layout = gts({t, s});
    REQUIRE(static_cast<int>(layout.grid.size()) == 2 * t);
    for (int r = 0; r < 2 * t; ++r) {
      REQUIRE(static_cast<int>(layout.grid[r].size()) == s + 1);
      int a = layout.grid[r][0];
      int b = layout.grid[(r + 1) % (2 * t)][0];
      CHECK(layout.graph.degree(a) == 2 * s);
      for (int j = 1; j <= s; ++j) {
        int mid = layout.grid[r][j];
        CHECK(layout.graph.degree(mid) == 2);
        CHECK(layout.graph.has_edge(mid, a));
        CHECK(layout.graph.has_edge(mid, b));
      }
    }
  }
}

TEST_CASE("gts profile stays in residue zero") {
  for (int t = 1; t <= 3; ++t)
    for (int s = 1; s <= 3; ++s) {
      auto profile = cycle_type_profile(gts({t, s}).graph);
      REQUIRE(!profile.truncated);
      CHECK(profile.residues() == std::vector<int>{0});
    }
}

TEST_CASE("attach_handle") {
  Graph host = cycle_graph(16);
  Graph grown = attach_handle(host, {0, 4, 4, 2});
  CHECK(grown.order() == 16 + 2 * 3);
  CHECK(grown.size() == 16 + 2 * 4);
  CHECK(grown.degree(0) == 4);
  CHECK(grown.degree(4) == 4);
  CHECK(is_eulerian(grown));
  CHECK(classify(grown).epsilon == std::vector<int>{0});

  Graph odd = attach_handle(cycle_graph(8), {0, 4, 4, 1});
  CHECK(odd.degree(0) == 3);
  CHECK(!is_eulerian(odd));
  CHECK(is_connected(odd));

  // Two length-2 paths on a 5-ring: 3 quads and 3 five-cycles appear.
  Graph c5h = attach_handle(cycle_graph(5), {0, 2, 2, 2});
  auto profile = cycle_type_profile(c5h);
  CHECK(profile.residues() == std::vector<int>{0, 1});
  CHECK(profile.counts[0] == 3);
  CHECK(profile.counts[1] == 3);
  auto census = testsupport::brute_cycle_census(c5h);
  CHECK(census == std::map<int, long long>{{4, 3}, {5, 3}});

  CHECK_THROWS_AS(attach_handle(host, {0, 0, 4, 1}), Error);
  CHECK_THROWS_AS(attach_handle(host, {0, 99, 4, 1}), Error);
  CHECK_THROWS_AS(attach_handle(host, {0, 1, 1, 1}), Error);  // edge exists
  CHECK_THROWS_AS(attach_handle(host, {0, 4, 1, 2}), Error);  // parallel edges
}

TEST_CASE("attach_handle degree delta") {
  Graph host = gts({2, 2}).graph;
  HandleSpec spec{0, 4, 4, 3};
  Graph grown = attach_handle(host, spec);
  for (int v = 0; v < host.order(); ++v) {
    int expect = host.degree(v) + ((v == spec.u || v == spec.v) ? spec.count : 0);
    CHECK(grown.degree(v) == expect);
  }
}

TEST_CASE("parallel paths create the doubled cycle") {
  for (int m = 2; m <= 5; ++m)
    for (int count = 2; count <= 4; ++count) {
      Graph host = cycle_graph(4 * m);
      Graph grown = attach_handle(host, {0, m, m, count});
      auto en = enumerate_simple_cycles(grown);
      REQUIRE(!en.truncated);
      bool found = false;
      for (const Cycle& c : en.cycles) found = found || cycle_length(c) == 2 * m;
      CHECK(found);
    }
}

TEST_CASE("handle parity preserves or breaks Eulerianness") {
  Graph host = cycle_graph(12);
  CHECK(is_eulerian(attach_handle(host, {0, 4, 4, 2})));
  CHECK(!is_eulerian(attach_handle(host, {0, 4, 4, 3})));
  CHECK(is_eulerian(attach_handle(host, {0, 4, 4, 4})));
}

TEST_CASE("validate_class_membership") {
  MembershipReport ok = validate_class_membership(gts({2, 2}).graph, {0});
  CHECK(ok.eulerian);
  CHECK(ok.member);

  Graph c6h = attach_handle(cycle_graph(6), {0, 3, 3, 2});
  MembershipReport even = validate_class_membership(c6h, {2});
  CHECK(even.eulerian);
  CHECK(even.member);

  MembershipReport wrong = validate_class_membership(cycle_graph(5), {0});
  CHECK(!wrong.member);
  CHECK(wrong.profile.residues() == std::vector<int>{1});

  Graph two = Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_THROWS_AS(validate_class_membership(two, {3}), Error);
}

TEST_CASE("repeatability_check") {
  // Length-4 handles across distance 4 of a long ring stay in residue 0.
  CHECK(repeatability_check(cycle_graph(16), {0, 4, 4, 2}, {0}));

  // A length-3 handle on a {0,3} host cannot repeat: two parallel length-3
  // paths close a 6-cycle.
  Graph host03 = block_cycle_graph({4, 3});
  REQUIRE(classify(host03).epsilon == std::vector<int>{0, 3});
  CHECK(!repeatability_check(host03, {0, 2, 3, 2}, {0, 3}));

  // A length-4 handle on a {1,2} host cannot repeat: an 8-cycle appears.
  Graph host12 = block_cycle_graph({5, 6});
  REQUIRE(classify(host12).epsilon == std::vector<int>{1, 2});
  CHECK(!repeatability_check(host12, {0, 2, 4, 2}, {1, 2}));
}
