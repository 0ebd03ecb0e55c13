#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "euler/cycles.hpp"
#include "euler/families.hpp"
#include "euler/search.hpp"
#include "support.hpp"

using namespace euler;
using testsupport::complete_graph;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::build(g.order(), edges);
}

}  // namespace

TEST_CASE("canonical_form is invariant under relabeling") {
  std::mt19937 rng(31415);
  std::vector<Graph> samples{cycle_graph(4),      cycle_graph(6),    complete_graph(5),
                             testsupport::bowtie(), hypercube(3),    block_cycle_graph({4, 3}),
                             gts({1, 2}).graph};
  for (int i = 0; i < 60; ++i) samples.push_back(testsupport::random_graph(rng, 2, 9));
  for (const Graph& g : samples) {
    CanonicalForm base = canonical_form(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(g, perm)) == base);
    }
  }
}

TEST_CASE("canonical_form separates non-isomorphic graphs") {
  Graph two_triangles = Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(canonical_form(cycle_graph(6)) != canonical_form(two_triangles));

  // Removing any edge of the order-5 complete graph gives the same class.
  Graph k5 = complete_graph(5);
  std::vector<CanonicalForm> forms;
  for (auto [u, v] : k5.edges()) {
    std::vector<Edge> edges;
    for (auto e : k5.edges())
      if (e != Edge{u, v}) edges.push_back(e);
    forms.push_back(canonical_form(Graph::build(5, edges)));
  }
  for (const CanonicalForm& f : forms) CHECK(f == forms.front());

  CHECK(canonical_form(cycle_graph(5)) != canonical_form(complete_graph(5)));
  CHECK_THROWS_AS(canonical_form(hypercube(4)), Error);  // order 16 beyond the guard
}

TEST_CASE("enumerate_regular_graphs fixtures") {
  for (int n = 3; n <= 9; ++n) {
    auto graphs = enumerate_regular_graphs(n, 2, true);
    REQUIRE(graphs.size() == 1);
    CHECK(canonical_form(graphs[0]) == canonical_form(cycle_graph(n)));
  }
  auto k5 = enumerate_regular_graphs(5, 4, true);
  REQUIRE(k5.size() == 1);
  CHECK(canonical_form(k5[0]) == canonical_form(complete_graph(5)));

  CHECK(enumerate_regular_graphs(6, 4, true).size() == 1);

  CHECK_THROWS_AS(enumerate_regular_graphs(5, 3, true), Error);   // n*k odd
  CHECK_THROWS_AS(enumerate_regular_graphs(7, 7, true), Error);   // k >= n
  CHECK_THROWS_AS(enumerate_regular_graphs(12, 4, true), Error);  // beyond guard
  CHECK_THROWS_AS(enumerate_regular_graphs(11, 6, true), Error);  // beyond guard
}

TEST_CASE("enumeration is sound") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 4}, {8, 4}, {8, 5}, {9, 4}}) {
    auto graphs = enumerate_regular_graphs(n, k, true);
    std::set<CanonicalForm> forms;
    for (const Graph& g : graphs) {
      CHECK(g.order() == n);
      for (int d : degree_sequence(g)) CHECK(d == k);
      CHECK(is_connected(g));
      CHECK(forms.insert(canonical_form(g)).second);
    }
  }
}

TEST_CASE("enumeration is complete at tiny orders") {
  // Independent brute force: filter all labeled graphs by degree, bucket by
  // certificate.
  for (int n = 4; n <= 7; ++n) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    int pairs = static_cast<int>(all.size());
    std::map<int, std::set<std::uint64_t>> by_degree_connected;
    std::map<int, std::set<std::uint64_t>> by_degree_all;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<Edge> edges;
      for (int b = 0; b < pairs; ++b)
        if (mask & (1u << b)) edges.push_back(all[b]);
      Graph g = Graph::build(n, edges);
      auto deg = degree_sequence(g);
      if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) continue;
      CanonicalForm form = canonical_form(g);
      by_degree_all[deg[0]].insert(form.bits);
      if (is_connected(g)) by_degree_connected[deg[0]].insert(form.bits);
    }
    for (int k = 0; k < n; ++k) {
      if ((n * k) % 2 != 0) continue;
      CHECK(enumerate_regular_graphs(n, k, true).size() == by_degree_connected[k].size());
      CHECK(enumerate_regular_graphs(n, k, false).size() == by_degree_all[k].size());
    }
  }
}

TEST_CASE("regular graph counts match the published tables") {
  // Connected regular graph counts (Meringer's tables) as an external
  // cross-check.
  CHECK(enumerate_regular_graphs(7, 4, true).size() == 2);
  CHECK(enumerate_regular_graphs(8, 4, true).size() == 6);
  CHECK(enumerate_regular_graphs(9, 4, true).size() == 16);
  CHECK(enumerate_regular_graphs(8, 6, true).size() == 1);
  CHECK(enumerate_regular_graphs(9, 6, true).size() == 4);
  CHECK(enumerate_regular_graphs(9, 8, true).size() == 1);
}

TEST_CASE("theorem sweeps at small orders") {
  TheoremReport pure = check_theorem_pure_regular(8);
  CHECK(pure.consistent());
  CHECK(pure.instances > 0);

  TheoremReport two = check_theorem_two_types(8);
  CHECK(two.consistent());

  TheoremReport conj = check_conjecture_three_types(6, 8);
  CHECK(conj.consistent());
  bool confirmed = false;
  for (const std::string& note : conj.notes)
    confirmed = confirmed || note.find("{0,1,3}") != std::string::npos;
  CHECK(confirmed);

  CHECK_THROWS_AS(check_conjecture_three_types(5, 8), Error);
  CHECK_THROWS_AS(check_theorem_pure_regular(12), Error);
}

TEST_CASE("theorem seven composite over the same sweep") {
  // Any connected regular Euler graph with at most two cycle types is a
  // cycle graph or a bipartite graph of even degree above 2.
  for (int n = 3; n <= 8; ++n)
    for (int k = 2; k < n; k += 2)
      for (const Graph& g : enumerate_regular_graphs(n, k, true)) {
        auto [residues, truncated] = cycle_residues(g);
        REQUIRE(!truncated);
        if (residues.size() > 2) continue;
        bool cycle_graph_case = k == 2;
        bool bipartite_case = is_bipartite(g) && k > 2;
        CHECK((cycle_graph_case || bipartite_case));
      }
}

TEST_CASE("order 5 and 6 regular Euler graphs are exactly the known ones") {
  std::vector<CanonicalForm> order5;
  for (int k = 2; k < 5; k += 2)
    for (const Graph& g : enumerate_regular_graphs(5, k, true)) order5.push_back(canonical_form(g));
  REQUIRE(order5.size() == 2);
  CHECK(order5[0] == canonical_form(cycle_graph(5)));
  CHECK(order5[1] == canonical_form(complete_graph(5)));

  std::vector<Graph> order6;
  for (int k = 2; k < 6; k += 2)
    for (const Graph& g : enumerate_regular_graphs(6, k, true)) order6.push_back(g);
  REQUIRE(order6.size() == 2);
  CHECK(canonical_form(order6[0]) == canonical_form(cycle_graph(6)));
  CHECK(degree_sequence(order6[1]) == std::vector<int>(6, 4));
  // That degree-4 graph carries all four cycle types.
  CHECK(classify(order6[1]).epsilon == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("local_edge_connectivity") {
  Graph c6 = cycle_graph(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) CHECK(local_edge_connectivity(c6, u, v) == 2);

  Graph k5 = complete_graph(5);
  CHECK(local_edge_connectivity(k5, 0, 3) == 4);

  Graph bt = testsupport::bowtie();
  CHECK(local_edge_connectivity(bt, 1, 3) == 2);

  Graph path = Graph::build(3, {{0, 1}, {1, 2}});
  CHECK(local_edge_connectivity(path, 0, 2) == 1);
  Graph two = Graph::build(4, {{0, 1}, {2, 3}});
  CHECK(local_edge_connectivity(two, 0, 2) == 0);

  CHECK_THROWS_AS(local_edge_connectivity(c6, 0, 0), Error);
  CHECK_THROWS_AS(local_edge_connectivity(c6, 0, 9), Error);
}

TEST_CASE("connected even-graph catalog matches known counts") {
  CHECK(connected_euler_graphs(1).size() == 1);
  CHECK(connected_euler_graphs(2).empty());
  CHECK(connected_euler_graphs(3).size() == 1);
  CHECK(connected_euler_graphs(4).size() == 1);
  CHECK(connected_euler_graphs(5).size() == 4);
  CHECK(connected_euler_graphs(6).size() == 8);
  CHECK(connected_euler_graphs(7).size() == 37);
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : connected_euler_graphs(n)) {
      CHECK(is_eulerian(g));
      CHECK(g.order() == n);
    }
}

TEST_CASE("catalog generation agrees with the labeled brute force at order 6") {
  std::set<std::uint64_t> brute;
  std::vector<Edge> all;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) all.emplace_back(u, v);
  for (unsigned mask = 0; mask < (1u << 15); ++mask) {
    std::vector<Edge> edges;
    for (int b = 0; b < 15; ++b)
      if (mask & (1u << b)) edges.push_back(all[b]);
    Graph g = Graph::build(6, edges);
    if (!is_eulerian(g)) continue;
    if (g.size() == 0) continue;
    brute.insert(canonical_form(g).bits);
  }
  auto catalog = connected_euler_graphs(6);
  CHECK(catalog.size() == brute.size());
  for (const Graph& g : catalog) CHECK(brute.count(canonical_form(g).bits) == 1);
}

TEST_CASE("evenness checks") {
  EvennessReport rep = check_evenness(7, 2000, 99);
  CHECK(rep.handshake_failures == 0);
  CHECK(rep.odd_parity_failures == 0);
  CHECK(rep.flow_odd_failures == 0);
  CHECK(rep.flow_pairs > 0);
  CHECK(rep.all_pass());
}

TEST_CASE("worker limit is sane") {
  int workers = worker_limit();
  CHECK(workers >= 1);
  CHECK(workers <= 64);
}
