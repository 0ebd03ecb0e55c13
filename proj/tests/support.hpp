#pragma once

// Shared test fixtures and independent oracles. The oracles deliberately
// avoid the library's enumeration code paths: cycles are counted by raw
// subset-and-permutation brute force.

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <vector>

#include "euler/graph.hpp"

namespace testsupport {

inline euler::Graph complete_graph(int n) {
  std::vector<euler::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return euler::Graph::build(n, edges);
}

inline euler::Graph complete_bipartite(int a, int b) {
  std::vector<euler::Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return euler::Graph::build(a + b, edges);
}

// Two triangles sharing node 0.
inline euler::Graph bowtie() {
  return euler::Graph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

// Every simple cycle, counted once, by checking every node subset and every
// cyclic arrangement of it. Only sane for small orders.
inline std::map<int, long long> brute_cycle_census(const euler::Graph& g) {
  std::map<int, long long> census;
  const int n = g.order();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 3) continue;
    int first = std::countr_zero(mask);
    std::vector<int> rest;
    for (int v = first + 1; v < n; ++v)
      if (mask & (1u << v)) rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    do {
      if (rest.front() > rest.back()) continue;  // one orientation per cycle
      bool ok = g.has_edge(first, rest.front()) && g.has_edge(rest.back(), first);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
        ok = g.has_edge(rest[i], rest[i + 1]);
      if (ok) ++census[static_cast<int>(rest.size()) + 1];
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return census;
}

inline std::vector<int> brute_cycle_residues(const euler::Graph& g) {
  std::vector<int> residues;
  for (auto [len, count] : brute_cycle_census(g)) {
    int r = len % 4;
    if (std::find(residues.begin(), residues.end(), r) == residues.end()) residues.push_back(r);
  }
  std::sort(residues.begin(), residues.end());
  return residues;
}

inline euler::Graph random_graph(std::mt19937& rng, int min_order, int max_order) {
  std::uniform_int_distribution<int> order_dist(min_order, max_order);
  std::uniform_real_distribution<double> prob_dist(0.05, 0.95);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int n = order_dist(rng);
  double p = prob_dist(rng);
  std::vector<euler::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return euler::Graph::build(n, edges);
}

struct Component {
  euler::Graph graph;
  std::vector<int> to_host;  // local node -> host node
};

// Connected components of the host after deleting the given edges, one
// subgraph per component that still has edges.
inline std::vector<Component> edge_deleted_components(const euler::Graph& g,
                                                      const std::vector<euler::Edge>& removed) {
  std::vector<euler::Edge> rest;
  for (auto e : g.edges())
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) rest.push_back(e);
  // union-find over the surviving edges
  std::vector<int> parent(g.order());
  for (int v = 0; v < g.order(); ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : rest) parent[find(u)] = find(v);
  std::map<int, std::vector<euler::Edge>> comp_edges;
  for (auto e : rest) comp_edges[find(e.first)].push_back(e);
  std::vector<Component> out;
  for (auto& [root, edges] : comp_edges) {
    std::map<int, int> to_local;
    Component comp;
    for (auto [u, v] : edges) {
      for (int w : {u, v})
        if (!to_local.count(w)) {
          to_local[w] = static_cast<int>(comp.to_host.size());
          comp.to_host.push_back(w);
        }
    }
    std::vector<euler::Edge> local;
    for (auto [u, v] : edges) local.emplace_back(to_local[u], to_local[v]);
    comp.graph = euler::Graph::build(static_cast<int>(comp.to_host.size()), local);
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<euler::Edge> cycle_edges(const std::vector<int>& closed) {
  std::vector<euler::Edge> edges;
  for (std::size_t i = 0; i + 1 < closed.size(); ++i) {
    int u = closed[i], v = closed[i + 1];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return edges;
}

}  // namespace testsupport
