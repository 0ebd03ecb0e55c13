#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "euler/graph.hpp"

namespace euler {

// Isomorphism certificate for small graphs: two graphs have equal order and
// bits iff they are isomorphic. bits packs the upper triangle of the
// adjacency matrix under a maximizing node ordering, which fits 64 bits up
// to order 11.
struct CanonicalForm {
  int order = 0;
  std::uint64_t bits = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kMaxCertificateOrder = 11;

CanonicalForm canonical_form(const Graph& g);

// One representative per isomorphism class of k-regular graphs on n nodes,
// each relabeled to its canonical ordering and sorted by certificate.
// Guards: k < n, n*k even, n <= 11 (n <= 10 once k >= 6).
std::vector<Graph> enumerate_regular_graphs(int n, int k, bool connected_only);

struct TheoremReport {
  std::string theorem;
  int n_min = 0, n_max = 0;
  std::vector<int> degrees;        // degrees scanned
  std::int64_t instances = 0;      // graphs classified
  std::int64_t work = 0;           // partial assignments explored while generating
  std::vector<Graph> counterexamples;
  std::vector<std::string> notes;
  bool consistent() const { return counterexamples.empty(); }
};

// Regular Euler graphs with a single cycle type must be cycle graphs.
TheoremReport check_theorem_pure_regular(int n_max);

// Regular Euler graphs with exactly two cycle types must be bipartite of
// degree > 2 with profile {0,2}; the five other residue pairs never occur.
TheoremReport check_theorem_two_types(int n_max);

// No regular Euler graph of order in [n_min, n_max] has exactly three cycle
// types; separately confirms the order-5 complete graph has profile {0,1,3}.
TheoremReport check_conjecture_three_types(int n_min, int n_max);

// Maximum number of pairwise edge-disjoint u-v paths (unit-capacity max
// flow).
int local_edge_connectivity(const Graph& g, int u, int v);

struct EvennessReport {
  int samples = 0;
  unsigned seed = 0;
  std::int64_t handshake_failures = 0;
  std::int64_t odd_parity_failures = 0;
  int flow_max_order = 0;
  std::int64_t flow_graphs = 0;
  std::int64_t flow_pairs = 0;
  std::int64_t flow_odd_failures = 0;
  bool all_pass() const {
    return handshake_failures == 0 && odd_parity_failures == 0 && flow_odd_failures == 0;
  }
};

// Degree-sum and odd-degree-count checks over seeded random graphs, plus
// evenness of local edge connectivity over every connected even-degree graph
// up to flow_max_order (at most 8).
EvennessReport check_evenness(int flow_max_order, int samples, unsigned seed);

// All connected even-degree graphs on exactly n nodes (n <= 8), one per
// isomorphism class, canonically relabeled and sorted by certificate.
std::vector<Graph> connected_euler_graphs(int n);

// Worker cap for the sweeps; reads EULER_MOD4_THREADS, defaulting to the
// hardware concurrency (at most 8).
int worker_limit();

}  // namespace euler
