#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace euler {

// Error codes for the whole library. Every failure mode the API promises to
// distinguish gets its own code so callers can react without parsing text.
enum class errc {
  loop_edge,
  endpoint_out_of_range,
  duplicate_edge,
  malformed_input,
  edge_count_mismatch,
  not_eulerian,
  not_connected,
  bad_parameter,
  scale_guard,
  labeling_mismatch,
  truncated_profile,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Unordered node pair, canonically first < second.
using Edge = std::pair<int, int>;

// Finite simple undirected graph on nodes 0..order-1. Immutable once built.
// The edge list is kept sorted with u < v per pair, so equality, hashing and
// serialization are deterministic.
class Graph {
 public:
  Graph() = default;

  // Rejects loops, out-of-range endpoints and duplicate pairs.
  static Graph build(int order, const std::vector<Edge>& edges);

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

Graph build_graph(int order, const std::vector<Edge>& edges);

// Entry i is the number of edges incident to node i; the sum is always 2q.
std::vector<int> degree_sequence(const Graph& g);

bool is_connected(const Graph& g);

// Connected and every degree even.
bool is_eulerian(const Graph& g);

bool is_bipartite(const Graph& g);

// Closed walk. An Euler circuit has size()+1 nodes and traverses every edge
// exactly once.
struct Circuit {
  std::vector<int> nodes;
};

// Splice-of-subtours construction; deterministic for a fixed input.
Circuit euler_circuit(const Graph& g);

// Text format: header "p q", then q whitespace-separated pairs "u v"
// (0-indexed ASCII decimal). parse(serialize(g)) == g.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// DOT export. The labeled overload takes one value per node and annotates
// each edge with the induced absolute difference.
std::string export_dot(const Graph& g);
std::string export_dot(const Graph& g, const std::vector<int>& node_labels);

}  // namespace euler
