#include "euler/families.hpp"

#include <algorithm>

namespace euler {

namespace {

std::vector<int> normalize_target(std::vector<int> target) {
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  for (int r : target)
    if (r < 0 || r > 3) throw Error(errc::bad_parameter, "target residues must lie in {0,1,2,3}");
  return target;
}

}  // namespace

Graph cycle_graph(int n) {
  if (n < 3) throw Error(errc::bad_parameter, "cycle graphs need length at least 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, edges);
}

Graph block_cycle_graph(const std::vector<int>& lengths) {
  if (lengths.empty()) throw Error(errc::bad_parameter, "empty block list");
  for (int len : lengths)
    if (len < 3) throw Error(errc::bad_parameter, "cycle blocks need length at least 3");
  std::vector<Edge> edges;
  int next = 1;
  int attach = 0;
  for (int len : lengths) {
    // Ring through len-1 fresh nodes, closed at the attach node. The next
    // block hangs halfway around this one so blocks meet pairwise in at most
    // one node.
    std::vector<int> ring{attach};
    for (int i = 0; i < len - 1; ++i) ring.push_back(next++);
    for (int i = 0; i < len; ++i) edges.emplace_back(ring[i], ring[(i + 1) % len]);
    attach = ring[len / 2];
  }
  return Graph::build(next, edges);
}

Graph hypercube(int dim) {
  if (dim < 1) throw Error(errc::bad_parameter, "hypercube dimension must be at least 1");
  if (dim > 10) throw Error(errc::scale_guard, "hypercube dimension beyond desk scale");
  int n = 1 << dim;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * dim / 2);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b) {
      int w = v ^ (1 << b);
      if (w > v) edges.emplace_back(v, w);
    }
  return Graph::build(n, edges);
}

GtsLayout gts(GtsParams params) {
  int t = params.t, s = params.s;
  if (t < 1 || s < 1) throw Error(errc::bad_parameter, "gts needs t >= 1 and s >= 1");
  int rows = 2 * t;
  int ring = 4 * t;
  GtsLayout layout;
  layout.t = t;
  layout.s = s;
  layout.grid.assign(rows, std::vector<int>(s + 1, -1));
  int next = ring;
  for (int r = 0; r < rows; ++r) {
    layout.grid[r][0] = 2 * r;
    layout.grid[r][1] = 2 * r + 1;  // the odd cycle node is the first middle
    for (int j = 2; j <= s; ++j) layout.grid[r][j] = next++;
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(4) * t * s);
  for (int r = 0; r < rows; ++r) {
    int a = layout.grid[r][0];
    int b = layout.grid[(r + 1) % rows][0];
    for (int j = 1; j <= s; ++j) {
      edges.emplace_back(layout.grid[r][j], a);
      edges.emplace_back(layout.grid[r][j], b);
    }
  }
  layout.graph = Graph::build(next, edges);
  return layout;
}

Graph attach_handle(const Graph& g, const HandleSpec& spec) {
  if (spec.u == spec.v) throw Error(errc::bad_parameter, "handle endpoints must differ");
  if (spec.u < 0 || spec.v < 0 || spec.u >= g.order() || spec.v >= g.order())
    throw Error(errc::endpoint_out_of_range, "handle endpoints missing from the graph");
  if (spec.path_length < 1 || spec.count < 1)
    throw Error(errc::bad_parameter, "handle needs path_length >= 1 and count >= 1");
  if (spec.path_length == 1) {
    if (spec.count > 1)
      throw Error(errc::duplicate_edge, "repeated length-1 handle would create a multi-edge");
    if (g.has_edge(spec.u, spec.v))
      throw Error(errc::duplicate_edge, "length-1 handle duplicates an existing edge");
  }
  std::vector<Edge> edges = g.edges();
  int next = g.order();
  for (int c = 0; c < spec.count; ++c) {
    int prev = spec.u;
    for (int step = 1; step < spec.path_length; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, spec.v);
  }
  return Graph::build(next, edges);
}

MembershipReport validate_class_membership(const Graph& g, const std::vector<int>& target,
                                           std::int64_t cap) {
  if (!is_connected(g)) throw Error(errc::not_connected, "membership checks need a connected graph");
  std::vector<int> want = normalize_target(target);
  MembershipReport report;
  report.eulerian = is_eulerian(g);
  report.profile = cycle_type_profile(g, cap);
  report.member = !report.profile.truncated && report.profile.residues() == want;
  return report;
}

bool repeatability_check(const Graph& g, const HandleSpec& spec, const std::vector<int>& target,
                         std::int64_t cap) {
  std::vector<int> want = normalize_target(target);
  HandleSpec repeated = spec;
  repeated.count += 2;
  Graph grown = attach_handle(g, repeated);
  auto [residues, truncated] = cycle_residues(grown, cap);
  if (truncated)
    throw Error(errc::truncated_profile, "cycle enumeration truncated during repeatability check");
  return std::includes(want.begin(), want.end(), residues.begin(), residues.end());
}

}  // namespace euler
