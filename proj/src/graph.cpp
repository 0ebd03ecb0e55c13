#include "euler/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace euler {

const char* errc_name(errc code) {
  switch (code) {
    case errc::loop_edge: return "loop_edge";
    case errc::endpoint_out_of_range: return "endpoint_out_of_range";
    case errc::duplicate_edge: return "duplicate_edge";
    case errc::malformed_input: return "malformed_input";
    case errc::edge_count_mismatch: return "edge_count_mismatch";
    case errc::not_eulerian: return "not_eulerian";
    case errc::not_connected: return "not_connected";
    case errc::bad_parameter: return "bad_parameter";
    case errc::scale_guard: return "scale_guard";
    case errc::labeling_mismatch: return "labeling_mismatch";
    case errc::truncated_profile: return "truncated_profile";
  }
  return "unknown";
}

Graph Graph::build(int order, const std::vector<Edge>& edges) {
  if (order < 1) throw Error(errc::bad_parameter, "graph order must be at least 1");
  Graph g;
  g.order_ = order;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw Error(errc::loop_edge, "loop edge at node " + std::to_string(u));
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw Error(errc::endpoint_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") leaves node range [0," + std::to_string(order) + ")");
    if (u > v) std::swap(u, v);
    g.edges_.emplace_back(u, v);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw Error(errc::duplicate_edge, "duplicate edge (" + std::to_string(dup->first) + "," +
                                          std::to_string(dup->second) + ")");
  g.adj_.assign(order, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(int order, const std::vector<Edge>& edges) { return Graph::build(order, edges); }

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(g.order());
  for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  return deg;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == g.order();
}

bool is_eulerian(const Graph& g) {
  if (!is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<int> queue;
  for (int start = 0; start < g.order(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    queue.assign(1, start);
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Circuit euler_circuit(const Graph& g) {
  if (!is_eulerian(g))
    throw Error(errc::not_eulerian, "euler circuit requires a connected graph with all degrees even");
  Circuit c;
  if (g.size() == 0) {
    c.nodes.push_back(0);
    return c;
  }
  // Incidence lists (neighbor, edge id), sorted by neighbor so the walk is
  // deterministic. Follow unused edges, splicing subtours as the stack pops.
  int n = g.order();
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  int eid = 0;
  for (auto [u, v] : g.edges()) {
    inc[u].emplace_back(v, eid);
    inc[v].emplace_back(u, eid);
    ++eid;
  }
  for (auto& lst : inc) std::sort(lst.begin(), lst.end());
  std::vector<char> used(g.size(), 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<int> stack{0}, out;
  out.reserve(g.size() + 1);
  while (!stack.empty()) {
    int u = stack.back();
    auto& lst = inc[u];
    while (next[u] < lst.size() && used[lst[next[u]].second]) ++next[u];
    if (next[u] == lst.size()) {
      out.push_back(u);
      stack.pop_back();
    } else {
      auto [v, id] = lst[next[u]];
      used[id] = 1;
      stack.push_back(v);
    }
  }
  std::reverse(out.begin(), out.end());
  c.nodes = std::move(out);
  return c;
}

Graph parse_graph(std::string_view text) {
  std::vector<long long> nums;
  std::size_t i = 0, n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    long long value = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      throw Error(errc::malformed_input, "not an integer: '" + std::string(tok) + "'");
    nums.push_back(value);
    i = j;
  }
  if (nums.size() < 2) throw Error(errc::malformed_input, "missing 'p q' header");
  long long p = nums[0], q = nums[1];
  if (p < 1 || q < 0) throw Error(errc::malformed_input, "bad header values");
  if (p > 1'000'000) throw Error(errc::scale_guard, "graph order beyond desk scale");
  if (static_cast<long long>(nums.size()) != 2 + 2 * q)
    throw Error(errc::edge_count_mismatch,
                "header announces " + std::to_string(q) + " edges, found " +
                    std::to_string(nums.size() - 2) + " value(s) past the header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(q));
  for (long long e = 0; e < q; ++e)
    edges.emplace_back(static_cast<int>(nums[2 + 2 * e]), static_cast<int>(nums[3 + 2 * e]));
  return Graph::build(static_cast<int>(p), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

std::string dot_impl(const Graph& g, const std::vector<int>* labels) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (labels) out << " [label=\"" << (*labels)[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (labels) out << " [label=\"" << std::abs((*labels)[u] - (*labels)[v]) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const Graph& g) { return dot_impl(g, nullptr); }

std::string export_dot(const Graph& g, const std::vector<int>& node_labels) {
  if (static_cast<int>(node_labels.size()) != g.order())
    throw Error(errc::labeling_mismatch, "labeling covers " + std::to_string(node_labels.size()) +
                                             " nodes, graph has " + std::to_string(g.order()));
  return dot_impl(g, &node_labels);
}

}  // namespace euler
