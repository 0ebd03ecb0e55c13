#include "euler/graceful.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace euler {

GracefulLabeling gts_labeling(GtsParams params) {
  GtsLayout layout = gts(params);  // validates params
  const int t = params.t, s = params.s;
  std::vector<int> labels(layout.graph.order(), -1);
  for (int r = 0; r < 2 * t; ++r) labels[layout.grid[r][0]] = r;
  for (int r = t; r < 2 * t; ++r)
    for (int j = 1; j <= s; ++j) labels[layout.grid[r][j]] = 2 * j * t + (2 * t - 1 - r);
  for (int r = 0; r < t; ++r) {
    int k = (t - 1) - r;
    for (int j = 1; j <= s; ++j)
      labels[layout.grid[r][j]] = 2 * s * t + t + 1 + k * (2 * s - 1) + 2 * (j - 1);
  }
  return {std::move(labels)};
}

SerialOrder gts_serial_order(GtsParams params) {
  GracefulLabeling labeling = gts_labeling(params);
  const int n = static_cast<int>(labeling.labels.size());
  std::vector<int> by_label(n);
  std::iota(by_label.begin(), by_label.end(), 0);
  std::sort(by_label.begin(), by_label.end(),
            [&](int a, int b) { return labeling.labels[a] < labeling.labels[b]; });
  SerialOrder order;
  order.rank.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) order.rank[by_label[pos]] = pos + 1;
  return order;
}

GracefulReport verify_graceful(const Graph& g, const GracefulLabeling& labeling) {
  if (static_cast<int>(labeling.labels.size()) != g.order())
    throw Error(errc::labeling_mismatch,
                "labeling covers " + std::to_string(labeling.labels.size()) + " nodes, graph has " +
                    std::to_string(g.order()));
  const int q = g.size();
  GracefulReport report;
  std::map<int, std::vector<int>> by_value;
  for (int v = 0; v < g.order(); ++v) {
    int label = labeling.labels[v];
    if (label < 0 || label > q)
      report.violations.push_back("node " + std::to_string(v) + " label " + std::to_string(label) +
                                  " outside [0," + std::to_string(q) + "]");
    by_value[label].push_back(v);
  }
  for (const auto& [label, nodes] : by_value)
    if (nodes.size() > 1) {
      std::string who;
      for (int v : nodes) who += (who.empty() ? "" : ",") + std::to_string(v);
      report.violations.push_back("duplicate node label " + std::to_string(label) + " on nodes " + who);
    }
  std::vector<int> edge_count(q + 1, 0);
  for (auto [u, v] : g.edges()) {
    int e = std::abs(labeling.labels[u] - labeling.labels[v]);
    if (e < 1 || e > q)
      report.violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " induces label " + std::to_string(e) + " outside [1," +
                                  std::to_string(q) + "]");
    else
      ++edge_count[e];
  }
  for (int e = 1; e <= q; ++e) {
    if (edge_count[e] > 1)
      report.violations.push_back("edge label " + std::to_string(e) + " appears " +
                                  std::to_string(edge_count[e]) + " times");
    else if (edge_count[e] == 0)
      report.violations.push_back("edge label " + std::to_string(e) + " missing");
  }
  report.valid = report.violations.empty();
  return report;
}

namespace {

struct SearchState {
  const Graph* g = nullptr;
  int q = 0;
  std::int64_t budget = 0;
  std::int64_t attempts = 0;
  bool out_of_budget = false;

  std::vector<int> order;          // unseeded nodes in assignment order
  std::vector<int> value_order;    // q, 0, q-1, 1, ...
  std::vector<int> label_of;       // node -> value, -1 unassigned
  std::vector<char> used_label;    // value taken
  std::vector<char> used_edge;     // induced edge label taken
  std::vector<int> twin_class;     // nodes with equal neighbor sets share a class
  std::vector<std::vector<int>> class_stack;

  bool dfs(std::size_t pos) {
    if (out_of_budget) return false;
    if (pos == order.size()) return true;
    int node = order[pos];
    int cls = twin_class[node];
    auto& stack = class_stack[cls];
    std::vector<int> marked;
    marked.reserve(g->neighbors(node).size());
    for (int v : value_order) {
      if (used_label[v]) continue;
      // Twins are interchangeable, so only visit their values in ascending
      // assignment order.
      if (!stack.empty() && v <= stack.back()) continue;
      if (++attempts > budget) {
        out_of_budget = true;
        return false;
      }
      bool ok = true;
      marked.clear();
      for (int w : g->neighbors(node)) {
        int lw = label_of[w];
        if (lw < 0) continue;
        int e = std::abs(v - lw);
        if (used_edge[e]) {
          ok = false;
          break;
        }
        used_edge[e] = 1;
        marked.push_back(e);
      }
      if (ok) {
        label_of[node] = v;
        used_label[v] = 1;
        stack.push_back(v);
        if (dfs(pos + 1)) return true;
        stack.pop_back();
        used_label[v] = 0;
        label_of[node] = -1;
        if (out_of_budget) {
          for (int e : marked) used_edge[e] = 0;
          return false;
        }
      }
      for (int e : marked) used_edge[e] = 0;
    }
    return false;
  }
};

}  // namespace

GracefulSearchResult search_graceful(const Graph& g, std::int64_t budget) {
  const int q = g.size();
  if (q < 1) throw Error(errc::bad_parameter, "graceful search needs at least one edge");
  if (budget < 1) throw Error(errc::bad_parameter, "budget must be positive");
  const int n = g.order();

  SearchState st;
  st.g = &g;
  st.q = q;
  st.budget = budget;

  st.twin_class.assign(n, 0);
  int classes = 0;
  {
    std::map<std::vector<int>, int> groups;
    for (int v = 0; v < n; ++v) {
      auto [it, fresh] = groups.emplace(g.neighbors(v), classes);
      if (fresh) ++classes;
      st.twin_class[v] = it->second;
    }
  }

  for (int hi = q, lo = 0; hi >= lo; --hi, ++lo) {
    st.value_order.push_back(hi);
    if (lo < hi) st.value_order.push_back(lo);
  }

  GracefulSearchResult result;
  for (auto [x, y] : g.edges()) {
    st.label_of.assign(n, -1);
    st.used_label.assign(q + 1, 0);
    st.used_edge.assign(q + 1, 0);
    st.class_stack.assign(classes, {});
    st.label_of[x] = 0;
    st.label_of[y] = q;
    st.used_label[0] = 1;
    st.used_label[q] = 1;
    st.used_edge[q] = 1;

    // Assign the rest most-constrained first: nodes with many already-placed
    // neighbors early, ties to higher degree then lower id.
    st.order.clear();
    std::vector<char> placed(n, 0);
    placed[x] = placed[y] = 1;
    std::vector<int> placed_neighbors(n, 0);
    for (int w : g.neighbors(x)) ++placed_neighbors[w];
    for (int w : g.neighbors(y)) ++placed_neighbors[w];
    for (int step = 0; step < n - 2; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == -1 || placed_neighbors[v] > placed_neighbors[best] ||
            (placed_neighbors[v] == placed_neighbors[best] && g.degree(v) > g.degree(best)))
          best = v;
      }
      placed[best] = 1;
      st.order.push_back(best);
      for (int w : g.neighbors(best)) ++placed_neighbors[w];
    }

    if (st.dfs(0)) {
      result.outcome = SearchOutcome::found;
      result.labeling.labels = st.label_of;
      result.assignments = st.attempts;
      return result;
    }
    if (st.out_of_budget) {
      result.outcome = SearchOutcome::inconclusive;
      result.assignments = st.attempts;
      return result;
    }
  }
  result.outcome = SearchOutcome::absent;
  result.assignments = st.attempts;
  return result;
}

}  // namespace euler
