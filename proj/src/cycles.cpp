#include "euler/cycles.hpp"

#include <algorithm>
#include <set>

namespace euler {

namespace {

// Anchored DFS over all simple cycles. Each cycle is visited exactly once:
// it is discovered from its minimum node (the anchor; larger nodes only on
// the path) and only in the orientation whose second node is smaller than
// its last, which kills the reflected duplicate.
//
// emit receives the open path (anchor first) and returns false to stop the
// whole enumeration.
template <typename Fn>
bool for_each_simple_cycle(const Graph& g, Fn&& emit) {
  const int n = g.order();
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  struct Frame {
    int node;
    std::size_t idx;
  };
  std::vector<Frame> stack;
  for (int anchor = 0; anchor < n; ++anchor) {
    path.assign(1, anchor);
    on_path[anchor] = 1;
    stack.assign(1, {anchor, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.node);
      if (f.idx < nb.size()) {
        int v = nb[f.idx++];
        if (v == anchor) {
          if (path.size() >= 3 && path[1] < path.back()) {
            if (!emit(std::span<const int>(path))) return false;
          }
        } else if (v > anchor && !on_path[v]) {
          path.push_back(v);
          on_path[v] = 1;
          stack.push_back({v, 0});
        }
      } else {
        on_path[f.node] = 0;
        path.pop_back();
        stack.pop_back();
      }
    }
    on_path[anchor] = 0;
  }
  return true;
}

}  // namespace

Cycle normalize_cycle(std::vector<int> open_nodes) {
  auto mi = std::min_element(open_nodes.begin(), open_nodes.end());
  std::rotate(open_nodes.begin(), mi, open_nodes.end());
  if (open_nodes.size() >= 3 && open_nodes[1] > open_nodes.back())
    std::reverse(open_nodes.begin() + 1, open_nodes.end());
  open_nodes.push_back(open_nodes.front());
  return open_nodes;
}

CycleEnumeration enumerate_simple_cycles(const Graph& g, std::int64_t cap) {
  if (cap < 1) throw Error(errc::bad_parameter, "cycle cap must be at least 1");
  CycleEnumeration out;
  for_each_simple_cycle(g, [&](std::span<const int> path) {
    if (static_cast<std::int64_t>(out.cycles.size()) == cap) {
      out.truncated = true;
      return false;
    }
    Cycle c(path.begin(), path.end());
    c.push_back(path.front());
    out.cycles.push_back(std::move(c));
    return true;
  });
  return out;
}

std::vector<int> CycleTypeProfile::residues() const {
  std::vector<int> r;
  for (int i = 0; i < 4; ++i)
    if (counts[i] > 0) r.push_back(i);
  return r;
}

CycleTypeProfile cycle_type_profile(const Graph& g, std::int64_t cap) {
  if (cap < 1) throw Error(errc::bad_parameter, "cycle cap must be at least 1");
  if (!is_connected(g)) throw Error(errc::not_connected, "cycle profile requires a connected graph");
  CycleTypeProfile p;
  std::int64_t total = 0;
  for_each_simple_cycle(g, [&](std::span<const int> path) {
    if (total == cap) {
      p.truncated = true;
      return false;
    }
    ++total;
    ++p.counts[path.size() % 4];
    return true;
  });
  return p;
}

std::pair<std::vector<int>, bool> cycle_residues(const Graph& g, std::int64_t cap) {
  if (cap < 1) throw Error(errc::bad_parameter, "cycle cap must be at least 1");
  unsigned mask = 0;
  std::int64_t total = 0;
  bool truncated = false;
  for_each_simple_cycle(g, [&](std::span<const int> path) {
    if (total == cap) {
      truncated = true;
      return false;
    }
    ++total;
    mask |= 1u << (path.size() % 4);
    return mask != 0xFu;  // all four residues seen: the set cannot grow
  });
  std::vector<int> residues;
  for (int i = 0; i < 4; ++i)
    if (mask & (1u << i)) residues.push_back(i);
  return {residues, truncated};
}

std::string ClassName::name() const {
  std::string s = "e";
  for (int r : epsilon) s += static_cast<char>('0' + r);
  return s;
}

std::string ClassName::kind_name() const { return "T" + std::to_string(kind()); }

ClassName classify(const Graph& g, std::int64_t cap) {
  if (!is_eulerian(g)) throw Error(errc::not_eulerian, "classification applies to Euler graphs");
  auto [residues, truncated] = cycle_residues(g, cap);
  if (truncated)
    throw Error(errc::truncated_profile, "cycle enumeration truncated; class would not be exact");
  return ClassName{residues};
}

CycleDecomposition cycle_decomposition(const Graph& g) {
  Circuit circuit = euler_circuit(g);  // throws when not Eulerian
  CycleDecomposition cd;
  std::vector<char> on(g.order(), 0);
  std::vector<int> stack;
  for (int v : circuit.nodes) {
    if (on[v]) {
      std::vector<int> open;
      while (stack.back() != v) {
        open.push_back(stack.back());
        on[stack.back()] = 0;
        stack.pop_back();
      }
      open.push_back(v);
      std::reverse(open.begin(), open.end());
      cd.cycles.push_back(normalize_cycle(std::move(open)));
    } else {
      stack.push_back(v);
      on[v] = 1;
    }
  }
  return cd;
}

std::vector<int> decomposition_profile(const CycleDecomposition& cd) {
  std::set<int> residues;
  for (const Cycle& c : cd.cycles) residues.insert(cycle_length(c) % 4);
  return {residues.begin(), residues.end()};
}

bool is_valid_decomposition(const Graph& g, const CycleDecomposition& cd) {
  std::set<Edge> used;
  for (const Cycle& c : cd.cycles) {
    if (c.size() < 4 || c.front() != c.back()) return false;
    std::set<int> nodes(c.begin(), c.end() - 1);
    if (nodes.size() != c.size() - 1) return false;  // repeated interior node
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      int u = c[i], v = c[i + 1];
      if (!g.has_edge(u, v)) return false;
      Edge e = u < v ? Edge{u, v} : Edge{v, u};
      if (!used.insert(e).second) return false;  // edge reused
    }
  }
  return static_cast<int>(used.size()) == g.size();
}

namespace {

// The combined-cycle rule tables. One table is shared by the four
// single-type classes; each pair and triple class has its own. 46 rows.
const RuleRow kRuleRows[] = {
    {"0123", 0, 0, 0, 2},
    {"0123", 1, 1, 2, 0},
    {"0123", 2, 2, 0, 2},
    {"0123", 3, 3, 2, 0},
    {"01", 0, 0, 0, 2},
    {"01", 0, 1, 1, 3},
    {"01", 1, 1, 2, 0},
    {"02", 0, 0, 0, 2},
    {"02", 0, 2, 2, 0},
    {"02", 2, 2, 0, 2},
    {"03", 0, 0, 0, 2},
    {"03", 0, 3, 3, 1},
    {"03", 3, 3, 2, 0},
    {"12", 1, 1, 2, 0},
    {"12", 1, 2, 3, 1},
    {"12", 2, 2, 0, 2},
    {"13", 1, 1, 2, 0},
    {"13", 1, 3, 0, 2},
    {"13", 3, 3, 2, 0},
    {"23", 2, 2, 0, 2},
    {"23", 2, 3, 1, 3},
    {"23", 3, 3, 2, 0},
    {"012", 0, 0, 0, 2},
    {"012", 0, 1, 1, 3},
    {"012", 0, 2, 2, 0},
    {"012", 1, 1, 2, 0},
    {"012", 1, 2, 3, 1},
    {"012", 2, 2, 0, 2},
    {"013", 0, 0, 0, 2},
    {"013", 0, 1, 1, 3},
    {"013", 0, 3, 3, 1},
    {"013", 1, 1, 2, 0},
    {"013", 1, 3, 0, 2},
    {"013", 3, 3, 2, 0},
    {"023", 0, 0, 0, 2},
    {"023", 0, 2, 2, 0},
    {"023", 0, 3, 3, 1},
    {"023", 2, 2, 0, 2},
    {"023", 2, 3, 1, 3},
    {"023", 3, 3, 2, 0},
    {"123", 1, 1, 2, 0},
    {"123", 1, 2, 3, 1},
    {"123", 1, 3, 0, 2},
    {"123", 2, 2, 0, 2},
    {"123", 2, 3, 1, 3},
    {"123", 3, 3, 2, 0},
};

struct RuleLookup {
  int even[4][4];
  int odd[4][4];

  RuleLookup() {
    for (auto& row : even)
      for (int& x : row) x = -1;
    for (auto& row : odd)
      for (int& x : row) x = -1;
    for (const RuleRow& r : kRuleRows) {
      set(even, r.i, r.j, r.even_result);
      set(odd, r.i, r.j, r.odd_result);
    }
    // The printed rows cover every unordered residue pair; no derived fill
    // is needed. Keep the closed-form fallback anyway.
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (even[i][j] < 0) even[i][j] = (i + j) % 4;
        if (odd[i][j] < 0) odd[i][j] = (i + j + 2) % 4;
      }
  }

  static void set(int (&table)[4][4], int i, int j, int value) {
    table[i][j] = value;
    table[j][i] = value;
  }
};

const RuleLookup& rule_lookup() {
  static const RuleLookup lookup;
  return lookup;
}

// Smallest cycle length of the wanted residue that keeps the glued witness a
// simple graph (each cycle must leave at least two edges off the shared
// path).
int smallest_witness_length(int residue, int shared) {
  for (int x = 3;; ++x)
    if (x % 4 == residue && x >= shared + 2) return x;
}

}  // namespace

int combined_cycle_type(int i, int j, PathParity parity) {
  if (i < 0 || i > 3 || j < 0 || j > 3)
    throw Error(errc::bad_parameter, "residues must lie in {0,1,2,3}");
  const RuleLookup& lk = rule_lookup();
  return parity == PathParity::even ? lk.even[i][j] : lk.odd[i][j];
}

long combined_cycle_length(long n1, long n2, long l) {
  if (n1 < 3 || n2 < 3) throw Error(errc::bad_parameter, "cycle lengths must be at least 3");
  if (l < 1 || l >= std::min(n1, n2))
    throw Error(errc::bad_parameter, "shared path length out of range");
  return n1 + n2 - 2 * l;
}

std::span<const RuleRow> rule_table_rows() { return kRuleRows; }

Graph glue_cycles_on_path(int n1, int n2, int l) {
  if (n1 < 3 || n2 < 3) throw Error(errc::bad_parameter, "cycle lengths must be at least 3");
  if (l < 1 || l >= std::min(n1, n2))
    throw Error(errc::bad_parameter, "shared path length out of range");
  if (n1 + n2 - 2 * l < 3)
    throw Error(errc::bad_parameter, "glued cycles would create a multi-edge");
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) edges.emplace_back(i, i + 1);
  int next = l + 1;
  auto add_arc = [&](int len) {
    // Path of `len` edges from node l back to node 0 through fresh nodes.
    int prev = l;
    for (int i = 0; i < len - 1; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 0);
  };
  add_arc(n1 - l);
  add_arc(n2 - l);
  return Graph::build(next, edges);
}

RuleTableReport verify_rule_tables() {
  RuleTableReport report;
  report.rows = static_cast<int>(std::size(kRuleRows));
  report.all_pass = true;
  for (const RuleRow& row : kRuleRows) {
    for (PathParity parity : {PathParity::even, PathParity::odd}) {
      RuleCheck check;
      check.case_id = row.case_id;
      check.i = row.i;
      check.j = row.j;
      check.parity = parity;
      check.expected = parity == PathParity::even ? row.even_result : row.odd_result;
      int l = parity == PathParity::even ? 2 : 1;
      int n1 = smallest_witness_length(row.i, l);
      int n2 = smallest_witness_length(row.j, l);
      long combined = combined_cycle_length(n1, n2, l);
      check.formula = static_cast<int>((row.i + row.j - 2 * l) % 4 + 4) % 4;
      check.witness = {n1, n2, l, combined};
      Graph witness = glue_cycles_on_path(n1, n2, l);
      auto en = enumerate_simple_cycles(witness);
      for (const Cycle& c : en.cycles)
        if (cycle_length(c) == combined) check.realized = static_cast<int>(combined % 4);
      check.pass = !en.truncated && check.expected == check.formula &&
                   check.realized == check.expected &&
                   combined_cycle_type(row.i, row.j, parity) == check.expected;
      report.all_pass = report.all_pass && check.pass;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace euler
