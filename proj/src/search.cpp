#include "euler/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_set>

#include "euler/cycles.hpp"

namespace euler {

namespace {

// Adjacency-bitmask graph for the hot enumeration loops, order <= 11.
struct BitGraph {
  int n = 0;
  std::array<std::uint16_t, 12> adj{};

  void add_edge(int u, int v) {
    adj[u] |= std::uint16_t(1u << v);
    adj[v] |= std::uint16_t(1u << u);
  }
  int degree(int v) const { return std::popcount(adj[v]); }
  bool connected() const {
    if (n <= 1) return true;
    std::uint16_t reached = 1, frontier = 1;
    while (frontier) {
      std::uint16_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier & (1u << v)) next |= adj[v];
      frontier = next & ~reached;
      reached |= next;
    }
    return reached == std::uint16_t((1u << n) - 1);
  }
};

BitGraph to_bitgraph(const Graph& g) {
  BitGraph b;
  b.n = g.order();
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  return b;
}

// Iterated neighborhood refinement to a stable coloring. Color ids are
// assigned from sorted signature values, so the coloring is invariant under
// relabeling; initial colors rank degrees descending so dense nodes come
// first in the certificate search.
std::array<int, 12> stable_coloring(const BitGraph& g) {
  const int n = g.n;
  std::array<int, 12> color{};
  {
    std::vector<int> degrees;
    for (int v = 0; v < n; ++v) degrees.push_back(g.degree(v));
    std::vector<int> distinct = degrees;
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::find(distinct.begin(), distinct.end(), degrees[v]) -
                                  distinct.begin());
  }
  int palette = 0;
  for (int v = 0; v < n; ++v) palette = std::max(palette, color[v] + 1);
  while (true) {
    std::array<std::uint64_t, 12> sig{};
    for (int v = 0; v < n; ++v) {
      std::array<int, 12> nc{};
      int cnt = 0;
      for (int w = 0; w < n; ++w)
        if (g.adj[v] & (1u << w)) nc[cnt++] = color[w];
      std::sort(nc.begin(), nc.begin() + cnt);
      std::uint64_t key = static_cast<std::uint64_t>(color[v]);
      for (int i = 0; i < cnt; ++i) key = (key << 4) | static_cast<std::uint64_t>(nc[i] + 1);
      sig[v] = key;
    }
    std::vector<std::uint64_t> values(sig.begin(), sig.begin() + n);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (static_cast<int>(values.size()) == palette) break;
    palette = static_cast<int>(values.size());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(), sig[v]) -
                                  values.begin());
  }
  return color;
}

// Maximal packed adjacency bitstring over all orderings that respect the
// stable coloring (nodes of color c fill the positions reserved for c).
// Placing position p appends p bits: adjacency to positions 0..p-1.
struct CertSearch {
  const BitGraph* g = nullptr;
  int n = 0;
  int total_bits = 0;
  std::array<int, 12> pos_color{};
  std::array<int, 12> color{};
  std::array<int, 12> perm{};
  std::array<char, 12> used{};
  std::uint64_t best = 0;
  bool have = false;

  std::uint64_t run(const BitGraph& graph) {
    g = &graph;
    n = graph.n;
    if (n <= 1) return 0;
    total_bits = n * (n - 1) / 2;
    color = stable_coloring(graph);
    std::array<int, 12> class_size{};
    int palette = 0;
    for (int v = 0; v < n; ++v) {
      ++class_size[color[v]];
      palette = std::max(palette, color[v] + 1);
    }
    int p = 0;
    for (int c = 0; c < palette; ++c)
      for (int i = 0; i < class_size[c]; ++i) pos_color[p++] = c;
    used.fill(0);
    have = false;
    best = 0;
    descend(0, 0);
    return best;
  }

  void descend(int depth, std::uint64_t acc) {
    if (depth == n) {
      if (!have || acc > best) {
        best = acc;
        have = true;
      }
      return;
    }
    // Candidates of the required color, tried dense-first so the first full
    // descent already lands near the maximum.
    std::array<std::pair<std::uint64_t, int>, 12> cand;
    int cnt = 0;
    for (int v = 0; v < n; ++v) {
      if (used[v] || color[v] != pos_color[depth]) continue;
      std::uint64_t colbits = 0;
      for (int q = 0; q < depth; ++q)
        colbits = (colbits << 1) | ((g->adj[v] >> perm[q]) & 1u);
      cand[cnt++] = {colbits, v};
    }
    std::sort(cand.begin(), cand.begin() + cnt,
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first > b.first : a.second < b.second;
              });
    for (int i = 0; i < cnt; ++i) {
      auto [colbits, v] = cand[i];
      std::uint64_t acc2 = (acc << depth) | colbits;
      if (have) {
        int width = depth * (depth + 1) / 2;
        std::uint64_t prefix = best >> (total_bits - width);
        if (acc2 < prefix) continue;
      }
      perm[depth] = v;
      used[v] = 1;
      descend(depth + 1, acc2);
      used[v] = 0;
    }
  }
};

std::uint64_t certificate_bits(const BitGraph& g) {
  CertSearch search;
  return search.run(g);
}

// Rebuild the canonical labeled graph straight from its certificate.
Graph graph_from_certificate(int n, std::uint64_t bits) {
  std::vector<Edge> edges;
  int remaining = n * (n - 1) / 2;
  for (int p = 1; p < n; ++p)
    for (int q = 0; q < p; ++q)
      if ((bits >> --remaining) & 1u) edges.emplace_back(q, p);
  return Graph::build(n, edges);
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCertificateOrder)
    throw Error(errc::scale_guard, "certificates are exact only up to order 11");
  return CanonicalForm{g.order(), certificate_bits(to_bitgraph(g))};
}

namespace {

// Backtracking generator for k-regular graphs on n labeled nodes. Vertex u's
// neighbors above u are chosen in one step, so degrees are final in vertex
// order. Vertex 0's neighborhood is pinned to {1..k}; every isomorphism
// class has such a labeling.
struct RegularGen {
  int n = 0, k = 0;
  bool connected_only = true;
  BitGraph g;
  std::array<int, 12> deg{};
  std::int64_t work = 0;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> certs;

  void run() {
    g.n = n;
    place(0);
  }

  void place(int u) {
    ++work;
    if (u == n) {
      finish();
      return;
    }
    for (int v = u + 1; v < n; ++v)
      if (k - deg[v] > n - u - 1) return;  // v can only gain one edge per remaining vertex
    int need = k - deg[u];
    if (need == 0) {
      place(u + 1);
      return;
    }
    if (need < 0 || need > n - 1 - u) return;
    if (u == 0) {
      for (int v = 1; v <= k; ++v) {
        g.add_edge(0, v);
        ++deg[0];
        ++deg[v];
      }
      place(1);
      g.adj[0] = 0;
      deg[0] = 0;
      for (int v = 1; v <= k; ++v) {
        g.adj[v] &= std::uint16_t(~1u);
        --deg[v];
      }
      return;
    }
    choose(u, u + 1, need);
  }

  void choose(int u, int from, int need) {
    if (need == 0) {
      place(u + 1);
      return;
    }
    if (n - from < need) return;
    if (deg[from] < k) {
      g.add_edge(u, from);
      ++deg[u];
      ++deg[from];
      choose(u, from + 1, need - 1);
      g.adj[u] &= std::uint16_t(~(1u << from));
      g.adj[from] &= std::uint16_t(~(1u << u));
      --deg[u];
      --deg[from];
    }
    choose(u, from + 1, need);
  }

  void finish() {
    if (connected_only && !g.connected()) return;
    std::uint64_t cert = certificate_bits(g);
    if (seen.insert(cert).second) certs.push_back(cert);
  }
};

void check_enumeration_guards(int n, int k) {
  if (n < 1 || k < 0 || k >= n)
    throw Error(errc::bad_parameter, "regular enumeration needs 0 <= k < n");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    throw Error(errc::bad_parameter,
                "no regular graph exists with n*k odd (odd degree forces even order)");
  if (n > kMaxCertificateOrder || (k >= 6 && n > 10))
    throw Error(errc::scale_guard, "regular enumeration bounded at order 11 (10 for degree >= 6)");
}

}  // namespace

std::vector<Graph> enumerate_regular_graphs(int n, int k, bool connected_only) {
  check_enumeration_guards(n, k);
  RegularGen gen;
  gen.n = n;
  gen.k = k;
  gen.connected_only = connected_only;
  gen.run();
  std::sort(gen.certs.begin(), gen.certs.end());
  std::vector<Graph> out;
  out.reserve(gen.certs.size());
  for (std::uint64_t cert : gen.certs) out.push_back(graph_from_certificate(n, cert));
  return out;
}

int worker_limit() {
  if (const char* env = std::getenv("EULER_MOD4_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

namespace {

struct SweepCell {
  int n = 0, k = 0;
  std::vector<Graph> graphs;
  std::vector<std::vector<int>> residues;  // aligned with graphs
  std::int64_t work = 0;
};

// Every connected regular Euler graph in the order window, classified.
// Independent (n, k) cells may run on parallel workers.
std::vector<SweepCell> sweep_regular_euler(int n_min, int n_max, std::vector<std::string>* notes) {
  std::vector<SweepCell> cells;
  for (int n = n_min; n <= n_max; ++n)
    for (int k = 2; k < n; k += 2) {
      if (n > kMaxCertificateOrder || (k >= 6 && n > 10)) {
        if (notes)
          notes->push_back("skipped order " + std::to_string(n) + " degree " + std::to_string(k) +
                           ": beyond desk scale");
        continue;
      }
      cells.push_back(SweepCell{n, k, {}, {}, 0});
    }
  auto run_cell = [](SweepCell& cell) {
    RegularGen gen;
    gen.n = cell.n;
    gen.k = cell.k;
    gen.connected_only = true;
    gen.run();
    std::sort(gen.certs.begin(), gen.certs.end());
    cell.work = gen.work;
    for (std::uint64_t cert : gen.certs) {
      Graph g = graph_from_certificate(cell.n, cert);
      auto [residues, truncated] = cycle_residues(g);
      if (truncated)
        throw Error(errc::truncated_profile, "cycle enumeration truncated during sweep");
      cell.residues.push_back(std::move(residues));
      cell.graphs.push_back(std::move(g));
    }
  };
  int workers = std::min<int>(worker_limit(), static_cast<int>(cells.size()));
  if (workers <= 1) {
    for (auto& cell : cells) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          run_cell(cells[i]);
        }
      });
    for (auto& th : pool) th.join();
  }
  return cells;
}

void check_sweep_guards(int n_min, int n_max) {
  if (n_min < 3 || n_max < n_min) throw Error(errc::bad_parameter, "bad order window");
  if (n_max > kMaxCertificateOrder)
    throw Error(errc::scale_guard, "sweeps bounded at order 11");
}

TheoremReport make_report(std::string theorem, int n_min, int n_max) {
  TheoremReport rep;
  rep.theorem = std::move(theorem);
  rep.n_min = n_min;
  rep.n_max = n_max;
  for (int k = 2; k < n_max; k += 2) rep.degrees.push_back(k);
  return rep;
}

}  // namespace

TheoremReport check_theorem_pure_regular(int n_max) {
  check_sweep_guards(3, n_max);
  TheoremReport rep = make_report("pure-regular", 3, n_max);
  for (auto& cell : sweep_regular_euler(3, n_max, &rep.notes)) {
    rep.work += cell.work;
    for (std::size_t i = 0; i < cell.graphs.size(); ++i) {
      ++rep.instances;
      // A cycle graph is exactly a connected 2-regular graph.
      if (cell.residues[i].size() == 1 && cell.k != 2)
        rep.counterexamples.push_back(cell.graphs[i]);
    }
  }
  return rep;
}

TheoremReport check_theorem_two_types(int n_max) {
  check_sweep_guards(3, n_max);
  TheoremReport rep = make_report("two-types", 3, n_max);
  const std::vector<int> bipartite_pair{0, 2};
  for (auto& cell : sweep_regular_euler(3, n_max, &rep.notes)) {
    rep.work += cell.work;
    for (std::size_t i = 0; i < cell.graphs.size(); ++i) {
      ++rep.instances;
      if (cell.residues[i].size() != 2) continue;
      bool ok = cell.residues[i] == bipartite_pair && is_bipartite(cell.graphs[i]) && cell.k > 2;
      if (!ok) rep.counterexamples.push_back(cell.graphs[i]);
    }
  }
  return rep;
}

TheoremReport check_conjecture_three_types(int n_min, int n_max) {
  if (n_min < 6) throw Error(errc::bad_parameter, "the three-type scan starts above order 5");
  check_sweep_guards(n_min, n_max);
  TheoremReport rep = make_report("three-types-conjecture", n_min, n_max);
  for (auto& cell : sweep_regular_euler(n_min, n_max, &rep.notes)) {
    rep.work += cell.work;
    for (std::size_t i = 0; i < cell.graphs.size(); ++i) {
      ++rep.instances;
      if (cell.residues[i].size() == 3) rep.counterexamples.push_back(cell.graphs[i]);
    }
  }
  // The order-5 complete graph stays the lone known three-type regular Euler
  // graph; confirm its profile while we are at it.
  std::vector<Edge> k5_edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5_edges.emplace_back(u, v);
  Graph k5 = Graph::build(5, k5_edges);
  auto [k5_residues, truncated] = cycle_residues(k5);
  if (!truncated && k5_residues == std::vector<int>{0, 1, 3})
    rep.notes.push_back("order-5 complete graph confirmed with cycle types {0,1,3}");
  else
    rep.counterexamples.push_back(k5);
  return rep;
}

int local_edge_connectivity(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw Error(errc::endpoint_out_of_range, "node missing from the graph");
  if (u == v) throw Error(errc::bad_parameter, "edge connectivity needs two distinct nodes");
  const int n = g.order();
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (auto [a, b] : g.edges()) {
    cap[a][b] = 1;
    cap[b][a] = 1;
  }
  int flow = 0;
  std::vector<int> prev(n), queue;
  while (true) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[u] = u;
    queue.assign(1, u);
    for (std::size_t head = 0; head < queue.size() && prev[v] == -1; ++head) {
      int x = queue[head];
      for (int y = 0; y < n; ++y) {
        if (prev[y] == -1 && cap[x][y] > 0) {
          prev[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (prev[v] == -1) break;
    for (int y = v; y != u; y = prev[y]) {
      cap[prev[y]][y] -= 1;
      cap[y][prev[y]] += 1;
    }
    ++flow;
  }
  return flow;
}

namespace {

std::mutex euler_catalog_mutex;
std::map<int, std::vector<Graph>> euler_catalog;

// Even graphs on n labeled nodes are exactly the edge sets generated by the
// fundamental cycles of the star at node 0: choose any set of edges among
// nodes 1..n-1, then a star edge (0,v) for every v with odd chosen degree.
std::vector<Graph> build_connected_euler_graphs(int n) {
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph::build(1, {}));
    return out;
  }
  if (n == 2) return out;  // the only candidate K2 has odd degrees
  std::vector<Edge> pairs;
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int m = static_cast<int>(pairs.size());
  std::vector<std::uint32_t> incident(n, 0);
  for (int i = 0; i < m; ++i) {
    incident[pairs[i].first] |= 1u << i;
    incident[pairs[i].second] |= 1u << i;
  }
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> certs;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    BitGraph g;
    g.n = n;
    std::uint32_t rest = mask;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      g.add_edge(pairs[i].first, pairs[i].second);
    }
    bool star = false;
    for (int v = 1; v < n; ++v)
      if (std::popcount(mask & incident[v]) & 1) {
        g.add_edge(0, v);
        star = true;
      }
    if (!star) continue;  // node 0 isolated
    if (!g.connected()) continue;
    std::uint64_t cert = certificate_bits(g);
    if (seen.insert(cert).second) certs.push_back(cert);
  }
  std::sort(certs.begin(), certs.end());
  out.reserve(certs.size());
  for (std::uint64_t cert : certs) out.push_back(graph_from_certificate(n, cert));
  return out;
}

}  // namespace

std::vector<Graph> connected_euler_graphs(int n) {
  if (n < 1) throw Error(errc::bad_parameter, "order must be at least 1");
  if (n > 8) throw Error(errc::scale_guard, "even-graph catalog bounded at order 8");
  std::lock_guard<std::mutex> lock(euler_catalog_mutex);
  auto it = euler_catalog.find(n);
  if (it == euler_catalog.end()) it = euler_catalog.emplace(n, build_connected_euler_graphs(n)).first;
  return it->second;
}

EvennessReport check_evenness(int flow_max_order, int samples, unsigned seed) {
  if (flow_max_order < 1 || samples < 0) throw Error(errc::bad_parameter, "bad evenness parameters");
  if (flow_max_order > 8) throw Error(errc::scale_guard, "even-graph catalog bounded at order 8");
  EvennessReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.flow_max_order = flow_max_order;

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> order_dist(1, 20);
  std::uniform_real_distribution<double> prob_dist(0.05, 0.95);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < samples; ++i) {
    int n = order_dist(rng);
    double p = prob_dist(rng);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) edges.emplace_back(u, v);
    Graph g = Graph::build(n, edges);
    std::vector<int> deg = degree_sequence(g);
    long long sum = 0;
    int odd = 0;
    for (int d : deg) {
      sum += d;
      odd += d % 2;
    }
    if (sum != 2LL * g.size()) ++rep.handshake_failures;
    if (odd % 2 != 0) ++rep.odd_parity_failures;
  }

  for (int n = 1; n <= flow_max_order; ++n) {
    for (const Graph& g : connected_euler_graphs(n)) {
      ++rep.flow_graphs;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          ++rep.flow_pairs;
          if (local_edge_connectivity(g, u, v) % 2 != 0) ++rep.flow_odd_failures;
        }
    }
  }
  return rep;
}

}  // namespace euler
