#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "euler/graph.hpp"

namespace euler {

inline constexpr std::int64_t kDefaultCycleCap = 1'000'000;

// A simple cycle as a closed node sequence (first == last), normalized to
// start at its minimum node and to step first toward the smaller of that
// node's two cycle neighbors. That pins one representative per
// rotation/reflection class.
using Cycle = std::vector<int>;

inline int cycle_length(const Cycle& c) { return static_cast<int>(c.size()) - 1; }

Cycle normalize_cycle(std::vector<int> open_nodes);

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  bool truncated = false;
};

// All simple cycles of g, each reported once. Stops after cap cycles and
// flags truncation instead of erroring.
CycleEnumeration enumerate_simple_cycles(const Graph& g, std::int64_t cap = kDefaultCycleCap);

struct CycleTypeProfile {
  std::array<std::int64_t, 4> counts{};  // simple-cycle count per length residue mod 4
  bool truncated = false;

  std::vector<int> residues() const;
  bool has(int residue) const { return counts[residue] > 0; }
};

// Residues and per-residue counts of all simple cycles. Requires a connected
// graph; a truncated profile's residue set is a lower bound, not an answer.
CycleTypeProfile cycle_type_profile(const Graph& g, std::int64_t cap = kDefaultCycleCap);

// Residue set only, with an early exit once all four residues appear (the
// set is then exact regardless of remaining cycles). Second member reports
// truncation.
std::pair<std::vector<int>, bool> cycle_residues(const Graph& g, std::int64_t cap = kDefaultCycleCap);

// The epsilon-class of an Euler graph: its exact residue subset. The T-kind
// is the subset's cardinality.
struct ClassName {
  std::vector<int> epsilon;
  int kind() const { return static_cast<int>(epsilon.size()); }
  std::string name() const;       // "e013"
  std::string kind_name() const;  // "T3"
};

ClassName classify(const Graph& g, std::int64_t cap = kDefaultCycleCap);

struct CycleDecomposition {
  std::vector<Cycle> cycles;
};

// Partition of an Euler graph's edge set into edge-disjoint simple cycles,
// peeled deterministically from the Euler circuit at repeated nodes.
CycleDecomposition cycle_decomposition(const Graph& g);

// Sorted set of length residues mod 4 appearing in the decomposition.
std::vector<int> decomposition_profile(const CycleDecomposition& cd);

// Cycles simple and >= 3 long, pairwise edge-disjoint, union equal to the
// host's edge set.
bool is_valid_decomposition(const Graph& g, const CycleDecomposition& cd);

enum class PathParity { even, odd };

// Residue of the cycle formed when two cycles of residues i and j share a
// path of the given parity. Backed by the combined-cycle rule tables; always
// equal to (i + j - 2l) mod 4 for l of that parity.
int combined_cycle_type(int i, int j, PathParity parity);

// Length of the outer cycle when cycles of lengths n1 and n2 share a path of
// l edges: n1 + n2 - 2l. Requires 1 <= l < min(n1, n2).
long combined_cycle_length(long n1, long n2, long l);

// One printed row of the combined-cycle rule tables. case_id names the
// residue set whose table the row belongs to: "0123" for the shared
// single-type table, "01".."23" for the pair cases, "012".."123" for the
// triple cases.
struct RuleRow {
  const char* case_id;
  int i, j;
  int even_result, odd_result;
};

// All 46 printed rows.
std::span<const RuleRow> rule_table_rows();

struct RuleWitness {
  int n1 = 0, n2 = 0, l = 0;
  long combined_length = 0;
};

struct RuleCheck {
  std::string case_id;
  int i = 0, j = 0;
  PathParity parity = PathParity::even;
  int expected = -1;  // table entry
  int formula = -1;   // (i + j - 2l) mod 4
  int realized = -1;  // residue of the outer cycle found in the witness graph
  RuleWitness witness;
  bool pass = false;
};

struct RuleTableReport {
  std::vector<RuleCheck> checks;  // two per printed row: even and odd
  int rows = 0;
  bool all_pass = false;
};

// Checks every printed rule-table row against the closed form and against an
// explicit witness graph (two cycle graphs glued on a shared path).
RuleTableReport verify_rule_tables();

// Two cycle graphs of lengths n1 and n2 sharing a path of l edges. Interior
// nodes are fresh; the shared path is 0..l.
Graph glue_cycles_on_path(int n1, int n2, int l);

}  // namespace euler
