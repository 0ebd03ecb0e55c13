#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "euler/families.hpp"
#include "euler/graph.hpp"

namespace euler {

// Node labels indexed by node id. The induced label of edge uv is
// |labels[u] - labels[v]|; the labeling is graceful when the node labels are
// distinct values from {0..q} and the induced edge labels are exactly
// {1..q}.
struct GracefulLabeling {
  std::vector<int> labels;
};

struct GracefulReport {
  bool valid = false;
  std::vector<std::string> violations;
};

// Closed-form graceful labeling of gts(params), aligned with the layout
// grid:
//   column 0, row r                      -> r
//   lower half (rows t..2t-1), column j  -> 2jt + (2t-1-r)
//   upper half (rows 0..t-1),  column j  -> 2st + t + 1 + k(2s-1) + 2(j-1)
// with k = (t-1) - r counting rows upward. The maximum label is 4ts = q.
GracefulLabeling gts_labeling(GtsParams params);

struct SerialOrder {
  std::vector<int> rank;  // node -> 1..p, position in ascending label order
};

SerialOrder gts_serial_order(GtsParams params);

// Full check with named violations (duplicate or out-of-range node labels,
// duplicate or missing edge labels).
GracefulReport verify_graceful(const Graph& g, const GracefulLabeling& labeling);

inline constexpr std::int64_t kDefaultGracefulBudget = 10'000'000;

enum class SearchOutcome { found, absent, inconclusive };

struct GracefulSearchResult {
  SearchOutcome outcome = SearchOutcome::inconclusive;
  GracefulLabeling labeling;     // populated when outcome == found
  std::int64_t assignments = 0;  // node-label assignments attempted
};

// Backtracking search. Seeds the forced edge: label q only arises from an
// adjacent pair labeled {0, q}, so the search branches over which edge
// carries it (one orientation; the complement labeling covers the other).
// "absent" is reported only when the whole space was exhausted in budget.
GracefulSearchResult search_graceful(const Graph& g, std::int64_t budget = kDefaultGracefulBudget);

}  // namespace euler
