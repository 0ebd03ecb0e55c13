#pragma once

#include <cstdint>
#include <vector>

#include "euler/cycles.hpp"
#include "euler/graph.hpp"

namespace euler {

Graph cycle_graph(int n);

// Chain of cycle blocks; consecutive blocks share exactly one cut node, and
// non-consecutive blocks share none. Euler by construction (degrees 2 and 4);
// its residue profile is exactly the set of block lengths mod 4.
Graph block_cycle_graph(const std::vector<int>& lengths);

// Nodes are the 2^dim bit strings, adjacent when they differ in one bit.
Graph hypercube(int dim);

struct GtsParams {
  int t = 1;
  int s = 1;
};

// The ring family: a 4t-cycle with a K(2,s) spanning each consecutive pair
// of even cycle positions (the odd cycle node between them serves as one of
// the s middle nodes). Order 2t(s+1), size 4ts, Euler, and every simple
// cycle has length divisible by 4.
struct GtsLayout {
  Graph graph;
  int t = 0, s = 0;
  // grid[r][0] is the even cycle node of ring position r (2t rows);
  // grid[r][1..s] are the middle nodes adjacent to the column-0 nodes of
  // rows r and r+1 (mod 2t).
  std::vector<std::vector<int>> grid;
};

GtsLayout gts(GtsParams params);

struct HandleSpec {
  int u = 0, v = 0;
  int path_length = 1;
  int count = 1;
};

// g plus `count` internally disjoint u-v paths of path_length edges each.
// Interior nodes get fresh ids past the existing ones; u and v each gain
// `count` to their degree.
Graph attach_handle(const Graph& g, const HandleSpec& spec);

struct MembershipReport {
  bool eulerian = false;
  CycleTypeProfile profile;
  bool member = false;
};

// Does the graph's cycle-type profile equal the target residue set?
MembershipReport validate_class_membership(const Graph& g, const std::vector<int>& target,
                                           std::int64_t cap = kDefaultCycleCap);

// True when the handle can be repeated: attaching two extra parallel paths
// (two, to keep all degrees even) still leaves every cycle residue inside
// target. Computed by building the bigger graph and enumerating.
bool repeatability_check(const Graph& g, const HandleSpec& spec, const std::vector<int>& target,
                         std::int64_t cap = kDefaultCycleCap);

}  // namespace euler
