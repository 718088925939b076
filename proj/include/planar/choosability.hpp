#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planar/plane_graph.hpp"

namespace planar {

// Abstract simple graph for the coloring engines; no embedding involved.
struct ColorGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  static ColorGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static ColorGraph from_plane_graph(const PlaneGraph& g);

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edge_list() const;
};

// Per-vertex color lists; colors are arbitrary non-negative ints.
using ListAssignment = std::vector<std::vector<int>>;

struct MissingListError : std::runtime_error {
  MissingListError() : std::runtime_error("list assignment does not cover all vertices") {}
};

struct TooLargeError : std::runtime_error {
  explicit TooLargeError(const std::string& m) : std::runtime_error(m) {}
};

// Proper coloring from the lists, or nullopt when none exists. Exact
// backtracking with smallest-remaining-list ordering.
std::optional<std::vector<int>> l_colorable(const ColorGraph& g,
                                            const ListAssignment& lists);

struct ChoosabilityResult {
  bool always = false;  // choosable / always colorable
  std::optional<ListAssignment> bad_assignment;
};

// Exact k-choosability on desk-scale graphs. Caps: |V| <= 10 for k <= 3 and
// |V| <= 13 for larger k; beyond that TooLargeError.
ChoosabilityResult k_choosable(const ColorGraph& g, int k);

struct ResidualSpec {
  ColorGraph graph;
  std::vector<int> sizes;             // required list size per vertex, 1..4
  bool forbid_all_equal_lists = false;  // quantify over assignments with two
                                        // distinct lists only
};

// True iff the graph is colorable from every assignment with the given list
// sizes. The decision combines exact reductions (degree-slack deletion,
// forced singletons, tree and cycle closed forms, a hit-pattern split on one
// vertex) with a canonicalized enumeration fallback.
ChoosabilityResult residual_always_colorable(const ResidualSpec& spec);

// Random smoke pass: samples k-assignments and checks each is colorable.
// Returns the first failing assignment, if any.
std::optional<ListAssignment> sample_assignment_failures(const ColorGraph& g,
                                                         int k, int samples,
                                                         unsigned seed);

struct GadgetReportEntry {
  std::string name;
  std::string description;
  std::string claim;  // "always-colorable", "pigeonhole", or "none"
  bool result = false;
  bool agrees = false;
  std::string note;
  std::optional<ListAssignment> counterexample;
};

// Builds the list-coloring gadgets behind the structural lemmas and runs the
// residual engine over each, reporting agreement with the claimed outcomes.
std::vector<GadgetReportEntry> verify_gadget_lemmas();

// Gadget builders, exposed for tests.
ColorGraph cycle_graph(int n);
// Wheel on five vertices: rim 0-1-2-3, hub 4. Residual sizes for the stated
// pattern are (2,2,3,3) on the rim (the size-2 pair adjacent) and 4 on the hub.
ColorGraph w5_graph();
// Fans of quadrilaterals around a center vertex 0 with spokes a_1..a_{k+1}
// (closed: k quads wrap around with k spokes).
ColorGraph quad_fan_graph(int quads, bool closed);
std::vector<int> w5_gadget_sizes(bool adjacent_pair, int hub_size = 4);
std::vector<int> quad_fan_sizes(int quads, bool closed);

}  // namespace planar
