#pragma once

#include <optional>
#include <vector>

#include "planar/plane_graph.hpp"

namespace planar {

// A simple cycle in canonical form: the smallest vertex comes first and the
// second entry is the smaller of the first vertex's two cycle neighbors, so
// each cycle is listed once up to rotation and reflection.
struct Cycle {
  std::vector<int> vertices;
  std::vector<Edge> edges;   // consecutive pairs, sorted
  std::vector<Edge> chords;  // graph edges joining non-consecutive cycle vertices
  bool is_face_boundary = false;
  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const Cycle& o) const { return vertices == o.vertices; }
};

enum class CycleRelation {
  disjoint,           // no shared vertex
  intersecting_only,  // shared vertex but no shared edge
  exactly_one_edge,   // exactly one shared edge
  adjacent,           // two or more shared edges
};

struct AdjacencyFinding {
  int cycle_a = -1;
  int cycle_b = -1;
  CycleRelation relation = CycleRelation::disjoint;
  std::vector<Edge> shared_edges;
  std::vector<int> shared_vertices;
  bool shares_edge() const {
    return relation == CycleRelation::exactly_one_edge ||
           relation == CycleRelation::adjacent;
  }
};

struct SameCycleError : std::runtime_error {
  SameCycleError() : std::runtime_error("cycle compared with itself") {}
};

// All simple cycles of G up to max_len, canonically ordered, plus lookup
// structures shared by the detectors. Enumeration happens once; everything
// downstream works off the index.
class CycleIndex {
 public:
  static constexpr int kMinLen = 3;
  static constexpr int kMaxLen = 8;

  CycleIndex(const PlaneGraph& g, int max_len);

  const PlaneGraph& graph() const { return *g_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const Cycle& cycle(int id) const { return cycles_.at(id); }
  int max_len() const { return max_len_; }

  const std::vector<int>& of_length(int len) const;
  // Ids of cycles of length len sharing at least one edge with `c`,
  // excluding `c` itself.
  std::vector<int> adjacent_of_length(int cycle_id, int len) const;
  std::vector<int> cycles_through_edge(const Edge& e) const;

 private:
  const PlaneGraph* g_;
  int max_len_;
  std::vector<Cycle> cycles_;
  std::vector<std::vector<int>> by_length_;   // index kMinLen..max
  std::vector<std::vector<int>> by_edge_id_;  // per edge id of g
};

AdjacencyFinding cycle_adjacency(const CycleIndex& index, int cycle_a, int cycle_b);

struct HypothesisWitness {
  int cycle_id;                       // the offending i-cycle
  std::vector<int> adjacent_cycles;   // one per other length, ascending length
};

struct HypothesisReport {
  int i = 0;
  bool holds = true;
  std::vector<HypothesisWitness> witnesses;
};

// Checks the adjacency hypothesis for i in {3,4,5,6}: holds unless some
// i-cycle is simultaneously edge-adjacent to cycles of the three other
// lengths in {3,4,5,6}.
HypothesisReport hypothesis_holds(const CycleIndex& index, int i);

struct Prop2Finding {
  int item = 0;  // 1..4
  // item 1: base_cycle = the 4-cycle, chord = the specific chord; witnesses
  //         pair a sharing sub-cycle (the 4-cycle itself or a chord triangle,
  //         labeled by role) with a separate 4- or 5-cycle.
  // item 2: base_face = the 4-face; witnesses are the sharing 3-cycles
  //         (role "three-cycle") and 4-minus-cycles (role "small-cycle");
  //         some pair of distinct witnesses exists.
  // item 3: base_cycle = the chorded 5-cycle; witnesses = two or more
  //         5-cycles each sharing exactly one edge with it.
  // item 4: wheel_hub identifies the wheel; witnesses = 6-minus-cycles
  //         sharing exactly one edge with the wheel's edge set.
  int base_cycle = -1;
  int base_face = -1;
  int wheel_hub = -1;
  std::vector<Edge> chords;
  struct Witness {
    std::string role;            // "cycle", "chord-triangle", "three-cycle", ...
    std::vector<int> sub_cycle;  // vertex list of the sharing sub-cycle (item 1)
    int partner_cycle = -1;
    Edge shared;
  };
  std::vector<Witness> witnesses;
};

// Detects the four forbidden configurations on arbitrary input. An empty
// result means none of them occurs. Requires max_len >= 6.
std::vector<Prop2Finding> prop2_violations(const CycleIndex& index);

}  // namespace planar
