#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "planar/cycles.hpp"
#include "planar/generators.hpp"

using namespace planar;

namespace {

std::set<std::vector<std::pair<int, int>>> engine_cycle_edge_sets(
    const CycleIndex& index) {
  std::set<std::vector<std::pair<int, int>>> out;
  for (const Cycle& c : index.cycles()) {
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : c.edges) edges.emplace_back(e.u, e.v);
    out.insert(edges);
  }
  return out;
}

}  // namespace

TEST_CASE("C5 has exactly one cycle and it bounds a face") {
  PlaneGraph g = make_cycle(5);
  CycleIndex index(g, 6);
  REQUIRE(index.cycles().size() == 1);
  CHECK(index.cycle(0).length() == 5);
  CHECK(index.cycle(0).is_face_boundary);
  CHECK(index.cycle(0).chords.empty());
}

TEST_CASE("K4 has four triangles and three 4-cycles") {
  PlaneGraph g = make_k4();
  CycleIndex index(g, 6);
  CHECK(index.cycles().size() == 7);
  CHECK(index.of_length(3).size() == 4);
  CHECK(index.of_length(4).size() == 3);
  for (int id : index.of_length(4))
    CHECK(index.cycle(id).chords.size() == 2);
}

TEST_CASE("cycle enumeration is in canonical form") {
  for (const NamedGraph& ng : fixture_battery()) {
    if (ng.graph.vertex_count() > 14) continue;
    CycleIndex index(ng.graph, 6);
    for (const Cycle& c : index.cycles()) {
      int mn = *std::min_element(c.vertices.begin(), c.vertices.end());
      CHECK(c.vertices.front() == mn);
      CHECK(c.vertices[1] < c.vertices.back());
    }
  }
}

TEST_CASE("enumeration agrees with the naive oracle on the battery") {
  for (const NamedGraph& ng : fixture_battery()) {
    INFO(ng.name);
    for (int max_len : {3, 5, 8}) {
      CycleIndex index(ng.graph, max_len);
      CHECK(engine_cycle_edge_sets(index) == oracles::naive_cycles(ng.graph, max_len));
    }
  }
}

TEST_CASE("adjacency relations") {
  PlaneGraph k4 = make_k4();
  CycleIndex index(k4, 6);
  auto t3 = index.of_length(3);
  AdjacencyFinding f = cycle_adjacency(index, t3[0], t3[1]);
  CHECK(f.relation == CycleRelation::exactly_one_edge);
  CHECK(f.shared_edges.size() == 1);
  CHECK(f.shares_edge());
  CHECK_THROWS_AS(cycle_adjacency(index, t3[0], t3[0]), SameCycleError);

  // symmetry across all pairs in a richer graph
  PlaneGraph gadget = make_hypothesis_gadget(true, true, true, false);
  CycleIndex gi(gadget, 6);
  for (std::size_t a = 0; a < gi.cycles().size(); ++a)
    for (std::size_t b = a + 1; b < gi.cycles().size(); ++b) {
      auto ab = cycle_adjacency(gi, static_cast<int>(a), static_cast<int>(b));
      auto ba = cycle_adjacency(gi, static_cast<int>(b), static_cast<int>(a));
      CHECK(ab.relation == ba.relation);
      CHECK(ab.shared_edges == ba.shared_edges);
    }
}

TEST_CASE("vertex-disjoint and vertex-intersecting triangle pairs") {
  // two triangles joined by a bridge
  PlaneGraph joined = PlaneGraph::build_from_rotation(
      {{1, 2}, {2, 0}, {0, 1, 3}, {2, 4, 5}, {5, 3}, {3, 4}});
  CycleIndex ji(joined, 6);
  REQUIRE(ji.of_length(3).size() == 2);
  CHECK(cycle_adjacency(ji, ji.of_length(3)[0], ji.of_length(3)[1]).relation ==
        CycleRelation::disjoint);

  // bowtie: two triangles sharing one vertex
  PlaneGraph bowtie = PlaneGraph::build_from_rotation(
      {{1, 2}, {2, 0}, {0, 1, 3, 4}, {4, 2}, {2, 3}});
  CycleIndex bi(bowtie, 6);
  REQUIRE(bi.of_length(3).size() == 2);
  CHECK(cycle_adjacency(bi, bi.of_length(3)[0], bi.of_length(3)[1]).relation ==
        CycleRelation::intersecting_only);
}

TEST_CASE("hypothesis on the glued-pentagon gadget") {
  PlaneGraph g = make_hypothesis_gadget(true, true, true, false);
  CycleIndex index(g, 6);

  HypothesisReport r5 = hypothesis_holds(index, 5);
  CHECK_FALSE(r5.holds);
  REQUIRE(r5.witnesses.size() >= 1);
  // the witness pentagon really has one adjacent cycle of each other length
  const HypothesisWitness& w = r5.witnesses.front();
  CHECK(index.cycle(w.cycle_id).length() == 5);
  REQUIRE(w.adjacent_cycles.size() == 3);
  std::multiset<int> lens;
  for (int c : w.adjacent_cycles) {
    lens.insert(index.cycle(c).length());
    CHECK(cycle_adjacency(index, w.cycle_id, c).shares_edge());
  }
  CHECK(lens == std::multiset<int>{3, 4, 6});

  // the lone triangle has adjacent 5- and 6-cycles but no adjacent 4-cycle
  HypothesisReport r3 = hypothesis_holds(index, 3);
  CHECK(r3.holds);
}

TEST_CASE("hypothesis is vacuously true on a bare cycle") {
  PlaneGraph g = make_cycle(5);
  CycleIndex index(g, 6);
  CHECK(hypothesis_holds(index, 5).holds);
  CHECK(hypothesis_holds(index, 3).holds);
}

TEST_CASE("edge deletion never flips a holding hypothesis to failing") {
  PlaneGraph g = make_hypothesis_gadget(true, true, true, false);
  CycleIndex base(g, 6);
  REQUIRE(hypothesis_holds(base, 3).holds);
  for (const Edge& e : g.edges()) {
    RotationBuilder b(g.rotation());
    b.remove_edge(e.u, e.v);
    bool built = true;
    PlaneGraph sub = [&]() -> PlaneGraph {
      try {
        return b.build();
      } catch (const GraphError&) {
        built = false;  // removal disconnected the graph; nothing to check
        return make_cycle(3);
      }
    }();
    if (!built) continue;
    CycleIndex si(sub, 6);
    CHECK(hypothesis_holds(si, 3).holds);
  }
}

TEST_CASE("prop2 detectors on their fixtures") {
  auto items_found = [](const PlaneGraph& g) {
    CycleIndex index(g, 6);
    std::multiset<int> items;
    for (const Prop2Finding& f : prop2_violations(index)) items.insert(f.item);
    return items;
  };

  CHECK(items_found(make_cycle(5)).empty());

  auto item1 = items_found(make_prop2_item1_fixture());
  CHECK(item1.count(1) == 1);

  auto item2 = items_found(make_prop2_item2_fixture());
  CHECK(item2.count(2) == 1);

  auto item3 = items_found(make_prop2_item3_fixture());
  CHECK(item3.count(3) >= 1);

  auto item4 = items_found(make_prop2_item4_fixture());
  CHECK(item4.count(4) == 1);
}

TEST_CASE("K4 yields no item-1 finding: every cycle pair shares 0 or 2 edges") {
  PlaneGraph g = make_k4();
  CycleIndex index(g, 6);
  // cross-check by hand enumeration over all pairs
  for (std::size_t a = 0; a < index.cycles().size(); ++a)
    for (std::size_t b = a + 1; b < index.cycles().size(); ++b) {
      auto f = cycle_adjacency(index, static_cast<int>(a), static_cast<int>(b));
      if (index.cycle(a).length() >= 4 || index.cycle(b).length() >= 4)
        CHECK(f.shared_edges.size() != 1);
    }
  for (const Prop2Finding& f : prop2_violations(index)) CHECK(f.item != 1);
}

TEST_CASE("every prop2 witness re-verifies from raw edge sets") {
  for (const NamedGraph& ng : fixture_battery()) {
    if (ng.graph.vertex_count() > 14) continue;
    CycleIndex index(ng.graph, 6);
    for (const Prop2Finding& f : prop2_violations(index)) {
      for (const auto& w : f.witnesses) {
        const Cycle& partner = index.cycle(w.partner_cycle);
        CHECK(std::binary_search(partner.edges.begin(), partner.edges.end(), w.shared));
      }
    }
  }
}

TEST_CASE("invalid arguments") {
  PlaneGraph g = make_cycle(4);
  CHECK_THROWS_AS(CycleIndex(g, 2), std::invalid_argument);
  CHECK_THROWS_AS(CycleIndex(g, 9), std::invalid_argument);
  CycleIndex index(g, 6);
  CHECK_THROWS_AS(hypothesis_holds(index, 7), std::invalid_argument);
}
