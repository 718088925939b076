#include <doctest.h>

#include <map>
#include <set>
#include <set>

#include "planar/case_audit.hpp"
#include "planar/discharging.hpp"
#include "planar/generators.hpp"

using namespace planar;

namespace {

struct Run {
  PlaneGraph g;
  Classification cls;
  TransferLedger ledger;
  ChargeState initial;
  ChargeState final_state;
  explicit Run(PlaneGraph graph)
      : g(std::move(graph)),
        cls(g),
        ledger(apply_rules(g, cls)),
        initial(initial_charges(g)),
        final_state(final_charges(g, ledger)) {}
};

const CaseAuditEntry* find_entry(const CaseAudit& audit, const std::string& element) {
  for (const CaseAuditEntry& e : audit.entries)
    if (e.element == element) return &e;
  return nullptr;
}

// Flaw 4-vertex whose isolated 3-faces realize both special branches of the
// degree-4 rule on isolated triangles: one (4,5+,5+)-face and one (4,4-,4-)
// fallback, via 4-cycles glued around two ring vertices.
PlaneGraph make_flaw_showcase() {
  PlaneGraph base = make_flaw_vertex_fixture();
  RotationBuilder b(base.rotation());
  b.glue_cycle_on_dart(1, 0, 4);  // raises 0 and 1
  b.glue_cycle_on_dart(0, 7, 4);  // raises 0 to degree 5
  b.glue_cycle_on_dart(2, 1, 4);  // raises 1 to degree 5
  return b.build();
}

}  // namespace

TEST_CASE("initial charges follow 2d-6 and d-6") {
  PlaneGraph g = make_two_triangle_vertex_fixture();
  ChargeState s = initial_charges(g);
  CHECK(s.vertex_charge[10] == rat(2));  // the degree-4 center
  for (const Face& f : g.faces()) {
    if (f.degree() == 3) CHECK(s.face_charge[f.id] == rat(-3));
    if (f.degree() == 6) CHECK(s.face_charge[f.id] == rat(0));
  }
  CHECK(s.total() == rat(-12));
}

TEST_CASE("conservation: initial and final totals are exactly -12 on the battery") {
  for (const NamedGraph& ng : fixture_battery()) {
    INFO(ng.name);
    Run run(ng.graph);
    CHECK(run.initial.total() == rat(-12));
    CHECK(run.final_state.total() == rat(-12));
  }
}

TEST_CASE("rule amounts times 120 are integers on the battery") {
  // Redistribution inside untyped clusters may divide by the cluster size,
  // so the 120-divisibility claim covers the rule constants and the
  // trio/wheel redistributions.
  for (const NamedGraph& ng : fixture_battery()) {
    INFO(ng.name);
    Run run(ng.graph);
    std::set<int> typed_faces;
    for (const Cluster& c : run.ledger.clusters)
      if (c.type != "untyped")
        typed_faces.insert(c.faces.begin(), c.faces.end());
    for (const Transfer& t : run.ledger.entries) {
      if (t.rule == RuleId::R6 && !typed_faces.count(t.target_face)) continue;
      CHECK((t.amount * rat(120)).denominator() == BigInt(1));
    }
  }
}

TEST_CASE("exactly one branch fires per qualifying incidence") {
  for (const NamedGraph& ng : fixture_battery()) {
    INFO(ng.name);
    Run run(ng.graph);
    // vertex->face entries per pair must match the number of boundary
    // occurrences (one rule application per incidence)
    std::map<std::pair<int, int>, int> entries;
    for (const Transfer& t : run.ledger.entries)
      if (!t.source_is_face) entries[{t.source, t.target_face}]++;
    std::map<std::pair<int, int>, int> noted;
    for (const NoBranchNote& n : run.ledger.no_branch) noted[{n.vertex, n.face}]++;
    for (const auto& [key, count] : entries) {
      auto [v, f] = key;
      int occurrences = 0;
      for (int b : run.g.face(f).boundary)
        if (b == v) ++occurrences;
      CHECK(count + noted[key] <= occurrences);
    }
  }
}

TEST_CASE("ledger is deterministic across runs") {
  PlaneGraph g = make_trio_fixture();
  Classification cls(g);
  TransferLedger a = apply_rules(g, cls);
  TransferLedger b = apply_rules(g, cls);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].source == b.entries[i].source);
    CHECK(a.entries[i].target_face == b.entries[i].target_face);
    CHECK(a.entries[i].amount == b.entries[i].amount);
    CHECK(a.entries[i].rule == b.entries[i].rule);
  }
}

TEST_CASE("redistribution equalizes each cluster (idempotence)") {
  for (const NamedGraph& ng : fixture_battery()) {
    Run run(ng.graph);
    for (const Cluster& c : run.ledger.clusters) {
      const Rational first = run.final_state.face_charge[c.faces.front()];
      for (int f : c.faces) CHECK(run.final_state.face_charge[f] == first);
    }
  }
}

TEST_CASE("flaw showcase: isolated-triangle branches and 5-face branches") {
  Run run(make_flaw_showcase());
  const int v = 8;
  REQUIRE(run.cls.is_flaw(v));
  CHECK(run.g.vertex_degree(0) == 5);
  CHECK(run.g.vertex_degree(1) == 5);

  std::map<std::string, int> branch_counts;
  Rational sent;
  for (const Transfer& t : run.ledger.entries) {
    if (t.source_is_face || t.source != v) continue;
    branch_counts[t.branch]++;
    sent += t.amount;
  }
  CHECK(branch_counts["flaw-on-(4,5+,5+)"] == 1);  // 3/5 to the (4,5,5)-face
  CHECK(branch_counts["otherwise"] == 1);          // 1 to the (4,3,3)-face
  CHECK(branch_counts["flaw-two-big-neighbors"] == 2);  // 1/5 to each 5-face
  CHECK(sent == rat(3, 5) + rat(1) + rat(2, 5));
  CHECK(run.final_state.vertex_charge[v] == rat(0));
}

TEST_CASE("base flaw fixture hits the no-branch audit note") {
  Run run(make_flaw_vertex_fixture());
  // flaw vertex with degree-3 neighbors: the 5-face rule has no branch
  REQUIRE(run.ledger.no_branch.size() == 2);
  for (const NoBranchNote& n : run.ledger.no_branch) {
    CHECK(n.vertex == 8);
    CHECK(run.g.face_degree(n.face) == 5);
  }
}

TEST_CASE("wheel hub pays 1/2 to each of its four triangles") {
  Run run(make_wheel(5));
  int hub_entries = 0;
  for (const Transfer& t : run.ledger.entries) {
    if (!t.source_is_face && t.source == 0 && t.rule == RuleId::R2_1) {
      CHECK(t.amount == rat(1, 2));
      CHECK(t.branch == "hub");
      ++hub_entries;
    }
  }
  CHECK(hub_entries == 4);
  CHECK(run.final_state.vertex_charge[0] == rat(0));
}

TEST_CASE("7-plus faces beside a wheel pay 1/8 across each rim edge") {
  PlaneGraph wheel = make_wheel(5);
  RotationBuilder b(wheel.rotation());
  b.glue_cycle_on_dart(2, 1, 7);
  // gluing the 7-cycle also inflates the old rim face to a 9-walk, so all
  // four rim edges now border a 7+-face
  Run run(b.build());
  REQUIRE(run.cls.wheels().size() == 1);
  int r5 = 0, from_seven = 0;
  for (const Transfer& t : run.ledger.entries)
    if (t.rule == RuleId::R5) {
      CHECK(t.source_is_face);
      CHECK(t.amount == rat(1, 8));
      CHECK(run.g.face_degree(t.source) >= 7);
      if (run.g.face_degree(t.source) == 7) ++from_seven;
      CHECK(run.g.face_degree(t.target_face) == 3);
      ++r5;
    }
  CHECK(r5 == 4);
  CHECK(from_seven == 1);
}

TEST_CASE("trio fixture reproduces the trio-cluster arithmetic") {
  Run run(make_trio_fixture());
  REQUIRE(run.ledger.clusters.size() >= 1);
  const Cluster* trio_cluster = nullptr;
  for (const Cluster& c : run.ledger.clusters)
    if (c.type == "trio") trio_cluster = &c;
  REQUIRE(trio_cluster);

  Rational total;
  for (int f : trio_cluster->faces) total += run.final_state.face_charge[f];
  CHECK(total == rat(0));
  for (int f : trio_cluster->faces)
    CHECK(run.final_state.face_charge[f] == rat(0));

  const Trio& t = run.cls.trios()[0];
  CHECK(run.final_state.vertex_charge[t.worst] == rat(0));

  // worst sends 2/3 three times; worse vertices 1 per face; bad vertices 1.5
  std::map<int, Rational> sent;
  for (const Transfer& tr : run.ledger.entries)
    if (!tr.source_is_face &&
        std::binary_search(trio_cluster->faces.begin(), trio_cluster->faces.end(),
                           tr.target_face))
      sent[tr.source] += tr.amount;
  CHECK(sent[t.worst] == rat(2));
  for (int v : t.worse) CHECK(sent[v] == rat(2));
  for (int v : t.bad) CHECK(sent[v] == rat(3, 2));
}

TEST_CASE("case audit: the exact-value configurations") {
  SUBCASE("two isolated triangles at a 4-vertex") {
    Run run(make_two_triangle_vertex_fixture());
    CaseAudit audit = case_audit(run.g, run.cls, run.ledger, run.final_state);
    const CaseAuditEntry* e = find_entry(audit, "v10");
    REQUIRE(e);
    CHECK(e->case_label == "1.2-two-triangles");
    CHECK(e->claim == "eq");
    CHECK(e->claimed == rat(0));
    CHECK(e->actual == rat(0));
    CHECK(e->agrees);
  }
  SUBCASE("wheel hub") {
    Run run(make_wheel(5));
    CaseAudit audit = case_audit(run.g, run.cls, run.ledger, run.final_state);
    const CaseAuditEntry* e = find_entry(audit, "v0");
    REQUIRE(e);
    CHECK(e->case_label == "1.2-hub");
    CHECK(e->claimed == rat(0));
    CHECK(e->agrees);
  }
  SUBCASE("isolated triangle with no flaw vertex") {
    Run run(make_isolated_triangle_fixture());
    CaseAudit audit = case_audit(run.g, run.cls, run.ledger, run.final_state);
    int abc_face = -1;
    for (const Face& f : run.g.faces()) {
      if (f.degree() != 3) continue;
      bool all4 = true;
      for (int v : f.boundary)
        if (run.g.vertex_degree(v) != 4) all4 = false;
      if (all4) abc_face = f.id;
    }
    REQUIRE(abc_face >= 0);
    const CaseAuditEntry* e = find_entry(audit, "f" + std::to_string(abc_face));
    REQUIRE(e);
    CHECK(e->case_label == "5-no-flaw");
    CHECK(e->claim == "eq");
    CHECK(e->actual == rat(0));
    CHECK(e->agrees);
  }
  SUBCASE("trio cluster with degree-4 worst/worse and degree-5 bad vertices") {
    Run run(make_trio_fixture());
    CaseAudit audit = case_audit(run.g, run.cls, run.ledger, run.final_state);
    const CaseAuditEntry* found = nullptr;
    for (const CaseAuditEntry& e : audit.entries)
      if (e.case_label == "6.2-worse-4-4-bad-big") found = &e;
    REQUIRE(found);
    CHECK(found->claim == "eq");
    CHECK(found->claimed == rat(0));
    CHECK(found->actual == rat(0));
    CHECK(found->agrees);
    // the worst vertex is also an exact three-triangle case
    const CaseAuditEntry* worst = find_entry(audit, "v" + std::to_string(run.cls.trios()[0].worst));
    REQUIRE(worst);
    CHECK(worst->case_label == "1.2-three-triangles");
    CHECK(worst->agrees);
  }
}

TEST_CASE("audit exposes uncovered elements on non-theorem graphs") {
  Run run(make_wheel(5));  // externals have degree 3
  CaseAudit audit = case_audit(run.g, run.cls, run.ledger, run.final_state);
  CHECK(audit.uncovered.size() >= 4);
  bool below = false;
  for (const UncoveredElement& u : audit.uncovered)
    if (u.reason == "degree below 4") below = true;
  CHECK(below);
}

TEST_CASE("negative final charges are reported, conservation still exact") {
  Run run(make_wheel(5));
  ChargeSummary s = summarize(run.final_state);
  CHECK(s.sum == rat(-12));
  CHECK_FALSE(s.negative_elements.empty());
}

TEST_CASE("octahedron: every vertex is a hub, faces settle at -3/2") {
  Run run(make_octahedron());
  for (int v = 0; v < 6; ++v) CHECK(run.final_state.vertex_charge[v] == rat(0));
  REQUIRE(run.ledger.clusters.size() == 1);
  CHECK(run.ledger.clusters[0].type == "untyped");
  for (int f = 0; f < run.g.face_count(); ++f)
    CHECK(run.final_state.face_charge[f] == rat(-3, 2));
}
