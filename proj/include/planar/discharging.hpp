#pragma once

#include <string>
#include <vector>

#include "planar/configuration.hpp"
#include "planar/plane_graph.hpp"
#include "planar/rational.hpp"

namespace planar {

enum class RuleId {
  R1_1,
  R1_2,
  R2_1,
  R2_2,
  R2_3,
  R3_1,
  R3_2,
  R4_1,
  R4_2,
  R4_3,
  R4_4,
  R5,
  R6,
};

std::string rule_name(RuleId r);

struct Transfer {
  bool source_is_face = false;
  int source = -1;
  int target_face = -1;
  Rational amount;
  RuleId rule = RuleId::R1_1;
  std::string branch;
};

// A maximal edge-connected group of at least two 3-faces. Typed "trio" or
// "wheel" when the face set matches one exactly, otherwise "untyped";
// redistribution applies to all of them.
struct Cluster {
  std::vector<int> faces;  // sorted
  std::string type;
  int type_index = -1;
};

struct NoBranchNote {
  int vertex = -1;
  int face = -1;
  std::string group;
};

struct ConflictingClassification : std::logic_error {
  explicit ConflictingClassification(const std::string& m) : std::logic_error(m) {}
};

struct TransferLedger {
  std::vector<Transfer> entries;
  std::vector<Cluster> clusters;
  std::vector<NoBranchNote> no_branch;
};

struct ChargeState {
  std::vector<Rational> vertex_charge;
  std::vector<Rational> face_charge;
  Rational total() const {
    Rational t;
    for (const auto& c : vertex_charge) t += c;
    for (const auto& c : face_charge) t += c;
    return t;
  }
};

struct ElementRef {
  bool is_face = false;
  int id = -1;
  std::string name() const { return (is_face ? "f" : "v") + std::to_string(id); }
};

struct ChargeSummary {
  Rational sum;
  std::vector<ElementRef> negative_elements;
};

// mu(v) = 2 d(v) - 6 and mu(f) = d(f) - 6; the totals always add to -12 on a
// connected embedding.
ChargeState initial_charges(const PlaneGraph& g);

// Executes R1-R5 per qualifying incidence, then the R6 redistribution over
// each cluster, producing a deterministic, conservation-checked ledger.
TransferLedger apply_rules(const PlaneGraph& g, const Classification& cls);

ChargeState final_charges(const PlaneGraph& g, const TransferLedger& ledger);

ChargeSummary summarize(const ChargeState& state);

}  // namespace planar
