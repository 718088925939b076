#pragma once

#include <string>
#include <vector>

#include "planar/discharging.hpp"

namespace planar {

// One audited element: a vertex, a face, or a whole cluster (trio/wheel
// totals are judged as a unit). claim is "eq" when the case arithmetic pins
// an exact value and "ge" when it only bounds from below.
struct CaseAuditEntry {
  std::string element;  // "v3", "f7", "cluster(f1,f2,f5)"
  std::string case_label;
  std::string claim;  // "eq" | "ge"
  Rational claimed;
  Rational actual;
  bool agrees = false;
};

struct UncoveredElement {
  std::string element;
  std::string reason;
};

// Elements matching no enumerated configuration land in `uncovered`; that
// list is the audit's completeness surface on arbitrary input.
struct CaseAudit {
  std::vector<CaseAuditEntry> entries;
  std::vector<UncoveredElement> uncovered;
};

CaseAudit case_audit(const PlaneGraph& g, const Classification& cls,
                     const TransferLedger& ledger, const ChargeState& final_state);

}  // namespace planar
