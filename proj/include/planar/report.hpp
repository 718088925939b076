#pragma once

#include <json.hpp>

#include "planar/case_audit.hpp"
#include "planar/choosability.hpp"
#include "planar/cycles.hpp"
#include "planar/discharging.hpp"
#include "planar/graph_io.hpp"

namespace planar {

struct AnalyzeOptions {
  int max_cycle_len = 6;
  int hypothesis_i = 0;  // 0 = all of 3,4,5,6
  bool include_gadgets = false;
  int jobs = 1;
};

// Rationals are serialized as {"num": .., "den": ..}; machine output never
// renders decimals. All arrays are canonically ordered so reports are
// byte-identical across runs.
nlohmann::ordered_json rational_json(const Rational& r);

nlohmann::ordered_json analysis_report(const GraphDocument& doc, const PlaneGraph& g,
                                       const AnalyzeOptions& opts);
nlohmann::ordered_json discharge_report(const GraphDocument& doc, const PlaneGraph& g);
nlohmann::ordered_json gadget_report();
nlohmann::ordered_json choosable_report(const GraphDocument& doc, const PlaneGraph& g,
                                        int k, int smoke_samples, unsigned seed);

std::string render_text(const nlohmann::ordered_json& report);

}  // namespace planar
