#include "planar/report.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

namespace planar {

nlohmann::ordered_json rational_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["num"] = rational_num(r);
  j["den"] = rational_den(r);
  return j;
}

namespace {

using Json = nlohmann::ordered_json;

Json label_list(const GraphDocument& doc, const std::vector<int>& vs) {
  Json arr = Json::array();
  for (int v : vs) arr.push_back(doc.label(v));
  return arr;
}

Json edge_json(const GraphDocument& doc, const Edge& e) {
  Json arr = Json::array();
  arr.push_back(doc.label(e.u));
  arr.push_back(doc.label(e.v));
  return arr;
}

Json face_json(const GraphDocument& doc, const PlaneGraph& g, int f) {
  Json j;
  j["id"] = f;
  j["degree"] = g.face_degree(f);
  j["boundary"] = label_list(doc, g.face(f).boundary);
  return j;
}

Json histogram(const std::vector<int>& values) {
  std::map<int, int> counts;
  for (int v : values) counts[v]++;
  Json j = Json::object();
  for (auto [k, c] : counts) j[std::to_string(k)] = c;
  return j;
}

Json graph_summary(const GraphDocument& doc, const PlaneGraph& g) {
  Json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["faces"] = g.face_count();
  j["has_bridge"] = g.has_bridge();
  std::vector<int> vd, fd;
  for (int v = 0; v < g.vertex_count(); ++v) vd.push_back(g.vertex_degree(v));
  for (int f = 0; f < g.face_count(); ++f) fd.push_back(g.face_degree(f));
  j["vertex_degree_histogram"] = histogram(vd);
  j["face_degree_histogram"] = histogram(fd);
  return j;
}

Json cycle_json(const GraphDocument& doc, const CycleIndex& index, int id) {
  const Cycle& c = index.cycle(id);
  Json j;
  j["id"] = id;
  j["length"] = c.length();
  j["vertices"] = label_list(doc, c.vertices);
  if (!c.chords.empty()) {
    Json arr = Json::array();
    for (const Edge& e : c.chords) arr.push_back(edge_json(doc, e));
    j["chords"] = std::move(arr);
  }
  j["is_face_boundary"] = c.is_face_boundary;
  return j;
}

Json hypothesis_json(const GraphDocument& doc, const CycleIndex& index,
                     const HypothesisReport& r) {
  Json j;
  j["i"] = r.i;
  j["holds"] = r.holds;
  Json ws = Json::array();
  for (const HypothesisWitness& w : r.witnesses) {
    Json wj;
    wj["cycle"] = cycle_json(doc, index, w.cycle_id);
    Json adj = Json::array();
    for (int c : w.adjacent_cycles) adj.push_back(cycle_json(doc, index, c));
    wj["adjacent"] = std::move(adj);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

Json prop2_json(const GraphDocument& doc, const PlaneGraph& g,
                const CycleIndex& index, const std::vector<Prop2Finding>& findings) {
  Json arr = Json::array();
  for (const Prop2Finding& f : findings) {
    Json j;
    j["item"] = f.item;
    if (f.base_cycle >= 0) j["base_cycle"] = cycle_json(doc, index, f.base_cycle);
    if (f.base_face >= 0) j["base_face"] = face_json(doc, g, f.base_face);
    if (f.wheel_hub >= 0) j["wheel_hub"] = doc.label(f.wheel_hub);
    if (!f.chords.empty()) {
      Json cj = Json::array();
      for (const Edge& e : f.chords) cj.push_back(edge_json(doc, e));
      j["chords"] = std::move(cj);
    }
    Json ws = Json::array();
    for (const auto& w : f.witnesses) {
      Json wj;
      wj["role"] = w.role;
      if (!w.sub_cycle.empty()) wj["sub_cycle"] = label_list(doc, w.sub_cycle);
      wj["partner_cycle"] = cycle_json(doc, index, w.partner_cycle);
      wj["shared_edge"] = edge_json(doc, w.shared);
      ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    arr.push_back(std::move(j));
  }
  return arr;
}

Json taxonomy_json(const GraphDocument& doc, const PlaneGraph& g,
                   const Classification& cls) {
  Json j;
  Json flaws = Json::array();
  for (const VertexProfile& p : cls.profiles())
    if (p.is_flaw) flaws.push_back(doc.label(p.vertex));
  j["flaw_vertices"] = std::move(flaws);

  Json profiles = Json::array();
  for (const VertexProfile& p : cls.profiles()) {
    Json pj;
    pj["vertex"] = doc.label(p.vertex);
    pj["degree"] = p.degree;
    pj["incident_face_degrees"] = p.incident_face_degrees;
    pj["is_flaw"] = p.is_flaw;
    pj["good"] = p.good;
    profiles.push_back(std::move(pj));
  }
  j["vertex_profiles"] = std::move(profiles);

  Json poor = Json::array();
  for (int f : cls.poor_faces()) poor.push_back(face_json(doc, g, f));
  j["poor_5faces"] = std::move(poor);

  Json trios = Json::array();
  for (const Trio& t : cls.trios()) {
    Json tj;
    tj["faces"] = t.faces;
    tj["worst"] = doc.label(t.worst);
    tj["worse"] = label_list(doc, t.worse);
    tj["bad"] = label_list(doc, t.bad);
    trios.push_back(std::move(tj));
  }
  j["trios"] = std::move(trios);

  Json wheels = Json::array();
  for (const WheelW5& w : cls.wheels()) {
    Json wj;
    wj["hub"] = doc.label(w.hub);
    wj["externals"] = label_list(doc, w.externals);
    wj["faces"] = w.faces;
    wheels.push_back(std::move(wj));
  }
  j["wheels"] = std::move(wheels);

  Json lemmas = Json::array();
  for (const auto& v : lemma_poor_source_violations(g)) {
    Json lj;
    lj["lemma"] = v.lemma;
    lj["face_a"] = v.face_a;
    lj["face_b"] = v.face_b;
    lj["vertex"] = doc.label(v.vertex);
    lemmas.push_back(std::move(lj));
  }
  for (const auto& v : lemma_shared_edge_violations(g)) {
    Json lj;
    lj["lemma"] = v.lemma;
    lj["face_a"] = v.face_a;
    lj["face_b"] = v.face_b;
    lj["vertex"] = doc.label(v.vertex);
    lemmas.push_back(std::move(lj));
  }
  j["lemma_violations"] = std::move(lemmas);
  return j;
}

Json ledger_json(const GraphDocument& doc, const TransferLedger& ledger) {
  Json entries = Json::array();
  for (const Transfer& t : ledger.entries) {
    Json tj;
    tj["source"] = (t.source_is_face ? "f" + std::to_string(t.source)
                                     : doc.label(t.source));
    tj["target"] = "f" + std::to_string(t.target_face);
    tj["amount"] = rational_json(t.amount);
    tj["rule"] = rule_name(t.rule);
    tj["branch"] = t.branch;
    entries.push_back(std::move(tj));
  }
  Json j;
  j["entries"] = std::move(entries);
  Json clusters = Json::array();
  for (const Cluster& c : ledger.clusters) {
    Json cj;
    cj["faces"] = c.faces;
    cj["type"] = c.type;
    clusters.push_back(std::move(cj));
  }
  j["clusters"] = std::move(clusters);
  Json nb = Json::array();
  for (const NoBranchNote& n : ledger.no_branch) {
    Json nj;
    nj["vertex"] = doc.label(n.vertex);
    nj["face"] = n.face;
    nj["group"] = n.group;
    nb.push_back(std::move(nj));
  }
  j["no_branch"] = std::move(nb);
  return j;
}

Json audit_json(const CaseAudit& audit) {
  Json entries = Json::array();
  for (const CaseAuditEntry& e : audit.entries) {
    Json ej;
    ej["element"] = e.element;
    ej["case"] = e.case_label;
    ej["claim"] = e.claim;
    ej["claimed"] = rational_json(e.claimed);
    ej["actual"] = rational_json(e.actual);
    ej["agrees"] = e.agrees;
    entries.push_back(std::move(ej));
  }
  Json unc = Json::array();
  for (const UncoveredElement& u : audit.uncovered) {
    Json uj;
    uj["element"] = u.element;
    uj["reason"] = u.reason;
    unc.push_back(std::move(uj));
  }
  Json j;
  j["entries"] = std::move(entries);
  j["uncovered"] = std::move(unc);
  return j;
}

Json discharge_json(const GraphDocument& doc, const PlaneGraph& g, bool full_ledger) {
  Classification cls(g);
  TransferLedger ledger = apply_rules(g, cls);
  ChargeState init = initial_charges(g);
  ChargeState fin = final_charges(g, ledger);
  ChargeSummary summary = summarize(fin);

  Json j;
  j["initial_sum"] = rational_json(init.total());
  j["final_sum"] = rational_json(summary.sum);
  Json neg = Json::array();
  for (const ElementRef& e : summary.negative_elements) {
    Json nj;
    nj["element"] = e.is_face ? e.name() : doc.label(e.id);
    nj["kind"] = e.is_face ? "face" : "vertex";
    nj["final_charge"] =
        rational_json(e.is_face ? fin.face_charge[e.id] : fin.vertex_charge[e.id]);
    neg.push_back(std::move(nj));
  }
  j["negative_elements"] = std::move(neg);

  if (full_ledger) {
    Json charges = Json::object();
    Json vc = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
      Json cj;
      cj["vertex"] = doc.label(v);
      cj["initial"] = rational_json(init.vertex_charge[v]);
      cj["final"] = rational_json(fin.vertex_charge[v]);
      vc.push_back(std::move(cj));
    }
    Json fc = Json::array();
    for (int f = 0; f < g.face_count(); ++f) {
      Json cj;
      cj["face"] = f;
      cj["degree"] = g.face_degree(f);
      cj["initial"] = rational_json(init.face_charge[f]);
      cj["final"] = rational_json(fin.face_charge[f]);
      fc.push_back(std::move(cj));
    }
    charges["vertices"] = std::move(vc);
    charges["faces"] = std::move(fc);
    j["charges"] = std::move(charges);
    j["ledger"] = ledger_json(doc, ledger);
  } else {
    j["transfer_count"] = ledger.entries.size();
  }
  j["case_audit"] = audit_json(case_audit(g, cls, ledger, fin));
  return j;
}

Json gadget_entries_json() {
  Json arr = Json::array();
  for (const GadgetReportEntry& e : verify_gadget_lemmas()) {
    Json ej;
    ej["name"] = e.name;
    ej["description"] = e.description;
    ej["claim"] = e.claim;
    ej["result"] = e.result;
    ej["agrees"] = e.agrees;
    if (!e.note.empty()) ej["note"] = e.note;
    if (e.counterexample) {
      Json lists = Json::array();
      for (const auto& l : *e.counterexample) lists.push_back(l);
      ej["counterexample"] = std::move(lists);
    }
    arr.push_back(std::move(ej));
  }
  return arr;
}

}  // namespace

nlohmann::ordered_json analysis_report(const GraphDocument& doc, const PlaneGraph& g,
                                       const AnalyzeOptions& opts) {
  Json j;
  j["graph"] = graph_summary(doc, g);

  CycleIndex index(g, std::max(6, opts.max_cycle_len));
  j["cycle_count"] = index.cycles().size();

  std::vector<int> is;
  if (opts.hypothesis_i)
    is.push_back(opts.hypothesis_i);
  else
    is = {3, 4, 5, 6};
  Json hyp = Json::array();
  if (opts.jobs > 1) {
    std::vector<std::future<HypothesisReport>> futs;
    for (int i : is)
      futs.push_back(std::async(std::launch::async,
                                [&index, i] { return hypothesis_holds(index, i); }));
    for (auto& f : futs) {
      HypothesisReport r = f.get();
      hyp.push_back(hypothesis_json(doc, index, r));
    }
  } else {
    for (int i : is) hyp.push_back(hypothesis_json(doc, index, hypothesis_holds(index, i)));
  }
  j["hypothesis"] = std::move(hyp);
  j["prop2_findings"] = prop2_json(doc, g, index, prop2_violations(index));

  Classification cls(g);
  j["taxonomy"] = taxonomy_json(doc, g, cls);
  j["discharging"] = discharge_json(doc, g, false);
  if (opts.include_gadgets) j["gadgets"] = gadget_entries_json();
  return j;
}

nlohmann::ordered_json discharge_report(const GraphDocument& doc, const PlaneGraph& g) {
  Json j;
  j["graph"] = graph_summary(doc, g);
  j["discharging"] = discharge_json(doc, g, true);
  return j;
}

nlohmann::ordered_json gadget_report() {
  Json j;
  j["gadgets"] = gadget_entries_json();
  return j;
}

nlohmann::ordered_json choosable_report(const GraphDocument& doc, const PlaneGraph& g,
                                        int k, int smoke_samples, unsigned seed) {
  Json j;
  j["graph"] = graph_summary(doc, g);
  j["k"] = k;
  ColorGraph cg = ColorGraph::from_plane_graph(g);
  ChoosabilityResult res = k_choosable(cg, k);
  j["choosable"] = res.always;
  if (res.bad_assignment) {
    Json lists = Json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
      lists[doc.label(v)] = (*res.bad_assignment)[v];
    j["bad_assignment"] = std::move(lists);
  }
  if (res.always && smoke_samples > 0) {
    auto failure = sample_assignment_failures(cg, k, smoke_samples, seed);
    Json sj;
    sj["samples"] = smoke_samples;
    sj["seed"] = seed;
    sj["all_colorable"] = !failure.has_value();
    j["smoke_check"] = std::move(sj);
  }
  return j;
}

namespace {

void render_value(std::ostream& os, const Json& v, int indent);

void render_object(std::ostream& os, const Json& obj, int indent) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    os << std::string(indent, ' ') << it.key() << ": ";
    const Json& v = it.value();
    if (v.is_object() && v.contains("num") && v.contains("den") && v.size() == 2) {
      long long num = v["num"].get<long long>();
      long long den = v["den"].get<long long>();
      os << num;
      if (den != 1) os << "/" << den;
      os << "\n";
    } else if (v.is_structured() && !v.empty()) {
      os << "\n";
      render_value(os, v, indent + 2);
    } else {
      os << v.dump() << "\n";
    }
  }
}

void render_value(std::ostream& os, const Json& v, int indent) {
  if (v.is_object()) {
    render_object(os, v, indent);
  } else if (v.is_array()) {
    int i = 0;
    for (const Json& item : v) {
      os << std::string(indent, ' ') << "- [" << i++ << "]\n";
      if (item.is_structured())
        render_value(os, item, indent + 2);
      else
        os << std::string(indent + 2, ' ') << item.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const nlohmann::ordered_json& report) {
  std::ostringstream os;
  render_value(os, report, 0);
  os << "note: rational values are exact; any decimal readings are approximations\n";
  return os.str();
}

}  // namespace planar
