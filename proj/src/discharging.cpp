#include "planar/discharging.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>
#include <set>

namespace planar {

std::string rule_name(RuleId r) {
  switch (r) {
    case RuleId::R1_1: return "R1.1";
    case RuleId::R1_2: return "R1.2";
    case RuleId::R2_1: return "R2.1";
    case RuleId::R2_2: return "R2.2";
    case RuleId::R2_3: return "R2.3";
    case RuleId::R3_1: return "R3.1";
    case RuleId::R3_2: return "R3.2";
    case RuleId::R4_1: return "R4.1";
    case RuleId::R4_2: return "R4.2";
    case RuleId::R4_3: return "R4.3";
    case RuleId::R4_4: return "R4.4";
    case RuleId::R5: return "R5";
    case RuleId::R6: return "R6";
  }
  return "?";
}

ChargeState initial_charges(const PlaneGraph& g) {
  ChargeState s;
  s.vertex_charge.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    s.vertex_charge.push_back(rat(2LL * g.vertex_degree(v) - 6));
  s.face_charge.reserve(g.face_count());
  for (int f = 0; f < g.face_count(); ++f)
    s.face_charge.push_back(rat(g.face_degree(f) - 6));
  return s;
}

namespace {

std::vector<Edge> face_edge_list(const Face& f) {
  std::vector<Edge> es;
  for (int i = 0; i < f.degree(); ++i)
    es.emplace_back(f.boundary[i], f.boundary[(i + 1) % f.degree()]);
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

// Distinct 3-faces sharing an edge with f.
std::vector<int> adjacent_three_faces(const PlaneGraph& g, int f) {
  std::set<int> out;
  for (const Edge& e : face_edge_list(g.face(f))) {
    auto [a, b] = g.faces_sharing_edge(e);
    int other = a == f ? b : a;
    if (other != f && g.face_degree(other) == 3) out.insert(other);
  }
  return {out.begin(), out.end()};
}

struct RuleContext {
  const PlaneGraph& g;
  const Classification& cls;
  std::vector<char> three_face_isolated;  // per face id, for 3-faces
  int big_neighbor_count(int v) const {
    int c = 0;
    for (int w : g.neighbors(v))
      if (g.vertex_degree(w) >= 5) ++c;
    return c;
  }
  bool all_neighbors_degree_4(int v) const {
    for (int w : g.neighbors(v))
      if (g.vertex_degree(w) != 4) return false;
    return true;
  }
};

struct BranchResult {
  bool fired = false;
  bool no_branch = false;
  Rational amount;
  const char* branch = "";
};

BranchResult fire(Rational amount, const char* branch) {
  return {true, false, std::move(amount), branch};
}

// R1: 3-face with no adjacent 3-face.
BranchResult rule_r1_1(const RuleContext& ctx, int v, const Face& f) {
  bool flaw = ctx.cls.is_flaw(v);
  std::vector<int> others;
  for (int w : f.boundary)
    if (w != v) others.push_back(ctx.g.vertex_degree(w));
  std::sort(others.begin(), others.end());
  if (flaw && others[0] >= 5) return fire(rat(3, 5), "flaw-on-(4,5+,5+)");
  if (flaw && others[0] == 4 && others[1] >= 5)
    return fire(rat(4, 5), "flaw-on-(4,4,5+)");
  return fire(rat(1), "otherwise");
}

BranchResult rule_r1_2(const RuleContext& ctx, int v, const Face& f) {
  std::vector<int> other_ids;
  for (int w : f.boundary)
    if (w != v) other_ids.push_back(w);
  int fours = 0, flaws = 0;
  bool all_at_least_4 = true;
  for (int w : other_ids) {
    int d = ctx.g.vertex_degree(w);
    if (d < 4) all_at_least_4 = false;
    if (d == 4) {
      ++fours;
      if (ctx.cls.is_flaw(w)) ++flaws;
    }
  }
  if (fours == 2 && flaws == 2) return fire(rat(7, 5), "(4,4,5+)-both-flaw");
  if (all_at_least_4 && fours >= 1 && flaws == 1)
    return fire(rat(6, 5), "(4,4+,5+)-one-flaw");
  return fire(rat(1), "otherwise");
}

// R2: 3-face adjacent to another 3-face.
BranchResult rule_r2_1(const RuleContext& ctx, int v, const Face& f) {
  if (ctx.cls.is_hub(v)) {
    const WheelW5* w = ctx.cls.wheel_of_hub(v);
    if (!std::binary_search(w->faces.begin(), w->faces.end(), f.id))
      throw ConflictingClassification(
          "hub vertex charged on a face outside its wheel");
    return fire(rat(1, 2), "hub");
  }
  FaceRole role = ctx.cls.face_role(v, f.id);
  if (role == FaceRole::worst) return fire(rat(2, 3), "worst-face");
  return fire(rat(1), "good-bad-or-worse-face");
}

BranchResult rule_r2_2(const RuleContext& ctx, int v, const Face& f) {
  FaceRole role = ctx.cls.face_role(v, f.id);
  if (role == FaceRole::bad) return fire(rat(3, 2), "bad-face");
  if (role == FaceRole::worse) return fire(rat(5, 4), "worse-face");
  return fire(rat(1), "good-or-worst-face");
}

BranchResult rule_r2_3(const RuleContext& ctx, int v, const Face& f) {
  FaceRole role = ctx.cls.face_role(v, f.id);
  if (role == FaceRole::bad || role == FaceRole::worse)
    return fire(rat(3, 2), "bad-or-worse-face");
  return fire(rat(1), "good-or-worst-face");
}

BranchResult rule_r3_2(const RuleContext& ctx, int /*v*/, const Face& f) {
  std::vector<int> degs;
  for (int w : f.boundary) degs.push_back(ctx.g.vertex_degree(w));
  std::sort(degs.begin(), degs.end());
  if (degs[0] == 4 && degs[1] == 4 && degs[2] == 4 && degs[3] >= 5)
    return fire(rat(1), "(4,4,4,5+)");
  return fire(rat(2, 3), "otherwise");
}

BranchResult rule_r4_1(const RuleContext& ctx, int v, const Face& /*f*/) {
  if (!ctx.cls.is_flaw(v)) return fire(rat(1, 3), "not-flaw");
  int big = ctx.big_neighbor_count(v);
  if (big >= 2) return fire(rat(1, 5), "flaw-two-big-neighbors");
  if (big == 1) return fire(rat(1, 10), "flaw-one-big-neighbor");
  if (ctx.all_neighbors_degree_4(v)) return fire(rat(0), "flaw-all-4-neighbors");
  return {false, true, Rational(), ""};
}

BranchResult rule_r4_2(const RuleContext& ctx, int /*v*/, const Face& f) {
  std::vector<int> degs;
  for (int w : f.boundary) degs.push_back(ctx.g.vertex_degree(w));
  std::sort(degs.begin(), degs.end());
  if (degs == std::vector<int>{4, 4, 4, 5, 5}) {
    std::set<int> fives;
    for (int w : f.boundary)
      if (ctx.g.vertex_degree(w) == 5) fives.insert(w);
    if (fives.size() == 2) {
      auto it = fives.begin();
      int x = *it++;
      int y = *it;
      if (ctx.g.has_edge(x, y)) return fire(rat(2, 5), "(4,4,4,5,5)-adjacent-fives");
    }
  }
  if (degs == std::vector<int>{4, 4, 4, 4, 5}) return fire(rat(1, 3), "(4,4,4,4,5)");
  return fire(rat(3, 10), "otherwise");
}

BranchResult rule_r4_3(const RuleContext& ctx, int /*v*/, const Face& f) {
  std::vector<int> degs;
  for (int w : f.boundary) degs.push_back(ctx.g.vertex_degree(w));
  std::sort(degs.begin(), degs.end());
  if (degs == std::vector<int>{4, 4, 4, 4, 6}) return fire(rat(4, 5), "(4,4,4,4,6)");
  return fire(rat(2, 5), "otherwise");
}

}  // namespace

TransferLedger apply_rules(const PlaneGraph& g, const Classification& cls) {
  TransferLedger ledger;
  RuleContext ctx{g, cls, {}};

  ctx.three_face_isolated.assign(g.face_count(), 0);
  for (const Face& f : g.faces())
    if (f.degree() == 3)
      ctx.three_face_isolated[f.id] = adjacent_three_faces(g, f.id).empty();

  for (const Face& f : g.faces()) {
    const int fd = f.degree();
    if (fd < 3 || fd > 5) continue;
    for (int v : f.boundary) {
      const int dv = g.vertex_degree(v);
      BranchResult r;
      RuleId rule = RuleId::R1_1;
      const char* group = "";
      if (fd == 3) {
        if (ctx.three_face_isolated[f.id]) {
          if (dv == 4) {
            r = rule_r1_1(ctx, v, f);
            rule = RuleId::R1_1;
          } else if (dv >= 5) {
            r = rule_r1_2(ctx, v, f);
            rule = RuleId::R1_2;
          }
        } else {
          if (dv == 4) {
            r = rule_r2_1(ctx, v, f);
            rule = RuleId::R2_1;
          } else if (dv == 5) {
            r = rule_r2_2(ctx, v, f);
            rule = RuleId::R2_2;
          } else if (dv >= 6) {
            r = rule_r2_3(ctx, v, f);
            rule = RuleId::R2_3;
          }
        }
      } else if (fd == 4) {
        if (dv == 4) {
          r = fire(rat(1, 3), "4-vertex");
          rule = RuleId::R3_1;
        } else if (dv >= 5) {
          r = rule_r3_2(ctx, v, f);
          rule = RuleId::R3_2;
        }
      } else {  // fd == 5
        if (dv == 4) {
          r = rule_r4_1(ctx, v, f);
          rule = RuleId::R4_1;
          group = "R4.1";
        } else if (dv == 5) {
          r = rule_r4_2(ctx, v, f);
          rule = RuleId::R4_2;
        } else if (dv == 6) {
          r = rule_r4_3(ctx, v, f);
          rule = RuleId::R4_3;
        } else if (dv >= 7) {
          r = fire(rat(4, 5), "7+-vertex");
          rule = RuleId::R4_4;
        }
      }
      if (r.no_branch) {
        ledger.no_branch.push_back({v, f.id, group});
      } else if (r.fired && r.amount != Rational()) {
        ledger.entries.push_back({false, v, f.id, r.amount, rule, r.branch});
      } else if (r.fired) {
        // Zero transfers are kept so the branch decision stays auditable.
        ledger.entries.push_back({false, v, f.id, r.amount, rule, r.branch});
      }
    }
  }

  // R5: a 7+-face pays 1/8 to each wheel 3-face it meets on exactly one edge.
  for (const WheelW5& w : cls.wheels()) {
    for (int gf : w.faces) {
      auto g_edges = face_edge_list(g.face(gf));
      std::set<int> payers;
      for (const Edge& e : g_edges) {
        auto [a, b] = g.faces_sharing_edge(e);
        int other = a == gf ? b : a;
        if (other == gf || g.face_degree(other) < 7) continue;
        if (!payers.insert(other).second) continue;
        auto f_edges = face_edge_list(g.face(other));
        std::vector<Edge> shared;
        std::set_intersection(f_edges.begin(), f_edges.end(), g_edges.begin(),
                              g_edges.end(), std::back_inserter(shared));
        if (shared.size() == 1)
          ledger.entries.push_back(
              {true, other, gf, rat(1, 8), RuleId::R5, "wheel-rim"});
      }
    }
  }

  // Cluster partition of the 3-faces: maximal edge-connected unions.
  {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const Face& f : g.faces())
      if (f.degree() == 3) parent[f.id] = f.id;
    for (const Face& f : g.faces()) {
      if (f.degree() != 3) continue;
      for (int other : adjacent_three_faces(g, f.id)) {
        int a = find(f.id), b = find(other);
        if (a != b) parent[a] = b;
      }
    }
    std::map<int, std::vector<int>> groups;
    for (auto [f, _] : parent) groups[find(f)].push_back(f);

    std::set<std::vector<int>> trio_sets, wheel_sets;
    std::map<std::vector<int>, int> trio_index, wheel_index;
    for (int i = 0; i < static_cast<int>(cls.trios().size()); ++i)
      trio_index[cls.trios()[i].faces] = i;
    for (int i = 0; i < static_cast<int>(cls.wheels().size()); ++i)
      wheel_index[cls.wheels()[i].faces] = i;

    for (auto& [root, faces] : groups) {
      if (faces.size() < 2) continue;
      std::sort(faces.begin(), faces.end());
      Cluster c;
      c.faces = faces;
      if (auto it = trio_index.find(faces); it != trio_index.end()) {
        c.type = "trio";
        c.type_index = it->second;
      } else if (auto it2 = wheel_index.find(faces); it2 != wheel_index.end()) {
        c.type = "wheel";
        c.type_index = it2->second;
      } else {
        c.type = "untyped";
      }
      ledger.clusters.push_back(std::move(c));
    }
    std::sort(ledger.clusters.begin(), ledger.clusters.end(),
              [](const Cluster& a, const Cluster& b) { return a.faces < b.faces; });
  }

  // R6: average the post-R1..R5 balances inside each cluster. Surpluses are
  // settled against deficits in face-id order, which conserves exactly and
  // is idempotent.
  {
    std::vector<Rational> balance(g.face_count());
    for (int f = 0; f < g.face_count(); ++f)
      balance[f] = rat(g.face_degree(f) - 6);
    for (const Transfer& t : ledger.entries) {
      balance[t.target_face] += t.amount;
      if (t.source_is_face) balance[t.source] -= t.amount;
    }
    for (const Cluster& c : ledger.clusters) {
      Rational total;
      for (int f : c.faces) total += balance[f];
      Rational mean = total / Rational(BigInt(c.faces.size()), BigInt(1));
      std::vector<std::pair<int, Rational>> surplus, deficit;
      for (int f : c.faces) {
        Rational d = balance[f] - mean;
        if (d > Rational())
          surplus.emplace_back(f, d);
        else if (d < Rational())
          deficit.emplace_back(f, -d);
      }
      std::size_t di = 0;
      for (auto& [sf, s] : surplus) {
        while (s > Rational() && di < deficit.size()) {
          Rational move = std::min(s, deficit[di].second);
          ledger.entries.push_back(
              {true, sf, deficit[di].first, move, RuleId::R6, "redistribution"});
          s -= move;
          deficit[di].second -= move;
          if (deficit[di].second == Rational()) ++di;
        }
      }
    }
  }

  std::stable_sort(ledger.entries.begin(), ledger.entries.end(),
                   [](const Transfer& a, const Transfer& b) {
                     if (a.rule != b.rule) return a.rule < b.rule;
                     if (a.target_face != b.target_face)
                       return a.target_face < b.target_face;
                     if (a.source_is_face != b.source_is_face)
                       return a.source_is_face < b.source_is_face;
                     return a.source < b.source;
                   });
  return ledger;
}

ChargeState final_charges(const PlaneGraph& g, const TransferLedger& ledger) {
  ChargeState s = initial_charges(g);
  for (const Transfer& t : ledger.entries) {
    if (t.source_is_face)
      s.face_charge[t.source] -= t.amount;
    else
      s.vertex_charge[t.source] -= t.amount;
    s.face_charge[t.target_face] += t.amount;
  }
  return s;
}

ChargeSummary summarize(const ChargeState& state) {
  ChargeSummary out;
  out.sum = state.total();
  for (int v = 0; v < static_cast<int>(state.vertex_charge.size()); ++v)
    if (state.vertex_charge[v] < Rational())
      out.negative_elements.push_back({false, v});
  for (int f = 0; f < static_cast<int>(state.face_charge.size()); ++f)
    if (state.face_charge[f] < Rational())
      out.negative_elements.push_back({true, f});
  return out;
}

}  // namespace planar
