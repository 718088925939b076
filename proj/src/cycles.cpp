#include "planar/cycles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "planar/configuration.hpp"

namespace planar {

namespace {

// Canonical form of a cyclic vertex sequence: rotate the minimum vertex to
// the front, then walk toward its smaller neighbor.
std::vector<int> canonical_cycle(const std::vector<int>& seq) {
  const int d = static_cast<int>(seq.size());
  int pos = 0;
  for (int i = 1; i < d; ++i)
    if (seq[i] < seq[pos]) pos = i;
  std::vector<int> out;
  out.reserve(d);
  int next = seq[(pos + 1) % d];
  int prev = seq[(pos - 1 + d) % d];
  if (next <= prev) {
    for (int i = 0; i < d; ++i) out.push_back(seq[(pos + i) % d]);
  } else {
    for (int i = 0; i < d; ++i) out.push_back(seq[(pos - i + d) % d]);
  }
  return out;
}

std::vector<Edge> cycle_edges(const std::vector<int>& vs) {
  std::vector<Edge> es;
  const int d = static_cast<int>(vs.size());
  es.reserve(d);
  for (int i = 0; i < d; ++i) es.emplace_back(vs[i], vs[(i + 1) % d]);
  std::sort(es.begin(), es.end());
  return es;
}

int shared_edge_count(const std::vector<Edge>& a, const std::vector<Edge>& b,
                      std::vector<Edge>* out = nullptr) {
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      if (out) out->push_back(*i);
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

CycleIndex::CycleIndex(const PlaneGraph& g, int max_len) : g_(&g), max_len_(max_len) {
  if (max_len < kMinLen || max_len > kMaxLen)
    throw std::invalid_argument("max_len must lie in [3,8]");

  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<int> path;

  // Paths from s through vertices > s only; a closing edge back to s yields
  // each cycle twice, kept once via path[1] < path.back().
  auto dfs = [&](auto&& self, int s) -> void {
    int u = path.back();
    for (int w : g.neighbors(u)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        Cycle c;
        c.vertices = canonical_cycle(path);
        cycles_.push_back(std::move(c));
      } else if (w > s && !on_path[w] &&
                 static_cast<int>(path.size()) < max_len_) {
        on_path[w] = 1;
        path.push_back(w);
        self(self, s);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.assign(n, 0);
    on_path[s] = 1;
    dfs(dfs, s);
  }

  std::sort(cycles_.begin(), cycles_.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });

  std::set<std::vector<int>> face_keys;
  for (const Face& f : g.faces()) {
    std::set<int> distinct(f.boundary.begin(), f.boundary.end());
    if (static_cast<int>(distinct.size()) == f.degree() && f.degree() >= 3)
      face_keys.insert(canonical_cycle(f.boundary));
  }

  by_length_.assign(kMaxLen + 1, {});
  by_edge_id_.assign(g.edge_count(), {});
  for (int id = 0; id < static_cast<int>(cycles_.size()); ++id) {
    Cycle& c = cycles_[id];
    c.edges = cycle_edges(c.vertices);
    const int d = c.length();
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        bool consecutive = (j == i + 1) || (i == 0 && j == d - 1);
        if (!consecutive && g.has_edge(c.vertices[i], c.vertices[j]))
          c.chords.emplace_back(c.vertices[i], c.vertices[j]);
      }
    std::sort(c.chords.begin(), c.chords.end());
    c.is_face_boundary = face_keys.count(c.vertices) > 0;
    by_length_[d].push_back(id);
    for (const Edge& e : c.edges) by_edge_id_[g.edge_id(e.u, e.v)].push_back(id);
  }
}

const std::vector<int>& CycleIndex::of_length(int len) const {
  static const std::vector<int> empty;
  if (len < 0 || len > kMaxLen) return empty;
  return by_length_[len];
}

std::vector<int> CycleIndex::cycles_through_edge(const Edge& e) const {
  int id = g_->edge_id(e.u, e.v);
  if (id < 0) return {};
  return by_edge_id_[id];
}

std::vector<int> CycleIndex::adjacent_of_length(int cycle_id, int len) const {
  const Cycle& c = cycle(cycle_id);
  std::set<int> found;
  for (const Edge& e : c.edges)
    for (int other : by_edge_id_[g_->edge_id(e.u, e.v)])
      if (other != cycle_id && cycles_[other].length() == len)
        found.insert(other);
  return std::vector<int>(found.begin(), found.end());
}

AdjacencyFinding cycle_adjacency(const CycleIndex& index, int cycle_a, int cycle_b) {
  if (cycle_a == cycle_b) throw SameCycleError();
  const Cycle& a = index.cycle(cycle_a);
  const Cycle& b = index.cycle(cycle_b);
  AdjacencyFinding f;
  f.cycle_a = cycle_a;
  f.cycle_b = cycle_b;
  shared_edge_count(a.edges, b.edges, &f.shared_edges);
  std::set<int> va(a.vertices.begin(), a.vertices.end());
  for (int v : b.vertices)
    if (va.count(v)) f.shared_vertices.push_back(v);
  std::sort(f.shared_vertices.begin(), f.shared_vertices.end());
  if (f.shared_edges.size() >= 2)
    f.relation = CycleRelation::adjacent;
  else if (f.shared_edges.size() == 1)
    f.relation = CycleRelation::exactly_one_edge;
  else if (!f.shared_vertices.empty())
    f.relation = CycleRelation::intersecting_only;
  else
    f.relation = CycleRelation::disjoint;
  return f;
}

HypothesisReport hypothesis_holds(const CycleIndex& index, int i) {
  if (i < 3 || i > 6) throw std::invalid_argument("i must be one of 3,4,5,6");
  if (index.max_len() < 6)
    throw std::invalid_argument("hypothesis check needs cycles up to length 6");
  HypothesisReport report;
  report.i = i;
  std::vector<int> others;
  for (int l = 3; l <= 6; ++l)
    if (l != i) others.push_back(l);

  for (int id : index.of_length(i)) {
    HypothesisWitness w;
    w.cycle_id = id;
    bool all = true;
    for (int l : others) {
      auto adj = index.adjacent_of_length(id, l);
      if (adj.empty()) {
        all = false;
        break;
      }
      w.adjacent_cycles.push_back(adj.front());
    }
    if (all) {
      report.holds = false;
      report.witnesses.push_back(std::move(w));
    }
  }
  return report;
}

namespace {

void detect_item1(const CycleIndex& index, std::vector<Prop2Finding>& out) {
  for (int id : index.of_length(4)) {
    const Cycle& c = index.cycle(id);
    for (const Edge& chord : c.chords) {
      // The chord splits the 4-cycle into two triangles; the sharing test
      // runs against the 4-cycle itself and both triangles, since the
      // written configuration admits both readings.
      const auto& vs = c.vertices;
      int xi = -1, zi = -1;
      for (int i = 0; i < 4; ++i) {
        if (vs[i] == chord.u) xi = i;
        if (vs[i] == chord.v) zi = i;
      }
      if ((zi - xi + 4) % 4 != 2) std::swap(xi, zi);
      std::vector<int> tri1{vs[xi], vs[(xi + 1) % 4], vs[zi]};
      std::vector<int> tri2{vs[xi], vs[zi], vs[(zi + 1) % 4]};

      Prop2Finding finding;
      finding.item = 1;
      finding.base_cycle = id;
      finding.chords = {chord};
      struct Sub {
        const char* role;
        std::vector<int> vertices;
        std::vector<Edge> edges;
      };
      std::vector<Sub> subs;
      subs.push_back({"cycle", vs, c.edges});
      subs.push_back({"chord-triangle", canonical_cycle(tri1), cycle_edges(tri1)});
      subs.push_back({"chord-triangle", canonical_cycle(tri2), cycle_edges(tri2)});

      for (const Sub& sub : subs) {
        for (int len : {4, 5}) {
          for (int other : index.of_length(len)) {
            if (other == id) continue;
            std::vector<Edge> shared;
            if (shared_edge_count(sub.edges, index.cycle(other).edges, &shared) == 1) {
              Prop2Finding::Witness w;
              w.role = sub.role;
              w.sub_cycle = sub.vertices;
              w.partner_cycle = other;
              w.shared = shared.front();
              finding.witnesses.push_back(std::move(w));
            }
          }
        }
      }
      if (!finding.witnesses.empty()) out.push_back(std::move(finding));
    }
  }
}

void detect_item2(const CycleIndex& index, std::vector<Prop2Finding>& out) {
  const PlaneGraph& g = index.graph();
  for (const Face& f : g.faces()) {
    if (f.degree() != 4) continue;
    std::set<int> distinct(f.boundary.begin(), f.boundary.end());
    if (distinct.size() != 4) continue;
    auto bd_edges = cycle_edges(f.boundary);

    std::vector<Prop2Finding::Witness> threes, smalls;
    for (int len = 3; len <= 4; ++len) {
      for (int other : index.of_length(len)) {
        const Cycle& oc = index.cycle(other);
        if (oc.edges == bd_edges) continue;
        std::vector<Edge> shared;
        if (shared_edge_count(bd_edges, oc.edges, &shared) == 1) {
          Prop2Finding::Witness w;
          w.role = len == 3 ? "three-cycle" : "small-cycle";
          w.partner_cycle = other;
          w.shared = shared.front();
          if (len == 3) threes.push_back(w);
          smalls.push_back(std::move(w));
        }
      }
    }
    // Violation needs a 3-cycle plus a distinct cycle of length at most 4.
    bool violated = false;
    for (const auto& t : threes) {
      for (const auto& s : smalls)
        if (s.partner_cycle != t.partner_cycle) {
          violated = true;
          break;
        }
      if (violated) break;
    }
    if (violated) {
      Prop2Finding finding;
      finding.item = 2;
      finding.base_face = f.id;
      finding.witnesses = smalls;
      out.push_back(std::move(finding));
    }
  }
}

void detect_item3(const CycleIndex& index, std::vector<Prop2Finding>& out) {
  for (int id : index.of_length(5)) {
    const Cycle& c = index.cycle(id);
    if (c.chords.empty()) continue;
    Prop2Finding finding;
    finding.item = 3;
    finding.base_cycle = id;
    finding.chords = c.chords;
    for (int other : index.of_length(5)) {
      if (other == id) continue;
      std::vector<Edge> shared;
      if (shared_edge_count(c.edges, index.cycle(other).edges, &shared) == 1) {
        Prop2Finding::Witness w;
        w.role = "five-cycle";
        w.partner_cycle = other;
        w.shared = shared.front();
        finding.witnesses.push_back(std::move(w));
      }
    }
    if (finding.witnesses.size() >= 2) out.push_back(std::move(finding));
  }
}

void detect_item4(const CycleIndex& index, std::vector<Prop2Finding>& out) {
  for (const WheelW5& wheel : find_w5(index.graph())) {
    std::vector<Edge> wheel_edges;
    for (int x : wheel.externals) wheel_edges.emplace_back(wheel.hub, x);
    for (std::size_t i = 0; i < wheel.externals.size(); ++i)
      wheel_edges.emplace_back(wheel.externals[i],
                               wheel.externals[(i + 1) % wheel.externals.size()]);
    std::sort(wheel_edges.begin(), wheel_edges.end());

    Prop2Finding finding;
    finding.item = 4;
    finding.wheel_hub = wheel.hub;
    for (int len = 3; len <= 6; ++len) {
      for (int other : index.of_length(len)) {
        std::vector<Edge> shared;
        if (shared_edge_count(wheel_edges, index.cycle(other).edges, &shared) == 1) {
          Prop2Finding::Witness w;
          w.role = "six-minus-cycle";
          w.partner_cycle = other;
          w.shared = shared.front();
          finding.witnesses.push_back(std::move(w));
        }
      }
    }
    if (!finding.witnesses.empty()) out.push_back(std::move(finding));
  }
}

}  // namespace

std::vector<Prop2Finding> prop2_violations(const CycleIndex& index) {
  if (index.max_len() < 6)
    throw std::invalid_argument("prop2 detection needs cycles up to length 6");
  std::vector<Prop2Finding> out;
  detect_item1(index, out);
  detect_item2(index, out);
  detect_item3(index, out);
  detect_item4(index, out);
  return out;
}

}  // namespace planar
