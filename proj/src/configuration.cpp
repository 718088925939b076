#include "planar/configuration.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace planar {

namespace {

std::vector<Edge> face_edges(const Face& f) {
  std::vector<Edge> es;
  const int d = f.degree();
  es.reserve(d);
  for (int i = 0; i < d; ++i)
    es.emplace_back(f.boundary[i], f.boundary[(i + 1) % d]);
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

int shared_edges(const std::vector<Edge>& a, const std::vector<Edge>& b,
                 Edge* first = nullptr) {
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      if (count == 0 && first) *first = *i;
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

std::vector<WheelW5> find_w5(const PlaneGraph& g) {
  std::vector<WheelW5> wheels;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex_degree(v) != 4) continue;
    auto inc = g.incident_faces(v);
    bool all_triangles = true;
    for (int f : inc)
      if (g.face_degree(f) != 3) {
        all_triangles = false;
        break;
      }
    if (!all_triangles) continue;
    WheelW5 w;
    w.hub = v;
    w.externals = g.neighbors(v);
    w.faces = inc;
    std::sort(w.faces.begin(), w.faces.end());
    wheels.push_back(std::move(w));
  }
  return wheels;
}

std::vector<Trio> find_trios(const PlaneGraph& g) {
  std::vector<int> three_faces;
  for (const Face& f : g.faces())
    if (f.degree() == 3) three_faces.push_back(f.id);

  std::map<int, std::vector<Edge>> edges_of;
  for (int f : three_faces) edges_of[f] = face_edges(g.face(f));

  // 3-faces adjacent to a given 3-face, via the opposite side of each edge.
  std::map<int, std::vector<int>> adj;
  for (int f : three_faces) {
    std::set<int> found;
    for (const Edge& e : edges_of[f]) {
      auto [a, b] = g.faces_sharing_edge(e);
      int other = a == f ? b : a;
      if (other != f && g.face_degree(other) == 3) found.insert(other);
    }
    adj[f] = std::vector<int>(found.begin(), found.end());
  }

  std::set<std::vector<int>> wheel_face_sets;
  for (const WheelW5& w : find_w5(g)) wheel_face_sets.insert(w.faces);

  std::set<std::vector<int>> seen;
  std::vector<Trio> trios;
  for (int m : three_faces) {
    const auto& around = adj[m];
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        int a = around[i], b = around[j];
        std::set<int> vs;
        std::set<Edge> es;
        for (int f : {a, m, b}) {
          for (int v : g.face(f).boundary) vs.insert(v);
          for (const Edge& e : edges_of[f]) es.insert(e);
        }
        if (vs.size() != 5 || es.size() != 7) continue;

        std::vector<int> key{a, m, b};
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;

        // Skip triples living entirely inside one wheel.
        bool inside_wheel = false;
        for (const auto& wf : wheel_face_sets)
          if (std::includes(wf.begin(), wf.end(), key.begin(), key.end()))
            inside_wheel = true;
        if (inside_wheel) continue;

        Trio t;
        t.faces = key;
        t.middle_face = m;
        std::map<int, int> onto;  // vertex -> number of trio faces containing it
        for (int f : {a, m, b})
          for (int v : g.face(f).boundary) onto[v]++;
        for (auto [v, cnt] : onto) {
          if (cnt == 3)
            t.worst = v;
          else if (cnt == 2)
            t.worse.push_back(v);
          else
            t.bad.push_back(v);
        }
        if (t.worst < 0 || t.worse.size() != 2 || t.bad.size() != 2) continue;
        trios.push_back(std::move(t));
      }
    }
  }
  std::sort(trios.begin(), trios.end(),
            [](const Trio& x, const Trio& y) { return x.faces < y.faces; });
  return trios;
}

std::vector<VertexProfile> classify_vertices(const PlaneGraph& g) {
  Classification c(g);
  return c.profiles();
}

std::vector<int> poor_5faces(const PlaneGraph& g) {
  std::vector<int> out;
  for (const Face& f : g.faces()) {
    if (f.degree() != 5) continue;
    auto es = face_edges(f);
    std::set<int> adjacent_triangles;
    for (const Edge& e : es) {
      auto [a, b] = g.faces_sharing_edge(e);
      int other = a == f.id ? b : a;
      if (other != f.id && g.face_degree(other) == 3) adjacent_triangles.insert(other);
    }
    if (adjacent_triangles.size() < 4) continue;
    std::vector<int> degs = g.face_vertex_degrees(f.id);
    std::sort(degs.begin(), degs.end());
    bool five_fours = degs == std::vector<int>{4, 4, 4, 4, 4};
    bool four_fours_one_five = degs == std::vector<int>{4, 4, 4, 4, 5};
    if (five_fours || four_fours_one_five) out.push_back(f.id);
  }
  return out;
}

std::optional<int> sources_of(const PlaneGraph& g, int p_face, int t_face) {
  const Face& p = g.face(p_face);
  const Face& t = g.face(t_face);
  if (t.degree() != 3) throw SourceError("second face must be a 3-face");
  Edge shared;
  int count = shared_edges(face_edges(p), face_edges(t), &shared);
  if (count != 1)
    throw SourceError("faces share " + std::to_string(count) +
                      " edges, expected exactly one");
  for (int v : t.boundary)
    if (v != shared.u && v != shared.v)
      return p.contains_vertex(v) ? std::nullopt : std::optional<int>(v);
  return std::nullopt;
}

Classification::Classification(const PlaneGraph& g) : g_(&g) {
  wheels_ = find_w5(g);
  trios_ = find_trios(g);
  poor_faces_ = poor_5faces(g);

  hub_of_.assign(g.vertex_count(), -1);
  wheels_of_face_.assign(g.face_count(), {});
  face_in_wheel_.assign(g.face_count(), 0);
  for (int i = 0; i < static_cast<int>(wheels_.size()); ++i) {
    hub_of_[wheels_[i].hub] = i;
    for (int f : wheels_[i].faces) {
      face_in_wheel_[f] = 1;
      wheels_of_face_[f].push_back(i);
    }
  }
  face_in_trio_.assign(g.face_count(), 0);
  trios_of_face_.assign(g.face_count(), {});
  for (int i = 0; i < static_cast<int>(trios_.size()); ++i)
    for (int f : trios_[i].faces) {
      face_in_trio_[f] = 1;
      trios_of_face_[f].push_back(i);
    }

  std::set<int> clustered;  // vertices of any trio or wheel
  for (const Trio& t : trios_)
    for (int v : t.vertices()) clustered.insert(v);
  for (const WheelW5& w : wheels_) {
    clustered.insert(w.hub);
    for (int x : w.externals) clustered.insert(x);
  }

  profiles_.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexProfile& p = profiles_[v];
    p.vertex = v;
    p.degree = g.vertex_degree(v);
    for (int f : g.incident_faces(v))
      p.incident_face_degrees.push_back(g.face_degree(f));
    std::sort(p.incident_face_degrees.begin(), p.incident_face_degrees.end());
    p.is_flaw = p.degree == 4 && p.incident_face_degrees.size() == 4 &&
                p.incident_face_degrees[0] == 3 &&
                p.incident_face_degrees[1] == 3 &&
                p.incident_face_degrees[2] == 5 &&
                p.incident_face_degrees[3] >= 5;
    p.good = clustered.count(v) == 0;
  }
}

bool Classification::is_hub(int v) const { return hub_of_.at(v) >= 0; }

const WheelW5* Classification::wheel_of_hub(int v) const {
  int i = hub_of_.at(v);
  return i >= 0 ? &wheels_[i] : nullptr;
}

bool Classification::face_in_wheel(int f) const { return face_in_wheel_.at(f); }
bool Classification::face_in_trio(int f) const { return face_in_trio_.at(f); }

FaceRole Classification::face_role(int v, int f) const {
  if (g_->face_degree(f) != 3) return FaceRole::good;
  if (!g_->face(f).contains_vertex(v)) return FaceRole::good;

  // Wheel membership wins: a hub is on all triangles of its wheel, an
  // external on two of them.
  if (is_hub(v)) {
    const WheelW5& w = wheels_[hub_of_[v]];
    if (std::binary_search(w.faces.begin(), w.faces.end(), f))
      return FaceRole::worst;
  }
  for (int wi : wheels_of_face_.at(f)) {
    const WheelW5& w = wheels_[wi];
    for (int x : w.externals)
      if (x == v) return FaceRole::worse;
  }

  // Deepest involvement across the trios containing f decides.
  int best = 0;
  for (int ti : trios_of_face_.at(f)) {
    const Trio& t = trios_[ti];
    int count = 0;
    if (t.worst == v)
      count = 3;
    else if (std::find(t.worse.begin(), t.worse.end(), v) != t.worse.end())
      count = 2;
    else if (std::find(t.bad.begin(), t.bad.end(), v) != t.bad.end())
      count = 1;
    best = std::max(best, count);
  }
  switch (best) {
    case 3:
      return FaceRole::worst;
    case 2:
      return FaceRole::worse;
    case 1:
      return FaceRole::bad;
    default:
      return FaceRole::good;
  }
}

std::vector<LemmaViolation> lemma_poor_source_violations(const PlaneGraph& g) {
  std::vector<LemmaViolation> out;
  for (int p : poor_5faces(g)) {
    auto pe = face_edges(g.face(p));
    for (const Face& t : g.faces()) {
      if (t.degree() != 3 || t.id == p) continue;
      if (shared_edges(pe, face_edges(t)) != 1) continue;
      auto src = sources_of(g, p, t.id);
      if (src && g.vertex_degree(*src) < 5)
        out.push_back({"poor-source", p, t.id, *src});
    }
  }
  return out;
}

std::vector<LemmaViolation> lemma_shared_edge_violations(const PlaneGraph& g) {
  std::vector<LemmaViolation> out;
  std::vector<std::vector<Edge>> edges_of(g.face_count());
  for (const Face& f : g.faces()) edges_of[f.id] = face_edges(f);

  for (int a = 0; a < g.face_count(); ++a) {
    for (int b = a + 1; b < g.face_count(); ++b) {
      Edge e;
      if (shared_edges(edges_of[a], edges_of[b], &e) != 1) continue;
      for (int x : {e.u, e.v}) {
        if (g.vertex_degree(x) > 5) continue;
        bool has_big = false;
        for (int f : {a, b}) {
          for (int v : g.face(f).boundary)
            if (v != x && g.vertex_degree(v) >= 5) {
              has_big = true;
              break;
            }
          if (has_big) break;
        }
        if (!has_big) out.push_back({"shared-edge", a, b, x});
      }
    }
  }
  return out;
}

}  // namespace planar
