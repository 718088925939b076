#include "planar/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace planar {

PlaneGraph PlaneGraph::build_from_rotation(std::vector<std::vector<int>> rotation) {
  const int n = static_cast<int>(rotation.size());
  PlaneGraph g;

  std::set<Edge> edge_set;
  for (int u = 0; u < n; ++u) {
    std::set<int> seen;
    for (int v : rotation[u]) {
      if (v < 0 || v >= n)
        throw GraphError(GraphErrorKind::UnknownId,
                         "neighbor id " + std::to_string(v) + " out of range");
      if (v == u)
        throw GraphError(GraphErrorKind::SelfLoop,
                         "self-loop at vertex " + std::to_string(u));
      if (!seen.insert(v).second)
        throw GraphError(GraphErrorKind::DuplicateNeighbor,
                         "neighbor " + std::to_string(v) +
                             " repeats in rotation of " + std::to_string(u));
      edge_set.insert(Edge(u, v));
    }
  }
  for (const Edge& e : edge_set) {
    auto contains = [&](int a, int b) {
      return std::find(rotation[a].begin(), rotation[a].end(), b) !=
             rotation[a].end();
    };
    if (!contains(e.u, e.v) || !contains(e.v, e.u))
      throw GraphError(GraphErrorKind::AsymmetricRotation,
                       "directed edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) +
                           ") has no reverse in the rotation system");
  }

  if (n > 0) {
    std::vector<char> reached(n, 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : rotation[u])
        if (!reached[v]) {
          reached[v] = 1;
          stack.push_back(v);
        }
    }
    for (int v = 0; v < n; ++v)
      if (!reached[v])
        throw GraphError(GraphErrorKind::Disconnected,
                         "vertex " + std::to_string(v) +
                             " unreachable from vertex 0");
  }

  g.rotation_ = std::move(rotation);
  g.edges_.assign(edge_set.begin(), edge_set.end());

  // Face tracing over darts. index_of[u][v] -> position of v in rotation_[u].
  std::vector<std::map<int, int>> index_of(n);
  for (int u = 0; u < n; ++u)
    for (int i = 0; i < static_cast<int>(g.rotation_[u].size()); ++i)
      index_of[u][g.rotation_[u][i]] = i;

  g.dart_face_.resize(n);
  for (int u = 0; u < n; ++u) g.dart_face_[u].assign(g.rotation_[u].size(), -1);

  for (int u0 = 0; u0 < n; ++u0) {
    for (int i0 = 0; i0 < static_cast<int>(g.rotation_[u0].size()); ++i0) {
      if (g.dart_face_[u0][i0] != -1) continue;
      Face f;
      f.id = static_cast<int>(g.faces_.size());
      int u = u0, i = i0;
      while (true) {
        if (g.dart_face_[u][i] != -1)
          throw GraphError(GraphErrorKind::EulerViolation,
                           "face tracing revisited a directed edge; rotation "
                           "system is not a planar embedding");
        g.dart_face_[u][i] = f.id;
        f.boundary.push_back(u);
        int v = g.rotation_[u][i];
        int d = static_cast<int>(g.rotation_[v].size());
        int j = index_of[v][u];
        int next = (j - 1 + d) % d;  // previous-neighbor successor rule
        u = v;
        i = next;
        if (u == u0 && i == i0) break;
      }
      g.faces_.push_back(std::move(f));
    }
  }

  const long long euler = static_cast<long long>(n) - g.edge_count() + g.face_count();
  if (n > 0 && euler != 2)
    throw GraphError(GraphErrorKind::EulerViolation,
                     "Euler identity violated: V-E+F = " + std::to_string(euler));

  for (const Edge& e : g.edges_)
    if (g.face_of_dart(e.u, e.v) == g.face_of_dart(e.v, e.u)) {
      g.has_bridge_ = true;
      break;
    }
  return g;
}

bool PlaneGraph::has_edge(int u, int v) const {
  return edge_id(u, v) >= 0;
}

int PlaneGraph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v)
    return -1;
  Edge e(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e)
    return static_cast<int>(it - edges_.begin());
  return -1;
}

std::vector<int> PlaneGraph::incident_faces(int v) const {
  check_vertex(v);
  return dart_face_[v];
}

std::pair<int, int> PlaneGraph::faces_sharing_edge(const Edge& e) const {
  int a = face_of_dart(e.u, e.v);
  int b = face_of_dart(e.v, e.u);
  return {a, b};
}

int PlaneGraph::face_of_dart(int u, int v) const {
  check_vertex(u);
  for (int i = 0; i < static_cast<int>(rotation_[u].size()); ++i)
    if (rotation_[u][i] == v) return dart_face_[u][i];
  throw GraphError(GraphErrorKind::UnknownId,
                   "no directed edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
}

std::vector<int> PlaneGraph::face_vertex_degrees(int f) const {
  const Face& fc = face(f);
  std::vector<int> out;
  out.reserve(fc.boundary.size());
  for (int v : fc.boundary) out.push_back(vertex_degree(v));
  return out;
}

}  // namespace planar
