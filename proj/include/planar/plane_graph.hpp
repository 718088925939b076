#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planar {

// Unordered edge, stored with u < v.
struct Edge {
  int u = -1;
  int v = -1;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
  bool operator<(const Edge& o) const {
    return u != o.u ? u < o.u : v < o.v;
  }
};

enum class GraphErrorKind {
  AsymmetricRotation,
  SelfLoop,
  DuplicateNeighbor,
  Disconnected,
  EulerViolation,
  UnknownId,
};

struct GraphError : std::runtime_error {
  GraphErrorKind kind;
  GraphError(GraphErrorKind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
};

// A face of the embedding. The boundary is the closed directed walk
// produced by face tracing; vertices repeat on walks through cut vertices
// and bridges, and degree() counts every step (a bridge edge twice).
struct Face {
  int id = -1;
  std::vector<int> boundary;  // v0 -> v1 -> ... -> v_{d-1} -> v0
  int degree() const { return static_cast<int>(boundary.size()); }
  bool contains_vertex(int v) const {
    for (int b : boundary)
      if (b == v) return true;
    return false;
  }
};

// An embedded planar graph given as a rotation system: for every vertex the
// clockwise cyclic order of its neighbors. Faces are derived by the
// previous-neighbor tracing rule: the successor of the directed edge (u,v)
// is (v,w) where w immediately precedes u in rotation(v). Immutable after
// construction; all queries are const.
class PlaneGraph {
 public:
  // Validates symmetry, simplicity and connectivity, traces all faces and
  // checks the Euler identity |V| - |E| + |F| = 2.
  static PlaneGraph build_from_rotation(std::vector<std::vector<int>> rotation);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  bool has_bridge() const { return has_bridge_; }

  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return rotation_[v];
  }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const {
    if (f < 0 || f >= face_count())
      throw GraphError(GraphErrorKind::UnknownId,
                       "unknown face id " + std::to_string(f));
    return faces_[f];
  }

  int vertex_degree(int v) const {
    check_vertex(v);
    return static_cast<int>(rotation_[v].size());
  }
  int face_degree(int f) const { return face(f).degree(); }

  bool has_edge(int u, int v) const;
  int edge_id(int u, int v) const;  // -1 when absent

  // Faces around v in rotation order, one per outgoing directed edge.
  // A face incident to v more than once appears with that multiplicity.
  std::vector<int> incident_faces(int v) const;

  // The two sides of an edge; equal ids for a bridge.
  std::pair<int, int> faces_sharing_edge(const Edge& e) const;

  // Face of the directed edge u->v.
  int face_of_dart(int u, int v) const;

  // Degrees of the vertices along the boundary walk of f.
  std::vector<int> face_vertex_degrees(int f) const;

 private:
  PlaneGraph() = default;
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw GraphError(GraphErrorKind::UnknownId,
                       "unknown vertex id " + std::to_string(v));
  }

  std::vector<std::vector<int>> rotation_;
  std::vector<Edge> edges_;            // sorted
  std::vector<Face> faces_;
  std::vector<std::vector<int>> dart_face_;  // dart_face_[u][i]: face of u->rotation_[u][i]
  bool has_bridge_ = false;
};

}  // namespace planar
