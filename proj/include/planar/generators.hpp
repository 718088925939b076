#pragma once

#include <string>
#include <vector>

#include "planar/plane_graph.hpp"

namespace planar {

// Mutable rotation system used to compose embeddings. All operations keep
// the previous-neighbor face-tracing convention of PlaneGraph consistent, so
// every intermediate state is a valid embedding.
class RotationBuilder {
 public:
  RotationBuilder() = default;
  explicit RotationBuilder(std::vector<std::vector<int>> rotation)
      : rotation_(std::move(rotation)) {}

  static RotationBuilder cycle(int n);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  PlaneGraph build() const;

  // Adds a vertex inside the face whose boundary walk is `walk`, joined to
  // `attach` (listed in walk order). Returns the new vertex id. Consecutive
  // attachment vertices carve the face into one new face per gap.
  int insert_in_face(const std::vector<int>& walk, const std::vector<int>& attach);

  // Glues a k-cycle onto the edge (u,v), placing the new path inside the
  // face of the directed edge u->v. Returns the new path vertices.
  std::vector<int> glue_cycle_on_dart(int u, int v, int k);

  void remove_edge(int u, int v);
  // Drops isolated vertices and renumbers densely.
  void compact();

 private:
  int add_vertex() {
    rotation_.emplace_back();
    return vertex_count() - 1;
  }
  std::vector<std::vector<int>> rotation_;
};

// Canonical families.
PlaneGraph make_cycle(int n);
PlaneGraph make_wheel(int total_vertices);          // hub + (n-1)-cycle rim
PlaneGraph make_prism(int gon);                     // two gon-cycles + rungs
PlaneGraph make_octahedron();
PlaneGraph make_stacked_triangulation(int vertices);  // repeated face splits
PlaneGraph make_k4();

// Fixture graphs used across the analysis suites.

// Pentagon with a triangle, a 4-cycle and a 6-cycle glued onto three
// distinct edges (each sharing exactly one edge with the pentagon). The
// include flags select which attachments are present; when an attachment is
// dropped `remove_shared_edge` also deletes the pentagon edge it would have
// shared, which is how "removing the glued cycle" is meant.
PlaneGraph make_hypothesis_gadget(bool with_triangle, bool with_quad,
                                  bool with_hexagon, bool remove_shared_edge);

// A 4-vertex whose incident faces have degrees 3,5,3,5.
PlaneGraph make_flaw_vertex_fixture();

// A 4-vertex with two triangles and two 6-faces around it.
PlaneGraph make_two_triangle_vertex_fixture();

// An isolated triangle on three 4-vertices inside a hexagonal shell.
PlaneGraph make_isolated_triangle_fixture();

// Pentagon ringed by five triangles; all pentagon vertices have degree 4.
// With promote=true one pentagon vertex is raised to degree 6.
PlaneGraph make_poor_five_face_fixture(bool promote);

// A trio (worst vertex of degree 4, worse vertices of degree 4, bad vertices
// of degree 5) embedded in a 10-cycle shell; the trio is its own cluster.
PlaneGraph make_trio_fixture();

// The bare three-triangle fan on five vertices.
PlaneGraph make_trio_patch();

// A chorded 4-cycle with a second 4-cycle glued on one edge.
PlaneGraph make_prop2_item1_fixture();
// A 4-face sharing exactly one edge with a 3-cycle and with a 4-cycle.
PlaneGraph make_prop2_item2_fixture();
// A chorded 5-cycle sharing exactly one edge with two 5-cycles.
PlaneGraph make_prop2_item3_fixture();
// A wheel sharing exactly one edge with a short cycle.
PlaneGraph make_prop2_item4_fixture();

struct NamedGraph {
  std::string name;
  PlaneGraph graph;
};

// The standing battery used by conservation and determinism checks.
std::vector<NamedGraph> fixture_battery();

}  // namespace planar
