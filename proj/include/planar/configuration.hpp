#pragma once

#include <optional>
#include <vector>

#include "planar/plane_graph.hpp"

namespace planar {

struct VertexProfile {
  int vertex = -1;
  int degree = 0;
  std::vector<int> incident_face_degrees;  // sorted, one entry per incidence
  bool is_flaw = false;  // degree 4 with face degrees (3,3,5,5+)
  bool good = true;      // in no trio and no wheel
};

// Three triangular faces on five vertices and seven edges. The worst vertex
// lies on all three triangles, each worse vertex on two, each bad vertex on
// one.
struct Trio {
  std::vector<int> faces;  // sorted face ids; middle is the one adjacent to both others
  int middle_face = -1;
  int worst = -1;
  std::vector<int> worse;  // two vertices
  std::vector<int> bad;    // two vertices
  std::vector<int> vertices() const {
    std::vector<int> vs{worst};
    vs.insert(vs.end(), worse.begin(), worse.end());
    vs.insert(vs.end(), bad.begin(), bad.end());
    return vs;
  }
};

// A 4-vertex hub whose four incident faces are all triangles. Externals are
// listed in rotation order around the hub.
struct WheelW5 {
  int hub = -1;
  std::vector<int> externals;  // four vertices
  std::vector<int> faces;      // four face ids, sorted
};

enum class FaceRole { good, bad, worse, worst };

struct SourceError : std::runtime_error {
  explicit SourceError(const std::string& m) : std::runtime_error(m) {}
};

std::vector<WheelW5> find_w5(const PlaneGraph& g);

// All embedded trios. Triples lying entirely inside one wheel are omitted;
// the wheel classification takes precedence for discharging.
std::vector<Trio> find_trios(const PlaneGraph& g);

std::vector<VertexProfile> classify_vertices(const PlaneGraph& g);

// 5-faces adjacent to at least four distinct 3-faces and incident with five
// 4-vertices or with four 4-vertices and one 5-vertex.
std::vector<int> poor_5faces(const PlaneGraph& g);

// For a face P and a 3-face T sharing exactly one edge: the vertex of T not
// on P, or nullopt when T's remaining vertex also lies on P. Throws
// SourceError unless the faces share exactly one edge.
std::optional<int> sources_of(const PlaneGraph& g, int p_face, int t_face);

// Bundled classification used by the discharging engine. Role lookups are
// keyed on (vertex, face); wheel membership wins over trio membership, and
// between overlapping trios the one with the deepest involvement decides.
class Classification {
 public:
  explicit Classification(const PlaneGraph& g);

  const PlaneGraph& graph() const { return *g_; }
  const std::vector<VertexProfile>& profiles() const { return profiles_; }
  const VertexProfile& profile(int v) const { return profiles_.at(v); }
  const std::vector<Trio>& trios() const { return trios_; }
  const std::vector<WheelW5>& wheels() const { return wheels_; }
  const std::vector<int>& poor_faces() const { return poor_faces_; }

  bool is_flaw(int v) const { return profiles_.at(v).is_flaw; }
  bool is_hub(int v) const;
  const WheelW5* wheel_of_hub(int v) const;
  bool face_in_wheel(int f) const;
  bool face_in_trio(int f) const;

  // Role of v on the 3-face f (good for any pair outside trio/wheel layers).
  FaceRole face_role(int v, int f) const;

 private:
  const PlaneGraph* g_;
  std::vector<VertexProfile> profiles_;
  std::vector<Trio> trios_;
  std::vector<WheelW5> wheels_;
  std::vector<int> poor_faces_;
  std::vector<int> hub_of_;           // vertex -> wheel index or -1
  std::vector<char> face_in_wheel_;   // face id -> bool
  std::vector<char> face_in_trio_;    // face id -> bool
  std::vector<std::vector<int>> trios_of_face_;
  std::vector<std::vector<int>> wheels_of_face_;
};

struct LemmaViolation {
  // Lemma about poor 5-faces: source vertex of (poor_face, triangle) with
  // degree below 5. Lemma about shared edges: faces f,g sharing exactly one
  // edge with low-degree endpoint x and no 5+-vertex elsewhere on them.
  std::string lemma;  // "poor-source" or "shared-edge"
  int face_a = -1;
  int face_b = -1;
  int vertex = -1;  // the source / the endpoint x
};

// Measures (never enforces) the two structural lemmas on arbitrary input.
std::vector<LemmaViolation> lemma_poor_source_violations(const PlaneGraph& g);
std::vector<LemmaViolation> lemma_shared_edge_violations(const PlaneGraph& g);

}  // namespace planar
