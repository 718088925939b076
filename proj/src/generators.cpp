#include "planar/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace planar {

namespace {

int index_of(const std::vector<int>& rot, int v) {
  auto it = std::find(rot.begin(), rot.end(), v);
  if (it == rot.end()) throw std::invalid_argument("neighbor not present in rotation");
  return static_cast<int>(it - rot.begin());
}

}  // namespace

RotationBuilder RotationBuilder::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i)
    rot[i] = {(i - 1 + n) % n, (i + 1) % n};
  return RotationBuilder(std::move(rot));
}

PlaneGraph RotationBuilder::build() const {
  return PlaneGraph::build_from_rotation(rotation_);
}

int RotationBuilder::insert_in_face(const std::vector<int>& walk,
                                    const std::vector<int>& attach) {
  const int len = static_cast<int>(walk.size());
  std::vector<std::pair<int, int>> at;  // (walk position, vertex)
  for (int v : attach) {
    auto it = std::find(walk.begin(), walk.end(), v);
    if (it == walk.end())
      throw std::invalid_argument("attachment vertex not on the face walk");
    at.emplace_back(static_cast<int>(it - walk.begin()), v);
  }
  std::sort(at.begin(), at.end());

  int w = add_vertex();
  for (auto [pos, v] : at) {
    rotation_[w].push_back(v);
    int pred = walk[(pos - 1 + len) % len];
    rotation_[v].insert(rotation_[v].begin() + index_of(rotation_[v], pred), w);
  }
  return w;
}

std::vector<int> RotationBuilder::glue_cycle_on_dart(int u, int v, int k) {
  if (k < 3) throw std::invalid_argument("glued cycle needs length >= 3");
  const int m = k - 2;  // path vertices
  std::vector<int> path;
  for (int i = 0; i < m; ++i) path.push_back(add_vertex());
  for (int i = 0; i < m; ++i) {
    int prev = i == 0 ? u : path[i - 1];
    int next = i == m - 1 ? v : path[i + 1];
    rotation_[path[i]] = {prev, next};
  }
  rotation_[u].insert(rotation_[u].begin() + index_of(rotation_[u], v) + 1,
                      path.front());
  rotation_[v].insert(rotation_[v].begin() + index_of(rotation_[v], u),
                      path.back());
  return path;
}

void RotationBuilder::remove_edge(int u, int v) {
  auto& ru = rotation_[u];
  auto& rv = rotation_[v];
  ru.erase(ru.begin() + index_of(ru, v));
  rv.erase(rv.begin() + index_of(rv, u));
}

void RotationBuilder::compact() {
  std::vector<int> remap(rotation_.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < rotation_.size(); ++v)
    if (!rotation_[v].empty()) remap[v] = next++;
  std::vector<std::vector<int>> out(next);
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    if (remap[v] < 0) continue;
    for (int u : rotation_[v]) out[remap[v]].push_back(remap[u]);
  }
  rotation_ = std::move(out);
}

PlaneGraph make_cycle(int n) { return RotationBuilder::cycle(n).build(); }

PlaneGraph make_wheel(int total_vertices) {
  const int rim = total_vertices - 1;
  if (rim < 3) throw std::invalid_argument("wheel needs at least 4 vertices");
  std::vector<std::vector<int>> rot(total_vertices);
  for (int i = 1; i <= rim; ++i) rot[0].push_back(i);
  for (int i = 1; i <= rim; ++i) {
    int next = i == rim ? 1 : i + 1;
    int prev = i == 1 ? rim : i - 1;
    rot[i] = {next, 0, prev};
  }
  return PlaneGraph::build_from_rotation(rot);
}

PlaneGraph make_prism(int gon) {
  if (gon < 3) throw std::invalid_argument("prism needs at least a triangle");
  std::vector<std::vector<int>> rot(2 * gon);
  for (int i = 0; i < gon; ++i) {
    int prev = (i - 1 + gon) % gon;
    int next = (i + 1) % gon;
    rot[i] = {prev, next, gon + i};
    rot[gon + i] = {gon + next, gon + prev, i};
  }
  return PlaneGraph::build_from_rotation(rot);
}

PlaneGraph make_octahedron() {
  RotationBuilder b = RotationBuilder::cycle(4);
  PlaneGraph ring = b.build();
  b.insert_in_face(ring.face(0).boundary, ring.face(0).boundary);
  PlaneGraph with_top = b.build();
  // the remaining 4-face is the other side of the original square
  for (const Face& f : with_top.faces())
    if (f.degree() == 4) {
      b.insert_in_face(f.boundary, f.boundary);
      break;
    }
  return b.build();
}

PlaneGraph make_stacked_triangulation(int vertices) {
  if (vertices < 4)
    throw std::invalid_argument("stacked triangulation needs at least 4 vertices");
  RotationBuilder b = RotationBuilder::cycle(3);
  for (int n = 3; n < vertices; ++n) {
    PlaneGraph g = b.build();
    const Face& f = g.face(0);
    b.insert_in_face(f.boundary, f.boundary);
  }
  return b.build();
}

PlaneGraph make_k4() { return make_stacked_triangulation(4); }

PlaneGraph make_hypothesis_gadget(bool with_triangle, bool with_quad,
                                  bool with_hexagon, bool remove_shared_edge) {
  RotationBuilder b = RotationBuilder::cycle(5);
  // attachments live in the face holding the ascending darts
  if (with_triangle) b.glue_cycle_on_dart(0, 1, 3);
  if (with_quad) b.glue_cycle_on_dart(1, 2, 4);
  if (with_hexagon) b.glue_cycle_on_dart(2, 3, 6);
  if (remove_shared_edge) {
    if (!with_triangle) b.remove_edge(0, 1);
    if (!with_quad) b.remove_edge(1, 2);
    if (!with_hexagon) b.remove_edge(2, 3);
  }
  return b.build();
}

PlaneGraph make_flaw_vertex_fixture() {
  RotationBuilder b = RotationBuilder::cycle(8);
  std::vector<int> walk{0, 1, 2, 3, 4, 5, 6, 7};
  b.insert_in_face(walk, {0, 1, 4, 5});
  return b.build();
}

PlaneGraph make_two_triangle_vertex_fixture() {
  RotationBuilder b = RotationBuilder::cycle(10);
  std::vector<int> walk{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  b.insert_in_face(walk, {0, 1, 5, 6});
  return b.build();
}

namespace {

// Face of g with the given degree containing all of `required`.
const Face& find_face(const PlaneGraph& g, int degree, std::vector<int> required) {
  for (const Face& f : g.faces()) {
    if (f.degree() != degree) continue;
    bool ok = true;
    for (int v : required)
      if (!f.contains_vertex(v)) ok = false;
    if (ok) return f;
  }
  throw std::logic_error("fixture construction: expected face not found");
}

}  // namespace

PlaneGraph make_isolated_triangle_fixture() {
  RotationBuilder b = RotationBuilder::cycle(6);
  std::vector<int> hexagon{0, 1, 2, 3, 4, 5};
  int a = b.insert_in_face(hexagon, {0, 1});
  PlaneGraph g1 = b.build();
  int bb = b.insert_in_face(find_face(g1, 7, {a, 2, 3}).boundary, {a, 2, 3});
  PlaneGraph g2 = b.build();
  b.insert_in_face(find_face(g2, 6, {bb, 4, 5, a}).boundary, {bb, 4, 5, a});
  return b.build();
}

PlaneGraph make_poor_five_face_fixture(bool promote) {
  RotationBuilder b = RotationBuilder::cycle(5);
  std::vector<int> apex;
  for (int i = 0; i < 5; ++i)
    apex.push_back(b.glue_cycle_on_dart((i + 1) % 5, i, 3).front());
  if (promote) {
    PlaneGraph g = b.build();
    const Face& outer = find_face(g, 10, {apex[4], 0, apex[0]});
    int w1 = b.insert_in_face(outer.boundary, {apex[4], 0, apex[0]});
    PlaneGraph g2 = b.build();
    const Face& tri = find_face(g2, 3, {w1, 0, apex[0]});
    b.insert_in_face(tri.boundary, {w1, 0, apex[0]});
  }
  return b.build();
}

PlaneGraph make_trio_fixture() {
  RotationBuilder b = RotationBuilder::cycle(10);
  std::vector<int> ring{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  int u = b.insert_in_face(ring, {0, 1, 2});
  PlaneGraph g1 = b.build();
  int x = b.insert_in_face(find_face(g1, 10, {u, 3, 9}).boundary, {u, 3});
  PlaneGraph g2 = b.build();
  int y = b.insert_in_face(find_face(g2, 10, {x, 4, 9}).boundary, {x, 4});
  PlaneGraph g3 = b.build();
  int w = b.insert_in_face(find_face(g3, 10, {y, 5, 9}).boundary, {y, 5, 6, 7});
  PlaneGraph g4 = b.build();
  b.insert_in_face(find_face(g4, 8, {w, u, x, y}).boundary, {u, x, y, w});
  return b.build();
}

PlaneGraph make_trio_patch() {
  // pentagon u,x,y,w,v with chords x-v and y-v
  std::vector<std::vector<int>> rot(5);
  RotationBuilder b = RotationBuilder::cycle(5);
  PlaneGraph ring = b.build();
  // add the two chords inside the face [0,1,2,3,4]
  const std::vector<int> walk = ring.face(0).boundary[1] == 1
                                    ? ring.face(0).boundary
                                    : ring.face(1).boundary;
  // chord helper inline: connect a and b inside the walk
  auto add_chord = [&](std::vector<std::vector<int>>& r, const std::vector<int>& wk,
                       int a, int c) {
    const int len = static_cast<int>(wk.size());
    auto pos = [&](int v) {
      for (int i = 0; i < len; ++i)
        if (wk[i] == v) return i;
      throw std::logic_error("chord endpoint not on walk");
    };
    int pa = pos(a), pc = pos(c);
    int pred_a = wk[(pa - 1 + len) % len];
    int pred_c = wk[(pc - 1 + len) % len];
    r[a].insert(r[a].begin() + index_of(r[a], pred_a), c);
    r[c].insert(r[c].begin() + index_of(r[c], pred_c), a);
  };
  std::vector<std::vector<int>> r = ring.rotation();
  add_chord(r, walk, 1, 4);
  // after the first chord the face [1,2,3,4] hosts the second
  std::vector<int> sub{1, 2, 3, 4};
  add_chord(r, sub, 2, 4);
  return PlaneGraph::build_from_rotation(r);
}

PlaneGraph make_prop2_item1_fixture() {
  PlaneGraph square = make_cycle(4);
  std::vector<std::vector<int>> r = square.rotation();
  const std::vector<int> walk = square.face(0).boundary[1] == 1
                                    ? square.face(0).boundary
                                    : square.face(1).boundary;
  // chord 0-2 inside [0,1,2,3]
  auto pred = [&](int v) {
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (walk[i] == v) return walk[(i - 1 + walk.size()) % walk.size()];
    throw std::logic_error("unreachable");
  };
  r[0].insert(r[0].begin() + index_of(r[0], pred(0)), 2);
  r[2].insert(r[2].begin() + index_of(r[2], pred(2)), 0);
  RotationBuilder b(std::move(r));
  b.glue_cycle_on_dart(1, 0, 4);
  return b.build();
}

PlaneGraph make_prop2_item2_fixture() {
  RotationBuilder b = RotationBuilder::cycle(4);
  b.glue_cycle_on_dart(1, 0, 3);
  b.glue_cycle_on_dart(2, 1, 4);
  return b.build();
}

PlaneGraph make_prop2_item3_fixture() {
  PlaneGraph penta = make_cycle(5);
  std::vector<std::vector<int>> r = penta.rotation();
  const std::vector<int> walk = penta.face(0).boundary[1] == 1
                                    ? penta.face(0).boundary
                                    : penta.face(1).boundary;
  auto pred = [&](int v) {
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (walk[i] == v) return walk[(i - 1 + walk.size()) % walk.size()];
    throw std::logic_error("unreachable");
  };
  r[0].insert(r[0].begin() + index_of(r[0], pred(0)), 2);
  r[2].insert(r[2].begin() + index_of(r[2], pred(2)), 0);
  RotationBuilder b(std::move(r));
  b.glue_cycle_on_dart(3, 2, 5);
  b.glue_cycle_on_dart(4, 3, 5);
  return b.build();
}

PlaneGraph make_prop2_item4_fixture() {
  PlaneGraph wheel = make_wheel(5);
  RotationBuilder b(wheel.rotation());
  // rim edge (1,2): the outer face holds the dart 2->1
  b.glue_cycle_on_dart(2, 1, 3);
  return b.build();
}

std::vector<NamedGraph> fixture_battery() {
  std::vector<NamedGraph> out;
  for (int n = 3; n <= 9; ++n)
    out.push_back({"cycle-" + std::to_string(n), make_cycle(n)});
  out.push_back({"wheel-5", make_wheel(5)});
  out.push_back({"wheel-6", make_wheel(6)});
  for (int n = 3; n <= 5; ++n)
    out.push_back({"prism-" + std::to_string(n), make_prism(n)});
  out.push_back({"octahedron", make_octahedron()});
  out.push_back({"k4", make_k4()});
  out.push_back({"stacked-5", make_stacked_triangulation(5)});
  out.push_back({"stacked-6", make_stacked_triangulation(6)});
  out.push_back({"hypothesis-gadget", make_hypothesis_gadget(true, true, true, false)});
  out.push_back({"prop2-item1", make_prop2_item1_fixture()});
  out.push_back({"prop2-item2", make_prop2_item2_fixture()});
  out.push_back({"prop2-item3", make_prop2_item3_fixture()});
  out.push_back({"prop2-item4", make_prop2_item4_fixture()});
  out.push_back({"flaw-vertex", make_flaw_vertex_fixture()});
  out.push_back({"two-triangle-vertex", make_two_triangle_vertex_fixture()});
  out.push_back({"isolated-triangle", make_isolated_triangle_fixture()});
  out.push_back({"poor-five-face", make_poor_five_face_fixture(false)});
  out.push_back({"poor-five-face-promoted", make_poor_five_face_fixture(true)});
  out.push_back({"trio", make_trio_fixture()});
  out.push_back({"trio-patch", make_trio_patch()});
  return out;
}

}  // namespace planar
