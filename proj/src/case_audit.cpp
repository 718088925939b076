#include "planar/case_audit.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace planar {

namespace {

struct Auditor {
  const PlaneGraph& g;
  const Classification& cls;
  const TransferLedger& ledger;
  const ChargeState& finals;
  CaseAudit out;

  std::vector<char> face_isolated;      // 3-face with no adjacent 3-face
  std::vector<int> cluster_of_face;     // index into ledger.clusters or -1

  explicit Auditor(const PlaneGraph& g_, const Classification& cls_,
                   const TransferLedger& ledger_, const ChargeState& finals_)
      : g(g_), cls(cls_), ledger(ledger_), finals(finals_) {
    face_isolated.assign(g.face_count(), 0);
    cluster_of_face.assign(g.face_count(), -1);
    for (int i = 0; i < static_cast<int>(ledger.clusters.size()); ++i)
      for (int f : ledger.clusters[i].faces) cluster_of_face[f] = i;
    for (const Face& f : g.faces())
      if (f.degree() == 3 && cluster_of_face[f.id] < 0) face_isolated[f.id] = 1;
  }

  void emit(const std::string& element, const std::string& label,
            const char* claim, Rational claimed, Rational actual) {
    CaseAuditEntry e;
    e.element = element;
    e.case_label = label;
    e.claim = claim;
    e.claimed = std::move(claimed);
    e.actual = std::move(actual);
    e.agrees = e.claim == std::string("eq") ? e.actual == e.claimed
                                            : e.actual >= e.claimed;
    out.entries.push_back(std::move(e));
  }
  void uncovered(const std::string& element, const std::string& reason) {
    out.uncovered.push_back({element, reason});
  }

  // ---- vertices ---------------------------------------------------------

  int count_incident(int v, auto pred) const {
    int c = 0;
    for (int f : g.incident_faces(v))
      if (pred(g.face_degree(f))) ++c;
    return c;
  }

  bool has_clustered_triangle(int v) const {
    for (int f : g.incident_faces(v))
      if (g.face_degree(f) == 3 && !face_isolated[f]) return true;
    return false;
  }

  void audit_vertex(int v) {
    const std::string el = "v" + std::to_string(v);
    const int d = g.vertex_degree(v);
    const Rational actual = finals.vertex_charge[v];
    const auto degs = cls.profile(v).incident_face_degrees;  // sorted
    const int t3 = count_incident(v, [](int fd) { return fd == 3; });
    const int f4 = count_incident(v, [](int fd) { return fd == 4; });
    const bool has6 = !degs.empty() && degs.back() >= 6;

    if (d <= 3) {
      uncovered(el, "degree below 4");
      return;
    }
    if (d == 4) {
      if (cls.is_flaw(v)) {
        int big = 0;
        bool all4 = true;
        for (int w : g.neighbors(v)) {
          int dw = g.vertex_degree(w);
          if (dw >= 5) ++big;
          if (dw != 4) all4 = false;
        }
        if (big == 0 && all4)
          emit(el, "1.1-all-4-neighbors", "eq", rat(0), actual);
        else if (big == 1)
          emit(el, "1.1-one-big-neighbor", "ge", rat(0), actual);
        else if (big >= 2)
          emit(el, "1.1-two-big-neighbors", "ge", rat(0), actual);
        else
          uncovered(el, "flaw vertex with a degree-3 neighbor");
        return;
      }
      if (t3 <= 1) {
        emit(el, "1.2-at-most-one-triangle", "ge", rat(0), actual);
      } else if (t3 == 2) {
        if (degs == std::vector<int>{3, 3, degs[2], degs[3]} && degs[2] >= 6)
          emit(el, "1.2-two-triangles", "eq", rat(0), actual);
        else
          uncovered(el, "two triangles but not a (3,3,6+,6+)-vertex");
      } else if (t3 == 3) {
        if (degs[3] >= 6)
          emit(el, "1.2-three-triangles", "eq", rat(0), actual);
        else
          uncovered(el, "three triangles but fourth face below degree 6");
      } else {
        emit(el, "1.2-hub", "eq", rat(0), actual);
      }
      return;
    }
    if (d == 5) {
      if (has_clustered_triangle(v)) {
        int bad = 0;
        for (int f : g.incident_faces(v))
          if (g.face_degree(f) == 3 && cls.face_role(v, f) == FaceRole::bad) ++bad;
        if (bad > 2) {
          uncovered(el, "more than two bad faces");
          return;
        }
        emit(el, "2.1-" + std::to_string(bad) + "-bad-faces", "ge", rat(0), actual);
        return;
      }
      const int t5 = count_incident(v, [](int fd) { return fd == 5; });
      if (has6) {
        if (t3 <= 2)
          emit(el, "2.2-with-big-face", "ge", rat(0), actual);
        else
          uncovered(el, "three isolated triangles at a 5-vertex");
        return;
      }
      if (t3 == 0) {
        if (t5 >= 2)
          emit(el, "2.2-no-triangle-two-5-faces", "ge", rat(0), actual);
        else if (t5 == 1)
          emit(el, "2.2-no-triangle-one-5-face", "ge", rat(0), actual);
        else
          emit(el, "2.2-all-4-faces", "ge", rat(0), actual);
      } else if (t3 == 1) {
        if (t5 >= 3)
          emit(el, "2.2-one-triangle-three-5-faces", "ge", rat(0), actual);
        else if (t5 == 2 && f4 == 2)
          emit(el, "2.2-one-triangle-two-4-faces", "ge", rat(0), actual);
        else
          uncovered(el, "one isolated triangle, profile outside enumeration");
      } else if (t3 == 2) {
        if (t5 == 3)
          emit(el, "2.2-two-triangles", "ge", rat(0), actual);
        else
          uncovered(el, "two isolated triangles but not (3,3,5,5,5)");
      } else {
        uncovered(el, "three isolated triangles at a 5-vertex");
      }
      return;
    }
    if (d == 6) {
      if (has_clustered_triangle(v)) {
        emit(el, "3.1", "ge", rat(0), actual);
        return;
      }
      if (has6) {
        if (t3 <= 2)
          emit(el, "3.2-with-big-face", "ge", rat(0), actual);
        else
          emit(el, "3.2-with-big-face-three-triangles", "ge", rat(0), actual);
        return;
      }
      if (t3 == 0) {
        emit(el, "3.2-no-triangle", "ge", rat(0), actual);
      } else if (t3 == 1) {
        if (f4 <= 3)
          emit(el, "3.2-one-triangle", "ge", rat(0), actual);
        else
          uncovered(el, "one triangle with four 4-faces");
      } else if (t3 == 2) {
        if (f4 <= 1)
          emit(el, "3.2-two-triangles", "ge", rat(0), actual);
        else
          uncovered(el, "two triangles with several 4-faces");
      } else if (t3 == 3) {
        if (f4 == 0)
          emit(el, "3.2-three-triangles", "ge", rat(0), actual);
        else
          uncovered(el, "three triangles with a 4-face");
      } else {
        uncovered(el, "four isolated triangles at a 6-vertex");
      }
      return;
    }
    // d >= 7
    if (has_clustered_triangle(v)) {
      emit(el, "4.1", "ge", rat(0), actual);
      return;
    }
    if (d == 7) {
      if (t3 <= 2)
        emit(el, "4.2-seven-at-most-two-triangles", "ge", rat(0), actual);
      else if (t3 == 3 && f4 <= 1)
        emit(el, "4.2-seven-three-triangles", "ge", rat(0), actual);
      else
        uncovered(el, "7-vertex profile outside enumeration");
      return;
    }
    if (t3 * 2 <= d)
      emit(el, "4.2-eight-plus", "ge", rat(0), actual);
    else
      uncovered(el, "more isolated triangles than degree/2");
  }

  // ---- faces ------------------------------------------------------------

  std::vector<int> walk_degrees(int f) const {
    auto degs = g.face_vertex_degrees(f);
    std::sort(degs.begin(), degs.end());
    return degs;
  }

  int adjacent_big_face_count(int f) const {
    std::set<int> others;
    const Face& fc = g.face(f);
    for (int i = 0; i < fc.degree(); ++i) {
      Edge e(fc.boundary[i], fc.boundary[(i + 1) % fc.degree()]);
      auto [a, b] = g.faces_sharing_edge(e);
      int other = a == f ? b : a;
      if (other != f && g.face_degree(other) >= 4) others.insert(other);
    }
    return static_cast<int>(others.size());
  }

  void audit_isolated_triangle(int f) {
    const std::string el = "f" + std::to_string(f);
    const Rational actual = finals.face_charge[f];
    auto degs = walk_degrees(f);
    if (degs[0] < 4) {
      uncovered(el, "triangle with a vertex of degree below 4");
      return;
    }
    int flaws = 0;
    for (int v : g.face(f).boundary)
      if (cls.is_flaw(v)) ++flaws;
    if (flaws == 0) {
      emit(el, "5-no-flaw", "eq", rat(0), actual);
      return;
    }
    bool pattern_445 = degs[0] == 4 && degs[1] == 4 && degs[2] >= 5;
    bool pattern_455 = degs[0] == 4 && degs[1] >= 5;
    if (pattern_445 && flaws == 2)
      emit(el, "5-(4,4,5+)-both-flaw", "eq", rat(0), actual);
    else if (pattern_445 && flaws == 1)
      emit(el, "5-(4,4,5+)-one-flaw", "eq", rat(0), actual);
    else if (pattern_455 && flaws == 1)
      emit(el, "5-(4,5+,5+)-flaw", "eq", rat(0), actual);
    else
      uncovered(el, "flaw pattern outside enumeration");
  }

  void audit_clustered_triangle(int f) {
    const std::string el = "f" + std::to_string(f);
    const Rational actual = finals.face_charge[f];
    int ci = cluster_of_face[f];
    const Cluster& c = ledger.clusters[ci];
    if (c.type == "trio" || c.type == "wheel") return;  // judged per cluster
    if (cls.face_in_wheel(f)) {
      uncovered(el, "wheel face inside an untyped cluster");
      return;
    }
    if (cls.face_in_trio(f)) {
      uncovered(el, "trio face inside an untyped cluster");
      return;
    }
    if (walk_degrees(f)[0] < 4) {
      uncovered(el, "triangle with a vertex of degree below 4");
      return;
    }
    emit(el, "6.1", "eq", rat(0), actual);
  }

  void audit_cluster(const Cluster& c) {
    std::string el = "cluster(";
    for (std::size_t i = 0; i < c.faces.size(); ++i)
      el += (i ? "," : "") + std::string("f") + std::to_string(c.faces[i]);
    el += ")";
    Rational total;
    for (int f : c.faces) total += finals.face_charge[f];

    if (c.type == "trio") {
      const Trio& t = cls.trios()[c.type_index];
      int dworst = g.vertex_degree(t.worst);
      std::vector<int> dworse{g.vertex_degree(t.worse[0]),
                              g.vertex_degree(t.worse[1])};
      std::vector<int> dbad{g.vertex_degree(t.bad[0]), g.vertex_degree(t.bad[1])};
      std::sort(dworse.begin(), dworse.end());
      std::sort(dbad.begin(), dbad.end());
      if (std::min({dworst, dworse[0], dbad[0]}) < 4) {
        uncovered(el, "trio with a vertex of degree below 4");
        return;
      }
      if (dworst >= 5) {
        emit(el, "6.2-worst-big", "ge", rat(0), total);
        return;
      }
      if (dworse == std::vector<int>{4, 4} && dbad[0] >= 5)
        emit(el, "6.2-worse-4-4-bad-big", "eq", rat(0), total);
      else if (dworse == std::vector<int>{5, 5} && dbad == std::vector<int>{4, 4})
        emit(el, "6.2-worse-5-5", "eq", rat(0), total);
      else if (dworse[0] == 4 && dworse[1] == 5 && dbad[0] == 4 && dbad[1] >= 5)
        emit(el, "6.2-worse-4-5-bad-4-big", "eq", rat(0), total);
      else if (dworse[0] == 4 && dworse[1] >= 6 && dbad == std::vector<int>{4, 4})
        emit(el, "6.2-worse-big", "eq", rat(0), total);
      else
        uncovered(el, "trio degree pattern outside enumeration");
      return;
    }
    if (c.type == "wheel") {
      const WheelW5& w = cls.wheels()[c.type_index];
      std::vector<int> ext;
      for (int x : w.externals) ext.push_back(g.vertex_degree(x));
      std::sort(ext.begin(), ext.end());
      if (ext[0] < 4) {
        uncovered(el, "wheel with an external vertex of degree below 4");
        return;
      }
      int sixes = 0, fives = 0;
      for (int d : ext) {
        if (d >= 6) ++sixes;
        else if (d == 5) ++fives;
      }
      if (sixes == 0) {
        if (fives >= 3)
          emit(el, "6.3-no-six", "ge", rat(0), total);
        else
          uncovered(el, "wheel on 5-minus-vertices with fewer than three 5-vertices");
      } else if (sixes == 1) {
        if (fives >= 1)
          emit(el, "6.3-one-six", "ge", rat(0), total);
        else
          uncovered(el, "wheel with one 6+-vertex and no other 5+-vertex");
      } else {
        emit(el, "6.3-two-plus-six", "ge", rat(0), total);
      }
      return;
    }
    uncovered(el, "cluster outside the trio/wheel taxonomy");
  }

  void audit_face(int f) {
    const std::string el = "f" + std::to_string(f);
    const Rational actual = finals.face_charge[f];
    const int d = g.face_degree(f);
    if (d == 3) {
      if (face_isolated[f])
        audit_isolated_triangle(f);
      else
        audit_clustered_triangle(f);
      return;
    }
    if (d == 4) {
      auto degs = walk_degrees(f);
      if (degs[0] < 4) {
        uncovered(el, "4-face with a vertex of degree below 4");
        return;
      }
      int bigs = 0;
      for (int x : degs)
        if (x >= 5) ++bigs;
      if (bigs == 0)
        uncovered(el, "(4,4,4,4)-face");
      else if (bigs == 1)
        emit(el, "7-(4,4,4,5+)", "eq", rat(0), actual);
      else
        emit(el, "7-two-big", "ge", rat(0), actual);
      return;
    }
    if (d == 5) {
      auto degs = walk_degrees(f);
      if (degs[0] < 4) {
        uncovered(el, "5-face with a vertex of degree below 4");
        return;
      }
      std::vector<int> bigs;
      for (int v : g.face(f).boundary)
        if (g.vertex_degree(v) >= 5) bigs.push_back(v);
      if (bigs.size() >= 3) {
        emit(el, "8.1", "ge", rat(0), actual);
      } else if (bigs.size() == 2) {
        if (g.has_edge(bigs[0], bigs[1]))
          emit(el, "8.2-adjacent", "ge", rat(0), actual);
        else
          emit(el, "8.2-nonadjacent", "ge", rat(0), actual);
      } else {
        if (!bigs.empty() && g.vertex_degree(bigs[0]) >= 6) {
          emit(el, "8.3-(4,4,4,4,6+)", "ge", rat(0), actual);
          return;
        }
        if (adjacent_big_face_count(f) <= 1) {
          emit(el, "8.3-poor", "ge", rat(0), actual);
        } else {
          int nonflaw = 0;
          for (int v : g.face(f).boundary)
            if (!cls.is_flaw(v)) ++nonflaw;
          if (nonflaw >= 3)
            emit(el, "8.3-two-big-faces", "ge", rat(0), actual);
          else
            uncovered(el, "5-face with several big faces and flaw majority");
        }
      }
      return;
    }
    if (d == 6) {
      emit(el, "six-face", "eq", rat(0), actual);
      return;
    }
    emit(el, "seven-plus-face", "ge", rat(0), actual);
  }
};

}  // namespace

CaseAudit case_audit(const PlaneGraph& g, const Classification& cls,
                     const TransferLedger& ledger, const ChargeState& final_state) {
  Auditor a(g, cls, ledger, final_state);
  for (int v = 0; v < g.vertex_count(); ++v) a.audit_vertex(v);
  for (int f = 0; f < g.face_count(); ++f) a.audit_face(f);
  for (const Cluster& c : ledger.clusters) a.audit_cluster(c);
  return std::move(a.out);
}

}  // namespace planar
