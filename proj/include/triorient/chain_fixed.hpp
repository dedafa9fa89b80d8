#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "triorient/orientation.hpp"
#include "triorient/rng.hpp"

namespace triorient {

enum class FaceCycle { DirectedCcw, DirectedCw, Mixed, Boundary };

struct FaceStatus {
  FaceCycle kind;
  int disagreeing_edge = -1;  // set for Mixed
};

inline FaceStatus face_status(const Orientation3& o, int face) {
  const Triangulation& t = *o.tri;
  const auto& fv = t.faces[face];
  int agree = 0;
  bool agrees[3];
  for (int k = 0; k < 3; ++k) {
    int a = fv[k], b = fv[(k + 1) % 3];
    int eid = t.face_edges[face][k];
    if (!t.edge_is_internal(eid)) return {FaceCycle::Boundary, -1};
    agrees[k] = o.tail_of(eid) == a;
    if (agrees[k]) ++agree;
  }
  if (agree == 3) return {FaceCycle::DirectedCcw, -1};
  if (agree == 0) return {FaceCycle::DirectedCw, -1};
  bool minority = agree == 1;  // the lone edge agreeing with ccw
  for (int k = 0; k < 3; ++k)
    if (agrees[k] == minority) return {FaceCycle::Mixed, t.face_edges[face][k]};
  return {FaceCycle::Mixed, -1};
}

inline bool face_directed(const Orientation3& o, int face) {
  auto st = face_status(o, face);
  return st.kind == FaceCycle::DirectedCcw || st.kind == FaceCycle::DirectedCw;
}

inline void reverse_face(Orientation3& o, int face) {
  for (int e : o.tri->face_edges[face]) o.flip(e);
}

// A 3-clique (facial or not) is a directed cycle iff its three edges are
// internal and cyclically oriented.
inline bool triangle_directed(const Orientation3& o, const std::array<int, 3>& verts) {
  const Triangulation& t = *o.tri;
  int e01 = t.edge_id(verts[0], verts[1]);
  int e12 = t.edge_id(verts[1], verts[2]);
  int e20 = t.edge_id(verts[2], verts[0]);
  if (!t.edge_is_internal(e01) || !t.edge_is_internal(e12) || !t.edge_is_internal(e20))
    return false;
  bool a = o.tail_of(e01) == verts[0];
  bool b = o.tail_of(e12) == verts[1];
  bool c = o.tail_of(e20) == verts[2];
  return (a && b && c) || (!a && !b && !c);
}

inline void reverse_triangle(Orientation3& o, const std::array<int, 3>& verts) {
  o.flip(o.tri->edge_id(verts[0], verts[1]));
  o.flip(o.tri->edge_id(verts[1], verts[2]));
  o.flip(o.tri->edge_id(verts[2], verts[0]));
}

// One proposal of the triangle-reversing chain: pick a triangle uniformly,
// reverse it with probability 1/2 if it is a directed cycle. Draw order is
// fixed (index, then coin).
inline void step_triangle_chain(Orientation3& o, Rng& rng) {
  const Triangulation& t = *o.tri;
  std::uint64_t idx = rng.below(t.triangles.size());
  double coin = rng.unit();
  const auto& tri = t.triangles[idx];
  if (coin < 0.5 && triangle_directed(o, tri.verts)) reverse_triangle(o, tri.verts);
}

struct Tower {
  std::vector<int> faces;        // f_1 .. f_k, f_k directed
  std::vector<int> cycle_edges;  // the surrounding directed cycle
};

// The unique tower starting at the given face, if any: follow disagreeing
// edges until a directed face, with no face repeats and no vertex incident
// to four consecutive faces of the path.
inline std::optional<Tower> find_tower(const Orientation3& o, int face) {
  const Triangulation& t = *o.tri;
  Tower tw;
  std::unordered_map<int, std::pair<int, int>> runs;  // vertex -> (last index, run)
  std::vector<char> visited(t.faces.size(), 0);
  int cur = face;
  for (;;) {
    if (visited[cur]) return std::nullopt;
    int idx = int(tw.faces.size());
    for (int v : t.faces[cur]) {
      auto& rec = runs[v];
      if (!tw.faces.empty() && rec.first == idx - 1 && rec.second > 0)
        rec = {idx, rec.second + 1};
      else
        rec = {idx, 1};
      if (rec.second > 3) return std::nullopt;
    }
    visited[cur] = 1;
    tw.faces.push_back(cur);
    FaceStatus st = face_status(o, cur);
    if (st.kind == FaceCycle::Boundary) return std::nullopt;
    if (st.kind != FaceCycle::Mixed) break;  // directed: tower ends here
    auto [f1, f2] = t.edge_faces[st.disagreeing_edge];
    cur = (f1 == cur) ? f2 : f1;
  }
  // Edges on the region boundary appear in exactly one face of the path.
  std::unordered_map<int, int> count;
  for (int f : tw.faces)
    for (int e : t.face_edges[f]) ++count[e];
  for (int f : tw.faces)
    for (int e : t.face_edges[f])
      if (count[e] == 1) tw.cycle_edges.push_back(e);
  std::sort(tw.cycle_edges.begin(), tw.cycle_edges.end());
  tw.cycle_edges.erase(std::unique(tw.cycle_edges.begin(), tw.cycle_edges.end()),
                       tw.cycle_edges.end());
  return tw;
}

// Reversing the tower flips exactly the surrounding cycle; interior edges
// are flipped twice by the face-by-face reading and cancel.
inline Orientation3 reverse_tower(const Orientation3& o, const Tower& tw) {
  auto again = find_tower(o, tw.faces.front());
  if (!again || again->faces != tw.faces)
    fail(Errc::InvalidTower, "tower", "tower does not match the current state");
  Orientation3 out = o;
  for (int e : tw.cycle_edges) out.flip(e);
  return out;
}

inline double tower_accept_probability(int k) { return k == 1 ? 0.5 : 1.0 / (6.0 * k); }

// One proposal of the tower chain: pick a finite face uniformly; if it
// begins a tower of length k, reverse with probability 1/2 (k = 1) or
// 1/(6k). Draw order fixed (face, then coin).
inline void step_tower_chain(Orientation3& o, Rng& rng) {
  const Triangulation& t = *o.tri;
  std::uint64_t fi = rng.below(t.faces.size());
  double coin = rng.unit();
  auto tw = find_tower(o, int(fi));
  if (!tw) return;
  if (coin < tower_accept_probability(int(tw->faces.size()))) o = reverse_tower(o, *tw);
}

}  // namespace triorient
