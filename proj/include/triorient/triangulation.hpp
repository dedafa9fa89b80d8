#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "triorient/common.hpp"

namespace triorient {

// Input description of an embedded triangulation: one counterclockwise
// neighbor cycle per vertex plus the external triple. The external triple
// is listed counterclockwise on the outer boundary and fixes the color
// roles: external[0] roots red, external[1] green, external[2] blue.
struct RotationSystem {
  std::array<std::int64_t, 3> external{};
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> rotation;
};

class Triangulation {
 public:
  int num_vertices = 0;
  int n_internal = 0;
  std::array<int, 3> external{};          // dense ids: red, green, blue roots
  std::vector<std::int64_t> labels;       // dense id -> original label
  std::vector<std::vector<int>> rotation; // ccw neighbor cycle per vertex

  // Derived tables, filled by build_triangulation.
  std::vector<std::array<int, 3>> faces;        // ccw triple, min vertex first
  std::vector<std::pair<int, int>> edges;       // (a,b) with a<b, sorted
  std::vector<int> internal_edges;              // edge ids, 3n of them
  std::vector<int> internal_rank;               // edge id -> rank or -1
  std::vector<std::array<int, 3>> face_edges;   // edge ids per face (ccw order)
  std::vector<std::array<int, 2>> edge_faces;   // adjacent faces (-1 = outer)

  struct Triangle {
    std::array<int, 3> verts;  // sorted
    bool facial = false;
    int face = -1;
  };
  std::vector<Triangle> triangles;  // all 3-cliques except the outer triple

  bool is_external(int v) const {
    return v == external[0] || v == external[1] || v == external[2];
  }

  int degree(int v) const { return int(rotation[v].size()); }

  int rot_pos(int v, int u) const {
    const auto& r = rotation[v];
    for (int i = 0; i < int(r.size()); ++i)
      if (r[i] == u) return i;
    return -1;
  }

  // Next neighbor counterclockwise after u around v.
  int succ(int v, int u) const {
    int i = rot_pos(v, u);
    return rotation[v][(i + 1) % degree(v)];
  }

  // Next neighbor clockwise after u around v.
  int pred(int v, int u) const {
    int i = rot_pos(v, u);
    return rotation[v][(i + degree(v) - 1) % degree(v)];
  }

  bool adjacent(int u, int v) const {
    return adj_.count(pack(u, v)) != 0;
  }

  int edge_id(int u, int v) const {
    auto it = edge_id_.find(pack(std::min(u, v), std::max(u, v)));
    return it == edge_id_.end() ? -1 : it->second;
  }

  bool edge_is_internal(int eid) const { return internal_rank[eid] >= 0; }

  // Finite face on the left of dart u->v, or -1 for the outer face.
  int face_left(int u, int v) const {
    auto it = dart_face_.find(pack(u, v));
    return it == dart_face_.end() ? -1 : it->second;
  }

  int face_index_of(std::array<int, 3> verts) const {
    std::sort(verts.begin(), verts.end());
    auto it = face_by_verts_.find(verts);
    return it == face_by_verts_.end() ? -1 : it->second;
  }

  int vertex_of_label(std::int64_t label) const {
    auto it = label_to_id_.find(label);
    if (it == label_to_id_.end()) fail(Errc::BadInput, "label", "unknown vertex label " + std::to_string(label));
    return it->second;
  }

  std::uint64_t pack(int u, int v) const {
    return std::uint64_t(u) * std::uint64_t(num_vertices) + std::uint64_t(v);
  }

  // Filled by the builder; exposed for the oracle/chains.
  std::unordered_map<std::uint64_t, int> dart_face_;
  std::unordered_map<std::uint64_t, int> edge_id_;
  std::unordered_set<std::uint64_t> adj_;
  std::map<std::array<int, 3>, int> face_by_verts_;
  std::unordered_map<std::int64_t, int> label_to_id_;
};

inline Triangulation build_triangulation(const RotationSystem& spec) {
  Triangulation t;
  const int V = int(spec.rotation.size());
  if (V < 4) fail(Errc::WrongExternalCount, "vertices", "need at least 4 vertices");
  t.num_vertices = V;
  t.n_internal = V - 3;

  // Dense ids in sorted label order so runs are reproducible.
  t.labels.reserve(V);
  for (const auto& [label, _] : spec.rotation) t.labels.push_back(label);
  std::sort(t.labels.begin(), t.labels.end());
  for (int i = 0; i < V; ++i) {
    if (i > 0 && t.labels[i] == t.labels[i - 1])
      fail(Errc::BadInput, "vertex " + std::to_string(t.labels[i]), "duplicate vertex label");
    t.label_to_id_[t.labels[i]] = i;
  }

  t.rotation.assign(V, {});
  for (const auto& [label, cycle] : spec.rotation) {
    int v = t.label_to_id_.at(label);
    for (std::int64_t nl : cycle) {
      auto it = t.label_to_id_.find(nl);
      if (it == t.label_to_id_.end())
        fail(Errc::InconsistentRotation, "vertex " + std::to_string(label),
             "neighbor label " + std::to_string(nl) + " is not a vertex");
      t.rotation[v].push_back(it->second);
    }
  }
  for (int i = 0; i < 3; ++i) {
    auto it = t.label_to_id_.find(spec.external[i]);
    if (it == t.label_to_id_.end())
      fail(Errc::WrongExternalCount, "external", "external label not a vertex");
    t.external[i] = it->second;
  }
  if (t.external[0] == t.external[1] || t.external[1] == t.external[2] ||
      t.external[0] == t.external[2])
    fail(Errc::WrongExternalCount, "external", "external vertices must be distinct");

  // Simplicity and rotation symmetry.
  for (int v = 0; v < V; ++v) {
    if (t.rotation[v].size() < 2)
      fail(Errc::InconsistentRotation, "vertex " + std::to_string(t.labels[v]), "degree below 2");
    std::unordered_set<int> seen;
    for (int u : t.rotation[v]) {
      if (u == v)
        fail(Errc::NotSimple, "vertex " + std::to_string(t.labels[v]), "self-loop");
      if (!seen.insert(u).second)
        fail(Errc::NotSimple, "vertex " + std::to_string(t.labels[v]),
             "repeated neighbor " + std::to_string(t.labels[u]));
      t.adj_.insert(t.pack(v, u));
    }
  }
  for (int v = 0; v < V; ++v)
    for (int u : t.rotation[v])
      if (!t.adj_.count(t.pack(u, v)))
        fail(Errc::InconsistentRotation, "vertex " + std::to_string(t.labels[v]),
             "edge to " + std::to_string(t.labels[u]) + " missing from the other rotation");

  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!t.adj_.count(t.pack(t.external[i], t.external[j])))
        fail(Errc::WrongExternalCount, "external", "external vertices must be mutually adjacent");

  // Edge table, sorted (a,b) with a < b.
  for (int v = 0; v < V; ++v)
    for (int u : t.rotation[v])
      if (v < u) t.edges.emplace_back(v, u);
  std::sort(t.edges.begin(), t.edges.end());
  for (int e = 0; e < int(t.edges.size()); ++e)
    t.edge_id_[t.pack(t.edges[e].first, t.edges[e].second)] = e;

  const int n = t.n_internal;
  if (int(t.edges.size()) != 3 * n + 3)
    fail(Errc::NonTriangularFace, "edges",
         "edge count " + std::to_string(t.edges.size()) + " differs from " + std::to_string(3 * n + 3));

  // Trace faces: orbits of (u,v) -> (v, pred(v,u)). With ccw rotations each
  // orbit walks a face with its interior on the left.
  const int sr = t.external[0], sg = t.external[1], sb = t.external[2];
  std::unordered_map<std::uint64_t, bool> dart_seen;
  auto next_dart = [&](int u, int v) { return std::pair<int, int>(v, t.pred(v, u)); };

  {  // Outer orbit must be the clockwise walk red -> blue -> green.
    std::pair<int, int> d{sr, sb};
    std::vector<std::pair<int, int>> orbit;
    for (int i = 0; i < 4; ++i) {
      orbit.push_back(d);
      d = next_dart(d.first, d.second);
      if (d == orbit.front()) break;
    }
    std::vector<std::pair<int, int>> want{{sr, sb}, {sb, sg}, {sg, sr}};
    if (orbit != want)
      fail(Errc::InconsistentRotation, "external",
           "outer boundary walk is not red->blue->green; rotations must be counterclockwise "
           "with the external triple in counterclockwise order");
    for (auto [u, v] : orbit) dart_seen[t.pack(u, v)] = true;
  }

  std::vector<std::array<int, 3>> raw_faces;
  for (int v = 0; v < V; ++v) {
    for (int u : t.rotation[v]) {
      if (dart_seen.count(t.pack(v, u))) continue;
      std::array<int, 3> f{};
      std::pair<int, int> d{v, u};
      int len = 0;
      do {
        if (len >= 3)
          fail(Errc::NonTriangularFace,
               "face at " + std::to_string(t.labels[v]) + "->" + std::to_string(t.labels[u]),
               "face walk longer than 3");
        f[len++] = d.first;
        dart_seen[t.pack(d.first, d.second)] = true;
        d = next_dart(d.first, d.second);
      } while (!(d.first == v && d.second == u));
      if (len != 3 || f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
        fail(Errc::NonTriangularFace, "face at " + std::to_string(t.labels[v]),
             "finite face is not a simple triangle");
      // Rotate so the smallest vertex comes first; cyclic (ccw) order kept.
      int mi = int(std::min_element(f.begin(), f.end()) - f.begin());
      std::array<int, 3> c{f[mi], f[(mi + 1) % 3], f[(mi + 2) % 3]};
      raw_faces.push_back(c);
    }
  }
  std::sort(raw_faces.begin(), raw_faces.end());
  t.faces = raw_faces;
  if (int(t.faces.size()) != 2 * n + 1)
    fail(Errc::NonTriangularFace, "faces",
         "finite face count " + std::to_string(t.faces.size()) + " differs from " + std::to_string(2 * n + 1));

  t.face_edges.assign(t.faces.size(), {});
  t.edge_faces.assign(t.edges.size(), {-1, -1});
  for (int fi = 0; fi < int(t.faces.size()); ++fi) {
    const auto& f = t.faces[fi];
    std::array<int, 3> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    t.face_by_verts_[sorted] = fi;
    for (int k = 0; k < 3; ++k) {
      int a = f[k], b = f[(k + 1) % 3];
      t.dart_face_[t.pack(a, b)] = fi;
      int e = t.edge_id(a, b);
      t.face_edges[fi][k] = e;
      if (t.edge_faces[e][0] == -1) t.edge_faces[e][0] = fi;
      else t.edge_faces[e][1] = fi;
    }
  }

  // Internal edges: everything but the three outer edges.
  t.internal_rank.assign(t.edges.size(), -1);
  for (int e = 0; e < int(t.edges.size()); ++e) {
    auto [a, b] = t.edges[e];
    bool outer = t.is_external(a) && t.is_external(b);
    if (!outer) {
      t.internal_rank[e] = int(t.internal_edges.size());
      t.internal_edges.push_back(e);
    }
  }
  if (int(t.internal_edges.size()) != 3 * n)
    fail(Errc::NonTriangularFace, "edges", "internal edge count differs from 3n");

  // All 3-cliques except the outer triple, facial flag attached.
  std::array<int, 3> outer{sr, sg, sb};
  std::sort(outer.begin(), outer.end());
  for (const auto& [a, b] : t.edges) {
    // common neighbors w > b keep each clique listed once (a < b < w)
    for (int w : t.rotation[a]) {
      if (w <= b) continue;
      if (!t.adj_.count(t.pack(b, w))) continue;
      std::array<int, 3> tri{a, b, w};
      if (tri == outer) continue;
      Triangulation::Triangle rec;
      rec.verts = tri;
      rec.face = t.face_index_of(tri);
      rec.facial = rec.face >= 0;
      t.triangles.push_back(rec);
    }
  }
  std::sort(t.triangles.begin(), t.triangles.end(),
            [](const auto& x, const auto& y) { return x.verts < y.verts; });
  return t;
}

// Builds a triangulation from an unoriented finite-face list. Faces are
// oriented consistently by propagating from the outer boundary, then the
// rotation system is recovered from the oriented corners. Labels are kept.
inline Triangulation triangulation_from_faces(std::array<std::int64_t, 3> external,
                                              std::vector<std::array<std::int64_t, 3>> face_list) {
  std::vector<std::int64_t> labels;
  for (const auto& f : face_list)
    for (auto v : f) labels.push_back(v);
  for (auto v : external) labels.push_back(v);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::unordered_map<std::int64_t, int> id;
  for (int i = 0; i < int(labels.size()); ++i) id[labels[i]] = i;
  const int V = int(labels.size());

  auto pk = [&](int u, int v) { return std::uint64_t(u) * V + v; };

  std::vector<std::array<int, 3>> fs;
  fs.reserve(face_list.size());
  std::sort(face_list.begin(), face_list.end(),
            [](auto a, auto b) { std::sort(a.begin(), a.end()); std::sort(b.begin(), b.end()); return a < b; });
  for (const auto& f : face_list)
    fs.push_back({id.at(f[0]), id.at(f[1]), id.at(f[2])});

  std::unordered_map<std::uint64_t, std::vector<int>> edge_face;
  for (int i = 0; i < int(fs.size()); ++i)
    for (int k = 0; k < 3; ++k) {
      int a = fs[i][k], b = fs[i][(k + 1) % 3];
      edge_face[pk(std::min(a, b), std::max(a, b))].push_back(i);
    }

  const int sr = id.at(external[0]), sg = id.at(external[1]), sb = id.at(external[2]);

  // Oriented darts per face; outer face is fixed to the red->blue->green walk,
  // so each finite face adjacent to an outer edge uses the reversed dart.
  std::vector<std::array<int, 3>> oriented(fs.size());
  std::vector<int> state(fs.size(), 0);  // 0 unseen, 1 oriented

  auto orient_face = [&](int fi, int a, int b) {
    // orient face fi so that it contains dart a->b
    const auto& f = fs[fi];
    std::array<int, 3> v = f;
    for (int rot = 0; rot < 3; ++rot) {
      std::array<int, 3> c{v[rot % 3], v[(rot + 1) % 3], v[(rot + 2) % 3]};
      if (c[0] == a && c[1] == b) { oriented[fi] = c; return; }
      std::array<int, 3> r{v[rot % 3], v[(rot + 2) % 3], v[(rot + 1) % 3]};
      if (r[0] == a && r[1] == b) { oriented[fi] = r; return; }
    }
    fail(Errc::BadInput, "face", "face does not contain requested dart");
  };

  std::vector<int> queue;
  auto seed = [&](int a, int b) {
    auto it = edge_face.find(pk(std::min(a, b), std::max(a, b)));
    if (it == edge_face.end() || it->second.size() != 1)
      fail(Errc::BadInput, "external", "outer edge must bound exactly one finite face");
    int fi = it->second[0];
    if (state[fi] == 0) {
      orient_face(fi, b, a);  // outer used a->b, finite side uses b->a
      state[fi] = 1;
      queue.push_back(fi);
    }
  };
  seed(sr, sb);
  seed(sb, sg);
  seed(sg, sr);

  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int fi = queue[qi];
    const auto& c = oriented[fi];
    for (int k = 0; k < 3; ++k) {
      int a = c[k], b = c[(k + 1) % 3];
      auto& lst = edge_face[pk(std::min(a, b), std::max(a, b))];
      for (int other : lst) {
        if (other == fi) continue;
        if (state[other] == 0) {
          orient_face(other, b, a);
          state[other] = 1;
          queue.push_back(other);
        }
      }
    }
  }
  for (int i = 0; i < int(fs.size()); ++i)
    if (state[i] == 0) fail(Errc::BadInput, "faces", "face set is not edge-connected to the boundary");

  // Corner successors: in the ccw face (a,b,c) the dart a->b has the face
  // on its left, so a follows c counterclockwise around b.
  std::vector<std::unordered_map<int, int>> succ(V);
  auto add_succ = [&](int v, int from, int to) {
    auto [it, fresh] = succ[v].emplace(from, to);
    if (!fresh && it->second != to)
      fail(Errc::InconsistentRotation, "vertex " + std::to_string(labels[v]),
           "conflicting corners; faces do not form a disk");
  };
  for (int i = 0; i < int(fs.size()); ++i) {
    const auto& c = oriented[i];
    add_succ(c[1], c[2], c[0]);
    add_succ(c[2], c[0], c[1]);
    add_succ(c[0], c[1], c[2]);
  }
  add_succ(sb, sg, sr);
  add_succ(sg, sr, sb);
  add_succ(sr, sb, sg);

  RotationSystem spec;
  spec.external = external;
  for (int v = 0; v < V; ++v) {
    if (succ[v].empty())
      fail(Errc::InconsistentRotation, "vertex " + std::to_string(labels[v]), "isolated vertex");
    int start = succ[v].begin()->first;
    for (const auto& [k, _] : succ[v]) start = std::min(start, k);
    std::vector<std::int64_t> cycle;
    int cur = start;
    do {
      cycle.push_back(labels[cur]);
      auto it = succ[v].find(cur);
      if (it == succ[v].end())
        fail(Errc::InconsistentRotation, "vertex " + std::to_string(labels[v]),
             "corners do not close into a cycle");
      cur = it->second;
    } while (cur != start && cycle.size() <= succ[v].size());
    if (cur != start || cycle.size() != succ[v].size())
      fail(Errc::InconsistentRotation, "vertex " + std::to_string(labels[v]),
           "corners do not form a single cycle");
    spec.rotation.emplace_back(labels[v], std::move(cycle));
  }
  return build_triangulation(spec);
}

// One 4-connected piece of the separating-triangle decomposition.
struct DecompositionPiece {
  Triangulation tri;
  std::vector<int> assigned_faces;  // face ids of the parent triangulation
  bool is_top = false;
  std::array<int, 3> cut_verts{-1, -1, -1};  // parent ids, top piece: external
};

// Splits T at its non-facial triangles. Faces are assigned to the innermost
// enclosing separating triangle; each directly nested triangle reappears as
// a face of the enclosing piece.
inline std::vector<DecompositionPiece> decompose_by_separating_triangles(const Triangulation& t) {
  std::vector<std::array<int, 3>> cuts;
  for (const auto& tri : t.triangles)
    if (!tri.facial) cuts.push_back(tri.verts);

  const int F = int(t.faces.size());
  // Interior face set per cut, via dual BFS from the outer side with the
  // cut's edges removed.
  std::vector<std::vector<char>> interior(cuts.size(), std::vector<char>(F, 0));
  for (size_t ci = 0; ci < cuts.size(); ++ci) {
    const auto& c = cuts[ci];
    std::array<int, 3> ce{t.edge_id(c[0], c[1]), t.edge_id(c[1], c[2]), t.edge_id(c[0], c[2])};
    std::vector<char> outside(F, 0);
    std::vector<int> stack;
    for (int e = 0; e < int(t.edges.size()); ++e) {
      if (e == ce[0] || e == ce[1] || e == ce[2]) continue;
      if (t.edge_faces[e][1] == -1) {  // borders the outer face
        int f = t.edge_faces[e][0];
        if (!outside[f]) { outside[f] = 1; stack.push_back(f); }
      }
    }
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int e : t.face_edges[f]) {
        if (e == ce[0] || e == ce[1] || e == ce[2]) continue;
        for (int g : t.edge_faces[e]) {
          if (g >= 0 && !outside[g]) { outside[g] = 1; stack.push_back(g); }
        }
      }
    }
    for (int f = 0; f < F; ++f) interior[ci][f] = !outside[f];
  }

  auto interior_size = [&](size_t ci) {
    int s = 0;
    for (char b : interior[ci]) s += b;
    return s;
  };

  // innermost cut containing each face (-1: top region)
  std::vector<int> owner(F, -1);
  for (int f = 0; f < F; ++f) {
    int best = -1, best_size = F + 1;
    for (size_t ci = 0; ci < cuts.size(); ++ci)
      if (interior[ci][f] && interior_size(ci) < best_size) {
        best = int(ci);
        best_size = interior_size(ci);
      }
    owner[f] = best;
  }
  // direct nesting parent of each cut (-1: top)
  std::vector<int> cut_parent(cuts.size(), -1);
  for (size_t ci = 0; ci < cuts.size(); ++ci) {
    int best = -1, best_size = F + 1;
    for (size_t cj = 0; cj < cuts.size(); ++cj) {
      if (ci == cj) continue;
      // cut ci nested in cj iff all of ci's interior lies in cj's interior
      bool nested = true;
      for (int f = 0; f < F; ++f)
        if (interior[ci][f] && !interior[cj][f]) { nested = false; break; }
      if (nested && interior_size(cj) < best_size) { best = int(cj); best_size = interior_size(cj); }
    }
    cut_parent[ci] = best;
  }

  std::vector<DecompositionPiece> out;
  for (int piece = -1; piece < int(cuts.size()); ++piece) {
    DecompositionPiece p;
    p.is_top = piece < 0;
    std::vector<std::array<std::int64_t, 3>> face_list;
    for (int f = 0; f < F; ++f)
      if (owner[f] == piece) {
        p.assigned_faces.push_back(f);
        const auto& fv = t.faces[f];
        face_list.push_back({t.labels[fv[0]], t.labels[fv[1]], t.labels[fv[2]]});
      }
    for (size_t cj = 0; cj < cuts.size(); ++cj)
      if (cut_parent[cj] == piece) {
        const auto& c = cuts[cj];
        face_list.push_back({t.labels[c[0]], t.labels[c[1]], t.labels[c[2]]});
      }
    std::array<std::int64_t, 3> ext;
    if (piece < 0) {
      ext = {t.labels[t.external[0]], t.labels[t.external[1]], t.labels[t.external[2]]};
      p.cut_verts = t.external;
    } else {
      // Orient the cut so the interior lies left of x->y, then the piece's
      // outer walk red->blue->green matches (y, z, x).
      const auto& c = cuts[piece];
      int x = c[0], y = c[1], z = c[2];
      int f_xy = t.face_left(x, y);
      bool in_left = f_xy >= 0 && interior[piece][f_xy];
      if (!in_left) std::swap(y, z);  // now x->y has the interior on the left
      ext = {t.labels[y], t.labels[z], t.labels[x]};
      p.cut_verts = {y, z, x};
    }
    p.tri = triangulation_from_faces(ext, std::move(face_list));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace triorient
