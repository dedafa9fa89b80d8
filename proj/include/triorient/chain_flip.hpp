#pragma once

#include <memory>
#include <vector>

#include "triorient/orientation.hpp"
#include "triorient/rng.hpp"

namespace triorient {

// State of the flip chain: a triangulation together with a 3-orientation.
// The external triple is shared by every state.
struct FlipState {
  std::shared_ptr<const Triangulation> tri;
  std::vector<std::uint8_t> dir;

  Orientation3 view() const { return Orientation3{tri.get(), dir}; }
};

inline FlipState make_flip_state(Triangulation t) {
  FlipState s;
  s.tri = std::make_shared<Triangulation>(std::move(t));
  s.dir = construct_initial_orientation(*s.tri).dir;
  return s;
}

inline bool flip_state_valid(const FlipState& s) {
  Orientation3 o = s.view();
  if (!orientation_valid(o)) return false;
  return schnyder_valid(derive_schnyder_coloring(o));
}

// Quadrilateral around an internal edge: the diagonal x->y plus the four
// boundary edges (z1,x), (z1,y), (z2,x), (z2,y), apexes ordered by face id.
struct Quad {
  int x, y;    // diagonal tail and head
  int z1, z2;  // apexes of the two incident faces
  std::array<std::pair<int, int>, 4> boundary;
};

inline Quad quad_of(const FlipState& s, int eid) {
  const Triangulation& t = *s.tri;
  Orientation3 o = s.view();
  Quad q{};
  q.x = o.tail_of(eid);
  q.y = o.head_of(eid);
  auto [f1, f2] = t.edge_faces[eid];
  auto apex = [&](int f) {
    for (int v : t.faces[f])
      if (v != q.x && v != q.y) return v;
    return -1;
  };
  q.z1 = apex(std::min(f1, f2));
  q.z2 = apex(std::max(f1, f2));
  q.boundary = {std::pair<int, int>{q.z1, q.x}, {q.z1, q.y}, {q.z2, q.x}, {q.z2, q.y}};
  return q;
}

// A proposal (diagonal, boundary index) is a move when the boundary edge is
// directed into the diagonal's tail and the replacement diagonal does not
// already exist.
inline bool flip_move_valid(const FlipState& s, int eid, int b, int* z_out = nullptr,
                            int* w_out = nullptr) {
  const Triangulation& t = *s.tri;
  Orientation3 o = s.view();
  Quad q = quad_of(s, eid);
  auto [z, target] = q.boundary[b];
  if (target != q.x) return false;
  int be = t.edge_id(z, q.x);
  if (!t.edge_is_internal(be)) return false;
  if (o.tail_of(be) != z) return false;
  int w = (z == q.z1) ? q.z2 : q.z1;
  if (t.adjacent(z, w)) return false;  // replacement would be a parallel edge
  if (z_out) *z_out = z;
  if (w_out) *w_out = w;
  return true;
}

struct FlipMove {
  int edge;      // internal edge id of the diagonal
  int boundary;  // 0..3
  int z, w;
};

inline std::vector<FlipMove> enumerate_flip_moves(const FlipState& s) {
  std::vector<FlipMove> out;
  for (int eid : s.tri->internal_edges)
    for (int b = 0; b < 4; ++b) {
      int z, w;
      if (flip_move_valid(s, eid, b, &z, &w)) out.push_back({eid, b, z, w});
    }
  return out;
}

// Replace the path z->x, x->y by x->z, z->w: delete diagonal xy, insert
// diagonal zw. Out-degrees of all four vertices are preserved.
inline FlipState apply_flip(const FlipState& s, const FlipMove& mv) {
  const Triangulation& t = *s.tri;
  Orientation3 o = s.view();
  int x = o.tail_of(mv.edge), y = o.head_of(mv.edge);
  int z = mv.z, w = mv.w;

  RotationSystem spec;
  spec.external = {t.labels[t.external[0]], t.labels[t.external[1]], t.labels[t.external[2]]};
  for (int v = 0; v < t.num_vertices; ++v) {
    std::vector<std::int64_t> cycle;
    const auto& rot = t.rotation[v];
    const int d = int(rot.size());
    for (int i = 0; i < d; ++i) {
      int u = rot[i];
      if ((v == x && u == y) || (v == y && u == x)) continue;  // drop diagonal
      cycle.push_back(t.labels[u]);
      int nxt = rot[(i + 1) % d];
      if (v == z && ((u == x && nxt == y) || (u == y && nxt == x)))
        cycle.push_back(t.labels[w]);
      if (v == w && ((u == x && nxt == y) || (u == y && nxt == x)))
        cycle.push_back(t.labels[z]);
    }
    spec.rotation.emplace_back(t.labels[v], std::move(cycle));
  }

  FlipState out;
  out.tri = std::make_shared<Triangulation>(build_triangulation(spec));
  const Triangulation& nt = *out.tri;
  out.dir.assign(nt.internal_edges.size(), 0);
  for (int eid : nt.internal_edges) {
    auto [a, b] = nt.edges[eid];
    int tail;
    if ((a == z && b == w) || (a == w && b == z)) {
      tail = z;
    } else if ((a == z && b == x) || (a == x && b == z)) {
      tail = x;  // reversed by the move
    } else {
      int old_eid = t.edge_id(a, b);
      tail = o.tail_of(old_eid);
    }
    out.dir[nt.internal_rank[eid]] = (tail == a) ? 1 : 0;
  }
  return out;
}

// One proposal of the edge-flip chain: uniform diagonal, uniform boundary
// edge, lazy coin. Draw order fixed (edge, boundary, coin).
inline void step_flip_chain(FlipState& s, Rng& rng) {
  const Triangulation& t = *s.tri;
  std::uint64_t er = rng.below(t.internal_edges.size());
  std::uint64_t b = rng.below(4);
  double coin = rng.unit();
  int eid = t.internal_edges[er];
  int z, w;
  if (coin < 0.5 && flip_move_valid(s, eid, int(b), &z, &w))
    s = apply_flip(s, FlipMove{eid, int(b), z, w});
}

}  // namespace triorient
