#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <queue>
#include <vector>

#include "triorient/triangulation.hpp"

namespace triorient {

// Direction per internal edge of a fixed triangulation. Bit 1 means the
// edge (a,b), a < b, is directed a -> b.
struct Orientation3 {
  const Triangulation* tri = nullptr;
  std::vector<std::uint8_t> dir;  // indexed by internal edge rank

  bool from_low(int eid) const { return dir[tri->internal_rank[eid]] != 0; }

  int tail_of(int eid) const {
    auto [a, b] = tri->edges[eid];
    return from_low(eid) ? a : b;
  }
  int head_of(int eid) const {
    auto [a, b] = tri->edges[eid];
    return from_low(eid) ? b : a;
  }

  // True iff the internal edge {u,v} is directed u -> v.
  bool directed_from(int u, int v) const {
    int eid = tri->edge_id(u, v);
    return tail_of(eid) == u;
  }

  void flip(int eid) { dir[tri->internal_rank[eid]] ^= 1; }

  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int i = 0; i < int(dir.size()); ++i)
      if (dir[i]) k |= (std::uint64_t{1} << i);
    return k;
  }

  bool operator==(const Orientation3& o) const { return tri == o.tri && dir == o.dir; }
};

inline Orientation3 orientation_from_key(const Triangulation& t, std::uint64_t key) {
  Orientation3 o;
  o.tri = &t;
  o.dir.assign(t.internal_edges.size(), 0);
  for (int i = 0; i < int(o.dir.size()); ++i) o.dir[i] = (key >> i) & 1;
  return o;
}

inline int out_degree(const Orientation3& o, int v) {
  int d = 0;
  for (int u : o.tri->rotation[v]) {
    int eid = o.tri->edge_id(v, u);
    if (o.tri->edge_is_internal(eid) && o.tail_of(eid) == v) ++d;
  }
  return d;
}

inline bool orientation_valid(const Orientation3& o) {
  const Triangulation& t = *o.tri;
  for (int v = 0; v < t.num_vertices; ++v) {
    int want = t.is_external(v) ? 0 : 3;
    if (out_degree(o, v) != want) return false;
  }
  return true;
}

// Deterministic state via out-degree constrained flow: each internal vertex
// supplies 3 units, each internal edge absorbs 1 from one endpoint. Forced
// darts (tail, head) pin the paying endpoint of selected edges; Infeasible
// when no 3-orientation satisfies them.
inline Orientation3 construct_orientation(const Triangulation& t,
                                          const std::vector<std::pair<int, int>>& forced = {}) {
  const int n = t.n_internal;
  const int m = int(t.internal_edges.size());
  std::vector<int> forced_tail(m, -1);
  for (auto [from, to] : forced) {
    int eid = t.edge_id(from, to);
    if (eid < 0 || !t.edge_is_internal(eid))
      fail(Errc::BadInput, "forced", "forced dart is not an internal edge");
    forced_tail[t.internal_rank[eid]] = from;
  }
  // nodes: 0 source, 1..V vertices, V+1..V+m edge nodes, V+m+1 sink
  const int V = t.num_vertices;
  const int source = 0, sink = V + m + 1, N = V + m + 2;
  struct Arc { int to, cap, flow; };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj(N);
  auto add_arc = [&](int a, int b, int cap) {
    adj[a].push_back(int(arcs.size()));
    arcs.push_back({b, cap, 0});
    adj[b].push_back(int(arcs.size()));
    arcs.push_back({a, 0, 0});
  };
  for (int v = 0; v < V; ++v)
    if (!t.is_external(v)) add_arc(source, 1 + v, 3);
  for (int r = 0; r < m; ++r) {
    int eid = t.internal_edges[r];
    auto [a, b] = t.edges[eid];
    bool allow_a = !t.is_external(a) && (forced_tail[r] == -1 || forced_tail[r] == a);
    bool allow_b = !t.is_external(b) && (forced_tail[r] == -1 || forced_tail[r] == b);
    if (allow_a) add_arc(1 + a, 1 + V + r, 1);
    if (allow_b) add_arc(1 + b, 1 + V + r, 1);
    if (!allow_a && !allow_b)
      fail(Errc::Infeasible, "forced", "forced dart points out of an external vertex");
    add_arc(1 + V + r, sink, 1);
  }

  int total = 0;
  for (;;) {  // Edmonds-Karp
    std::vector<int> prev_arc(N, -1);
    std::queue<int> q;
    q.push(source);
    prev_arc[source] = -2;
    while (!q.empty() && prev_arc[sink] == -1) {
      int x = q.front();
      q.pop();
      for (int ai : adj[x]) {
        const Arc& a = arcs[ai];
        if (a.cap - a.flow > 0 && prev_arc[a.to] == -1) {
          prev_arc[a.to] = ai;
          q.push(a.to);
        }
      }
    }
    if (prev_arc[sink] == -1) break;
    for (int x = sink; x != source;) {
      int ai = prev_arc[x];
      arcs[ai].flow += 1;
      arcs[ai ^ 1].flow -= 1;
      x = arcs[ai ^ 1].to;
    }
    ++total;
  }
  if (total != 3 * n)
    fail(Errc::Infeasible, "triangulation",
         forced.empty() ? "no 3-orientation exists; data model bug"
                        : "no 3-orientation satisfies the forced darts");

  Orientation3 o;
  o.tri = &t;
  o.dir.assign(m, 0);
  for (int ai = 0; ai < int(arcs.size()); ++ai) {
    const Arc& a = arcs[ai];
    if (a.flow == 1 && a.to >= 1 + V && a.to < 1 + V + m) {
      int r = a.to - 1 - V;
      int payer = arcs[ai ^ 1].to - 1;
      auto [lo, hi] = t.edges[t.internal_edges[r]];
      (void)hi;
      o.dir[r] = (payer == lo) ? 1 : 0;
    }
  }
  return o;
}

inline Orientation3 construct_initial_orientation(const Triangulation& t) {
  return construct_orientation(t);
}

inline Color root_color(const Triangulation& t, int v) {
  if (v == t.external[0]) return Color::Red;
  if (v == t.external[1]) return Color::Green;
  return Color::Blue;
}

struct SchnyderWood {
  Orientation3 orientation;
  std::vector<Color> color;  // indexed by internal edge rank
  Color color_of(int eid) const { return color[orientation.tri->internal_rank[eid]]; }
};

// Colors follow from the orientation alone: walking from any directed edge
// to the second outgoing edge clockwise keeps the color, and the walk ends
// at the external root of that color.
inline SchnyderWood derive_schnyder_coloring(const Orientation3& o) {
  const Triangulation& t = *o.tri;
  const int m = int(t.internal_edges.size());
  SchnyderWood w;
  w.orientation = o;
  w.color.assign(m, Color::Blue);
  std::vector<std::uint8_t> done(m, 0), active(m, 0);

  auto successor = [&](int eid) -> int {
    // eid directed u -> v with v internal: second outgoing edge clockwise
    // around v starting from u.
    int u = o.tail_of(eid), v = o.head_of(eid);
    int cur = u, outs = 0;
    for (int s = 0; s < t.degree(v); ++s) {
      cur = t.pred(v, cur);
      int e2 = t.edge_id(v, cur);
      if (t.edge_is_internal(e2) && o.tail_of(e2) == v) {
        if (++outs == 2) return e2;
      }
    }
    fail(Errc::NoValidColoring, "vertex " + std::to_string(t.labels[v]),
         "fewer than two outgoing edges; orientation invalid");
  };

  for (int r0 = 0; r0 < m; ++r0) {
    if (done[r0]) continue;
    std::vector<int> chain;
    int eid = t.internal_edges[r0];
    Color c{};
    for (;;) {
      int r = t.internal_rank[eid];
      if (done[r]) { c = w.color[r]; break; }
      if (active[r])
        fail(Errc::NoValidColoring, "edge", "color walk cycles; orientation invalid");
      active[r] = 1;
      chain.push_back(r);
      int head = o.head_of(eid);
      if (t.is_external(head)) { c = root_color(t, head); break; }
      eid = successor(eid);
    }
    for (int r : chain) {
      w.color[r] = c;
      done[r] = 1;
      active[r] = 0;
    }
  }
  return w;
}

// Clockwise pattern around an internal vertex: outgoing green, incoming
// blue block, outgoing red, incoming green block, outgoing blue, incoming
// red block.
inline bool check_vertex_condition(const SchnyderWood& w, int v) {
  const Triangulation& t = *w.orientation.tri;
  if (t.is_external(v))
    fail(Errc::ExternalVertex, "vertex " + std::to_string(t.labels[v]),
         "vertex condition applies to internal vertices");
  const int d = t.degree(v);
  std::vector<std::pair<bool, Color>> cw(d);  // (outgoing, color), clockwise
  for (int i = 0; i < d; ++i) {
    int u = t.rotation[v][d - 1 - i];
    int eid = t.edge_id(v, u);
    cw[i] = {w.orientation.tail_of(eid) == v, w.color_of(eid)};
  }
  int start = -1;
  for (int i = 0; i < d; ++i)
    if (cw[i].first && cw[i].second == Color::Green) {
      if (start >= 0) return false;  // two outgoing greens
      start = i;
    }
  if (start < 0) return false;

  int i = 1;
  auto at = [&](int k) { return cw[(start + k) % d]; };
  while (i < d && !at(i).first && at(i).second == Color::Blue) ++i;
  if (i >= d || !(at(i).first && at(i).second == Color::Red)) return false;
  ++i;
  while (i < d && !at(i).first && at(i).second == Color::Green) ++i;
  if (i >= d || !(at(i).first && at(i).second == Color::Blue)) return false;
  ++i;
  while (i < d && !at(i).first && at(i).second == Color::Red) ++i;
  return i == d;
}

// Full structural validation: vertex condition everywhere plus each color
// class forming a tree spanning the internal vertices into its root.
inline bool schnyder_valid(const SchnyderWood& w) {
  const Triangulation& t = *w.orientation.tri;
  for (int v = 0; v < t.num_vertices; ++v)
    if (!t.is_external(v) && !check_vertex_condition(w, v)) return false;

  for (Color c : {Color::Blue, Color::Red, Color::Green}) {
    int edges_in_class = 0;
    for (int eid : t.internal_edges)
      if (w.color_of(eid) == c) ++edges_in_class;
    if (edges_in_class != t.n_internal) return false;
    // follow parents to the root, no cycles
    for (int v = 0; v < t.num_vertices; ++v) {
      if (t.is_external(v)) continue;
      int cur = v, steps = 0;
      while (!t.is_external(cur)) {
        if (++steps > t.n_internal + 1) return false;
        int next = -1;
        for (int u : t.rotation[cur]) {
          int eid = t.edge_id(cur, u);
          if (t.edge_is_internal(eid) && w.orientation.tail_of(eid) == cur &&
              w.color_of(eid) == c) {
            next = u;
            break;
          }
        }
        if (next < 0) return false;
        cur = next;
      }
      if (root_color(t, cur) != c) return false;
    }
  }
  return true;
}

using PotentialMap = std::vector<long long>;

// Zero on faces touching an exterior edge, adjacent faces differ by at
// most one.
inline bool validate_potential(const Triangulation& t, const PotentialMap& x) {
  if (int(x.size()) != int(t.faces.size())) return false;
  for (long long v : x)
    if (v < 0) return false;
  for (int f = 0; f < int(t.faces.size()); ++f) {
    bool boundary = false;
    for (int e : t.face_edges[f])
      if (!t.edge_is_internal(e)) boundary = true;
    if (boundary && x[f] != 0) return false;
  }
  for (int e = 0; e < int(t.edges.size()); ++e) {
    auto [f, g] = t.edge_faces[e];
    if (f >= 0 && g >= 0 && std::abs(x[f] - x[g]) > 1) return false;
  }
  return true;
}

}  // namespace triorient
