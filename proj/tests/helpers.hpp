#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "triorient/chain_flip.hpp"
#include "triorient/gadget.hpp"
#include "triorient/orientation.hpp"
#include "triorient/triangulation.hpp"

namespace triorient::testing {

// Builds a state from an unoriented face list plus directed internal edges
// given by label pairs (tail, head).
inline FlipState state_from(std::vector<std::array<std::int64_t, 3>> faces,
                            const std::vector<std::pair<std::int64_t, std::int64_t>>& darts) {
  FlipState s;
  s.tri = std::make_shared<Triangulation>(
      triangulation_from_faces({kRedLabel, kGreenLabel, kBlueLabel}, std::move(faces)));
  const Triangulation& t = *s.tri;
  s.dir.assign(t.internal_edges.size(), 0);
  if (darts.size() != t.internal_edges.size()) fail(Errc::BadInput, "darts", "wrong count");
  for (auto [from, to] : darts) {
    int a = t.vertex_of_label(from), b = t.vertex_of_label(to);
    int eid = t.edge_id(a, b);
    if (eid < 0) fail(Errc::BadInput, "darts", "edge missing");
    s.dir[t.internal_rank[eid]] = (t.edges[eid].first == a) ? 1 : 0;
  }
  return s;
}

inline Color color_between(const SchnyderWood& w, std::int64_t from, std::int64_t to) {
  const Triangulation& t = *w.orientation.tri;
  int a = t.vertex_of_label(from), b = t.vertex_of_label(to);
  return w.color_of(t.edge_id(a, b));
}

inline bool directed_between(const Orientation3& o, std::int64_t from, std::int64_t to) {
  const Triangulation& t = *o.tri;
  return o.directed_from(t.vertex_of_label(from), t.vertex_of_label(to));
}

// Hand-derived two-internal-vertex state: both internal vertices hang off
// the blue root, with a red edge 1 -> 2.
inline FlipState two_vertex_state_a() {
  return state_from(
      {{1, -3, 2}, {1, 2, -2}, {2, -3, -1}, {2, -1, -2}, {-3, 1, -2}},
      {{1, -3}, {2, -3}, {1, 2}, {2, -1}, {1, -2}, {2, -2}});
}

// Hand-derived three-internal-vertex state: blue path root->1->2, third
// child 3, red edge 1 -> 3, green edge 3 -> 2.
inline FlipState three_vertex_state_a() {
  return state_from({{-3, 1, -2},
                     {-2, 1, 2},
                     {-2, 2, -1},
                     {-1, 2, 3},
                     {2, 1, 3},
                     {1, -3, 3},
                     {-3, -1, 3}},
                    {{1, -3}, {2, 1}, {3, -3},      // blue
                     {1, 3}, {2, -1}, {3, -1},      // red
                     {1, -2}, {2, -2}, {3, 2}});    // green
}

}  // namespace triorient::testing
