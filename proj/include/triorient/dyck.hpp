#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triorient/chain_flip.hpp"
#include "triorient/gadget.hpp"
#include "triorient/orientation.hpp"
#include "triorient/rng.hpp"

namespace triorient {

struct DyckPath {
  std::vector<std::int8_t> steps;  // +1 / -1

  bool valid() const {
    int sum = 0;
    for (int8_t s : steps) {
      if (s != 1 && s != -1) return false;
      sum += s;
      if (sum < 0) return false;
    }
    return sum == 0;
  }
};

struct DyckPair {
  DyckPath top, bottom;

  // Non-crossing: the top path dominates the bottom pointwise.
  bool valid() const {
    if (top.steps.size() != bottom.steps.size()) return false;
    if (!top.valid() || !bottom.valid()) return false;
    int st = 0, sb = 0;
    for (size_t i = 0; i < top.steps.size(); ++i) {
      st += top.steps[i];
      sb += bottom.steps[i];
      if (st < sb) return false;
    }
    return true;
  }

  bool operator==(const DyckPair& o) const {
    return top.steps == o.top.steps && bottom.steps == o.bottom.steps;
  }
};

inline std::string path_string(const DyckPath& p) {
  std::string s;
  for (int8_t v : p.steps) s += (v > 0 ? '+' : '-');
  return s;
}

inline DyckPath path_from_string(const std::string& s) {
  DyckPath p;
  for (char c : s) p.steps.push_back(c == '+' ? 1 : -1);
  return p;
}

// Canonical text key used to deduplicate flip-chain states.
inline std::string pair_key(const DyckPair& p) {
  return path_string(p.top) + "|" + path_string(p.bottom);
}

inline std::vector<DyckPath> enumerate_dyck_paths(int n) {
  std::vector<DyckPath> out;
  std::vector<std::int8_t> cur;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      out.push_back(DyckPath{cur});
      return;
    }
    if (ups < n) {
      cur.push_back(1);
      self(self, ups + 1, downs);
      cur.pop_back();
    }
    if (downs < ups) {
      cur.push_back(-1);
      self(self, ups, downs + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline std::vector<DyckPair> enumerate_dyck_pairs(int n) {
  if (n < 1) fail(Errc::BadInput, "n", "need n >= 1");
  auto paths = enumerate_dyck_paths(n);
  std::vector<DyckPair> out;
  for (const auto& t : paths)
    for (const auto& b : paths) {
      DyckPair p{t, b};
      if (p.valid()) out.push_back(p);
    }
  return out;
}

// Rotation-order conventions of the bijection. The frozen values are the
// unique combination under which decoding every non-crossing pair yields a
// valid state and the two maps invert each other (exhausted for n <= 4 in
// the test suite).
struct BijectionRules {
  bool children_cw_is_dfs = true;   // blue children clockwise after parent = visit order
  bool red_in_cw_is_pop = true;     // incoming reds clockwise = stack pop order
  bool green_in_cw_is_first = true; // incoming greens clockwise = contour order
  bool root_anchor_red = true;      // first root child follows the red external
};

inline constexpr BijectionRules kBijectionRules{true, true, false, false};

namespace detail {

struct BlueTree {
  std::vector<int> parent;                 // 1..n, parent 0 = root
  std::vector<std::vector<int>> children;  // DFS order
  std::vector<int> order;                  // DFS (contour) order of 1..n
};

// Reads the blue tree off a state: children collected clockwise after the
// parent edge (or per rules), root children anchored at an external.
inline BlueTree blue_tree_of(const SchnyderWood& w, const BijectionRules& rules) {
  const Triangulation& t = *w.orientation.tri;
  const Orientation3& o = w.orientation;
  const int n = t.n_internal;

  auto blue_children_cw = [&](int v, int after) {
    std::vector<int> out;
    int cur = after;
    for (int s = 0; s + 1 < t.degree(v); ++s) {
      cur = rules.children_cw_is_dfs ? t.pred(v, cur) : t.succ(v, cur);
      int eid = t.edge_id(v, cur);
      if (t.edge_is_internal(eid) && o.tail_of(eid) == cur && w.color_of(eid) == Color::Blue)
        out.push_back(cur);
    }
    return out;
  };

  const int root = t.external[2];
  int anchor = rules.root_anchor_red ? t.external[0] : t.external[1];

  BlueTree bt;
  bt.parent.assign(t.num_vertices, -1);
  bt.children.assign(t.num_vertices, {});
  std::vector<std::pair<int, int>> stack;  // (vertex, parent)
  auto roots = blue_children_cw(root, anchor);
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) stack.push_back({*it, root});
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    bt.parent[v] = p;
    bt.children[p].push_back(v);
    bt.order.push_back(v);
    auto kids = blue_children_cw(v, p);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, v});
  }
  if (int(bt.order.size()) != n)
    fail(Errc::NoValidColoring, "blue tree", "blue tree does not span the internal vertices");
  return bt;
}

}  // namespace detail

// Bottom path: +1/-1 at first/last contour visit of each internal vertex
// along the blue tree. Top path: one +1 per vertex in contour order with
// the incoming red degree of the next vertex written as -1 runs, closed by
// the red root's incoming degree.
inline DyckPair orientation_to_dyck(const FlipState& s,
                                    const BijectionRules& rules = kBijectionRules) {
  const Triangulation& t = *s.tri;
  SchnyderWood w = derive_schnyder_coloring(s.view());
  auto bt = detail::blue_tree_of(w, rules);
  const int n = t.n_internal;

  DyckPair p;
  {  // bottom: contour of the blue tree
    auto rec = [&](auto&& self, int v) -> void {
      p.bottom.steps.push_back(1);
      for (int c : bt.children[v]) self(self, c);
      p.bottom.steps.push_back(-1);
    };
    for (int c : bt.children[t.external[2]]) rec(rec, c);
  }
  std::vector<int> red_in(t.num_vertices, 0);
  for (int eid : t.internal_edges)
    if (w.color_of(eid) == Color::Red) ++red_in[w.orientation.head_of(eid)];
  if (red_in[bt.order[0]] != 0)
    fail(Errc::NoValidColoring, "red tree", "first contour vertex has incoming red edges");
  for (int i = 0; i < n; ++i) {
    p.top.steps.push_back(1);
    int next_deg = (i + 1 < n) ? red_in[bt.order[i + 1]] : red_in[t.external[0]];
    for (int k = 0; k < next_deg; ++k) p.top.steps.push_back(-1);
  }
  if (!p.valid())
    fail(Errc::NoValidColoring, "pair", "bijection produced a crossing pair; bug");
  return p;
}

// Inverse: rebuild the blue tree from the bottom path, replay the contour
// with one stack to place red and green edges, then assemble the rotation
// system corner by corner.
inline FlipState dyck_to_orientation(const DyckPair& p,
                                     const BijectionRules& rules = kBijectionRules) {
  if (!p.valid()) fail(Errc::BadInput, "pair", "not a non-crossing Dyck pair");
  const int n = int(p.top.steps.size()) / 2;

  // bottom -> tree (vertices named 1..n in contour order)
  std::vector<int> parent(n + 1, 0);
  std::vector<std::vector<int>> children(n + 1);
  {
    std::vector<int> stack;  // vertex path from root
    int next = 1;
    for (int8_t step : p.bottom.steps) {
      if (step > 0) {
        int par = stack.empty() ? 0 : stack.back();
        parent[next] = par;
        children[par].push_back(next);
        stack.push_back(next);
        ++next;
      } else {
        stack.pop_back();
      }
    }
  }

  // top -> incoming red degrees
  std::vector<int> red_deg(n + 2, 0);  // index n+1: the red root
  {
    int seen_up = 0;
    for (int8_t step : p.top.steps) {
      if (step > 0) ++seen_up;
      else ++red_deg[seen_up >= n ? n + 1 : seen_up + 1];
    }
    if (red_deg[1] != 0) fail(Errc::BadInput, "pair", "top path starts with a descent");
  }

  // contour replay with a single visibility stack
  std::vector<int> red_parent(n + 1, -1);
  std::vector<std::vector<int>> red_kids(n + 2);    // pop order
  std::vector<int> green_parent(n + 1, -1);         // 0 = green root
  std::vector<std::vector<int>> green_kids(n + 1);  // contour order of sources
  std::vector<int> stack;
  auto enter = [&](int x) {
    for (int k = 0; k < red_deg[x]; ++k) {
      if (stack.empty()) fail(Errc::BadInput, "pair", "red degrees inconsistent with the tree");
      int z = stack.back();
      stack.pop_back();
      red_parent[z] = x;
      red_kids[x].push_back(z);
    }
    int g = stack.empty() ? 0 : stack.back();
    green_parent[x] = g;
    green_kids[g].push_back(x);
  };
  auto rec = [&](auto&& self, int v) -> void {
    enter(v);
    for (int c : children[v]) self(self, c);
    stack.push_back(v);
  };
  for (int c : children[0]) rec(rec, c);
  if (int(stack.size()) != red_deg[n + 1])
    fail(Errc::BadInput, "pair", "red root degree inconsistent");
  while (!stack.empty()) {
    red_kids[n + 1].push_back(stack.back());
    stack.pop_back();
  }

  // labels: internal i -> i, externals as usual
  const std::int64_t SR = kRedLabel, SG = kGreenLabel, SB = kBlueLabel;
  auto lbl = [&](int v) { return std::int64_t(v); };

  RotationSystem spec;
  spec.external = {SR, SG, SB};
  for (int v = 1; v <= n; ++v) {
    // clockwise: g_out, children, r_out, greens in, b_out, reds in
    std::vector<std::int64_t> cw;
    cw.push_back(green_parent[v] == 0 ? SG : lbl(green_parent[v]));
    {
      auto kids = children[v];
      if (!rules.children_cw_is_dfs) std::reverse(kids.begin(), kids.end());
      for (int c : kids) cw.push_back(lbl(c));
    }
    cw.push_back(red_parent[v] == -1 ? SR : lbl(red_parent[v]));
    {
      auto gk = green_kids[v];
      if (!rules.green_in_cw_is_first) std::reverse(gk.begin(), gk.end());
      for (int c : gk) cw.push_back(lbl(c));
    }
    cw.push_back(parent[v] == 0 ? SB : lbl(parent[v]));
    {
      auto rk = red_kids[v];
      if (!rules.red_in_cw_is_pop) std::reverse(rk.begin(), rk.end());
      for (int c : rk) cw.push_back(lbl(c));
    }
    std::reverse(cw.begin(), cw.end());  // store counterclockwise
    spec.rotation.emplace_back(lbl(v), std::move(cw));
  }
  // Around each external root the outer corner fixes the frame: clockwise,
  // the in-edges sit between green and red at the blue root, between blue
  // and green at the red root, between red and blue at the green root.
  {
    std::vector<std::int64_t> cw;
    cw.push_back(SG);
    auto kids = children[0];
    if (!rules.children_cw_is_dfs) std::reverse(kids.begin(), kids.end());
    if (rules.root_anchor_red) std::reverse(kids.begin(), kids.end());
    for (int c : kids) cw.push_back(lbl(c));
    cw.push_back(SR);
    std::reverse(cw.begin(), cw.end());
    spec.rotation.emplace_back(SB, std::move(cw));
  }
  {
    std::vector<std::int64_t> cw;
    cw.push_back(SB);
    auto rk = red_kids[n + 1];
    if (!rules.red_in_cw_is_pop) std::reverse(rk.begin(), rk.end());
    for (int c : rk) cw.push_back(lbl(c));
    cw.push_back(SG);
    std::reverse(cw.begin(), cw.end());
    spec.rotation.emplace_back(SR, std::move(cw));
  }
  {
    std::vector<std::int64_t> cw;
    cw.push_back(SR);
    auto gk = green_kids[0];
    if (!rules.green_in_cw_is_first) std::reverse(gk.begin(), gk.end());
    for (int c : gk) cw.push_back(lbl(c));
    cw.push_back(SB);
    std::reverse(cw.begin(), cw.end());
    spec.rotation.emplace_back(SG, std::move(cw));
  }

  FlipState out;
  out.tri = std::make_shared<Triangulation>(build_triangulation(spec));
  const Triangulation& t = *out.tri;
  out.dir.assign(t.internal_edges.size(), 0);
  auto direct = [&](std::int64_t from, std::int64_t to) {
    int a = t.vertex_of_label(from), b = t.vertex_of_label(to);
    int eid = t.edge_id(a, b);
    out.dir[t.internal_rank[eid]] = (t.edges[eid].first == a) ? 1 : 0;
  };
  for (int v = 1; v <= n; ++v) {
    direct(lbl(v), parent[v] == 0 ? SB : lbl(parent[v]));
    direct(lbl(v), red_parent[v] == -1 ? SR : lbl(red_parent[v]));
    direct(lbl(v), green_parent[v] == 0 ? SG : lbl(green_parent[v]));
  }
  return out;
}

// Documented start state for walks and enumerations over the flip space.
inline FlipState canonical_flip_state(int n) {
  DyckPair p;
  for (int i = 0; i < n; ++i) p.top.steps.push_back(1);
  for (int i = 0; i < n; ++i) p.top.steps.push_back(-1);
  p.bottom = p.top;
  return dyck_to_orientation(p);
}

// Result of selecting an interior point (prefix position i on the top or
// bottom path): the flipped pair, or nothing when the proposal is invalid.
// A blocked single move falls through to the paired move of both paths
// exactly when the other path has a coinciding extremum there.
inline std::optional<DyckPair> dyck_move_result(const DyckPair& p, bool on_top, int i) {
  DyckPair q = p;
  auto& self = on_top ? q.top.steps : q.bottom.steps;
  auto& other = on_top ? q.bottom.steps : q.top.steps;
  int s_self = 0, s_other = 0;
  for (int k = 0; k < i; ++k) {
    s_self += self[k];
    s_other += other[k];
  }
  const bool self_max = self[i - 1] == 1 && self[i] == -1;
  const bool self_min = self[i - 1] == -1 && self[i] == 1;
  const bool other_max = other[i - 1] == 1 && other[i] == -1;
  const bool other_min = other[i - 1] == -1 && other[i] == 1;

  auto flip_self = [&]() { std::swap(self[i - 1], self[i]); };
  auto flip_both = [&]() {
    std::swap(self[i - 1], self[i]);
    std::swap(other[i - 1], other[i]);
  };

  if (on_top) {
    if (self_max) {
      if (s_self - 2 >= s_other) flip_self();
      else if (s_self == s_other && other_max && s_other >= 2) flip_both();
      else return std::nullopt;
    } else if (self_min) {
      flip_self();  // raising the top is never blocked
    } else {
      return std::nullopt;
    }
  } else {
    if (self_max) {
      if (s_self >= 2) flip_self();  // lowering the bottom hits only the floor
      else return std::nullopt;
    } else if (self_min) {
      if (s_self + 2 <= s_other) flip_self();
      else if (s_self == s_other && other_min) flip_both();
      else return std::nullopt;
    } else {
      return std::nullopt;
    }
  }
  return q;
}

// One proposal of the lattice-path chain: pick an interior point of one of
// the two paths uniformly; flip a local extremum with probability 1/2, or
// move both paths together when the single move is blocked by a coinciding
// extremum of the other path. Draw order fixed (point, then coin).
inline void step_dyck_chain(DyckPair& p, Rng& rng) {
  const int interior = int(p.top.steps.size()) - 1;
  std::uint64_t pick = rng.below(2 * std::uint64_t(interior));
  double coin = rng.unit();
  if (coin >= 0.5) return;
  const bool on_top = pick < std::uint64_t(interior);
  const int i = 1 + int(on_top ? pick : pick - interior);
  if (auto q = dyck_move_result(p, on_top, i)) p = *q;
}

}  // namespace triorient
