#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "triorient/chain_fixed.hpp"
#include "triorient/chain_flip.hpp"
#include "triorient/dyck.hpp"

namespace triorient {

// Canonically ordered state space of a fixed triangulation: each state is
// the direction bitstring over internal edge ranks.
struct FixedSpace {
  const Triangulation* tri = nullptr;
  std::vector<std::uint64_t> states;  // sorted keys

  int index_of(std::uint64_t key) const {
    auto it = std::lower_bound(states.begin(), states.end(), key);
    if (it == states.end() || *it != key) return -1;
    return int(it - states.begin());
  }
  int size() const { return int(states.size()); }
  Orientation3 state(int i) const { return orientation_from_key(*tri, states[i]); }
};

// Every direction assignment filtered by the out-degree condition.
inline FixedSpace brute_force_orientations(const Triangulation& t) {
  const int m = int(t.internal_edges.size());
  if (m > 26) fail(Errc::TooLarge, "edges", "brute force capped at 26 internal edges");
  std::vector<std::uint64_t> low_mask(t.num_vertices, 0), high_mask(t.num_vertices, 0);
  for (int r = 0; r < m; ++r) {
    auto [a, b] = t.edges[t.internal_edges[r]];
    low_mask[a] |= std::uint64_t{1} << r;   // bit set: directed a -> b, a pays
    high_mask[b] |= std::uint64_t{1} << r;  // bit clear: directed b -> a, b pays
  }
  FixedSpace sp;
  sp.tri = &t;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool ok = true;
    for (int v = 0; v < t.num_vertices && ok; ++v) {
      int out = __builtin_popcountll(bits & low_mask[v]) +
                __builtin_popcountll(~bits & high_mask[v]);
      ok = out == (t.is_external(v) ? 0 : 3);
    }
    if (ok) sp.states.push_back(bits);
  }
  return sp;
}

// Closure of a start state under single triangle reversals.
inline FixedSpace enumerate_reachable(const Triangulation& t, const Orientation3& start,
                                      std::size_t cap = 1000000) {
  if (t.internal_edges.size() > 63)
    fail(Errc::TooLarge, "edges", "enumeration keys need at most 63 internal edges");
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> frontier{start.key()};
  seen.insert(start.key());
  while (!frontier.empty()) {
    std::uint64_t k = frontier.back();
    frontier.pop_back();
    Orientation3 o = orientation_from_key(t, k);
    for (const auto& tri : t.triangles) {
      if (!triangle_directed(o, tri.verts)) continue;
      reverse_triangle(o, tri.verts);
      std::uint64_t k2 = o.key();
      reverse_triangle(o, tri.verts);
      if (seen.insert(k2).second) {
        if (seen.size() > cap)
          fail(Errc::CapExceeded, "cap",
               "state space exceeds cap; partial count " + std::to_string(seen.size()));
        frontier.push_back(k2);
      }
    }
  }
  FixedSpace sp;
  sp.tri = &t;
  sp.states.assign(seen.begin(), seen.end());
  std::sort(sp.states.begin(), sp.states.end());
  return sp;
}

// Row-stochastic matrix with exact integer entries over a common
// denominator: P(i,j) = w[i*n+j] / denom.
struct TransitionMatrix {
  int n = 0;
  std::uint64_t denom = 1;
  std::vector<std::uint64_t> w;

  std::uint64_t at(int i, int j) const { return w[std::size_t(i) * n + j]; }
  std::uint64_t& at(int i, int j) { return w[std::size_t(i) * n + j]; }

  bool rows_stochastic() const {
    for (int i = 0; i < n; ++i) {
      std::uint64_t s = 0;
      for (int j = 0; j < n; ++j) s += at(i, j);
      if (s != denom) return false;
    }
    return true;
  }
  bool symmetric() const {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }
  // Uniform is stationary iff the matrix is doubly stochastic.
  bool doubly_stochastic() const {
    if (!rows_stochastic()) return false;
    for (int j = 0; j < n; ++j) {
      std::uint64_t s = 0;
      for (int i = 0; i < n; ++i) s += at(i, j);
      if (s != denom) return false;
    }
    return true;
  }
  std::vector<double> to_double() const {
    std::vector<double> a(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) a[i] = double(w[i]) / double(denom);
    return a;
  }
};

inline TransitionMatrix build_matrix_triangle_chain(const FixedSpace& sp) {
  const Triangulation& t = *sp.tri;
  TransitionMatrix m;
  m.n = sp.size();
  m.denom = 2 * std::uint64_t(t.triangles.size());
  m.w.assign(std::size_t(m.n) * m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    Orientation3 o = sp.state(i);
    std::uint64_t moved = 0;
    for (const auto& tri : t.triangles) {
      if (!triangle_directed(o, tri.verts)) continue;
      reverse_triangle(o, tri.verts);
      int j = sp.index_of(o.key());
      reverse_triangle(o, tri.verts);
      if (j < 0) fail(Errc::IncompleteSpace, "space", "move leaves the state space");
      m.at(i, j) += 1;
      ++moved;
    }
    m.at(i, i) += m.denom - moved;
  }
  return m;
}

inline TransitionMatrix build_matrix_tower_chain(const FixedSpace& sp) {
  const Triangulation& t = *sp.tri;
  const int F = int(t.faces.size());
  // Common denominator over every acceptance probability that occurs.
  std::uint64_t L = 2;
  for (int i = 0; i < sp.size(); ++i) {
    Orientation3 o = sp.state(i);
    for (int f = 0; f < F; ++f)
      if (auto tw = find_tower(o, f)) {
        int k = int(tw->faces.size());
        if (k >= 2) L = std::lcm(L, std::uint64_t(6) * k);
      }
  }
  TransitionMatrix m;
  m.n = sp.size();
  m.denom = std::uint64_t(F) * L;
  m.w.assign(std::size_t(m.n) * m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    Orientation3 o = sp.state(i);
    std::uint64_t self = 0;
    for (int f = 0; f < F; ++f) {
      auto tw = find_tower(o, f);
      if (!tw) {
        self += L;
        continue;
      }
      int k = int(tw->faces.size());
      std::uint64_t accept = (k == 1) ? L / 2 : L / (std::uint64_t(6) * k);
      Orientation3 y = reverse_tower(o, *tw);
      int j = sp.index_of(y.key());
      if (j < 0) fail(Errc::IncompleteSpace, "space", "tower move leaves the state space");
      m.at(i, j) += accept;
      self += L - accept;
    }
    m.at(i, i) += self;
  }
  return m;
}

// Flip-chain state space of all n-vertex states, keyed canonically.
struct FlipSpace {
  std::vector<FlipState> states;
  std::vector<std::string> keys;  // sorted, parallel to states

  int index_of(const std::string& key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return -1;
    return int(it - keys.begin());
  }
  int size() const { return int(states.size()); }
};

inline FlipSpace enumerate_flip_space(int n, std::size_t cap = 1000000) {
  FlipState start = canonical_flip_state(n);
  std::vector<std::pair<std::string, FlipState>> found;
  std::unordered_set<std::string> seen;
  std::vector<FlipState> frontier{start};
  std::string k0 = pair_key(orientation_to_dyck(start));
  seen.insert(k0);
  found.emplace_back(k0, start);
  while (!frontier.empty()) {
    FlipState s = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& mv : enumerate_flip_moves(s)) {
      FlipState y = apply_flip(s, mv);
      std::string k = pair_key(orientation_to_dyck(y));
      if (seen.insert(k).second) {
        if (seen.size() > cap)
          fail(Errc::CapExceeded, "cap",
               "flip space exceeds cap; partial count " + std::to_string(seen.size()));
        found.emplace_back(k, y);
        frontier.push_back(std::move(y));
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  FlipSpace sp;
  for (auto& [k, s] : found) {
    sp.keys.push_back(k);
    sp.states.push_back(std::move(s));
  }
  return sp;
}

inline TransitionMatrix build_matrix_flip_chain(const FlipSpace& sp) {
  if (sp.size() == 0) fail(Errc::EmptySide, "space", "empty flip space");
  const int n = sp.states[0].tri->n_internal;
  TransitionMatrix m;
  m.n = sp.size();
  m.denom = std::uint64_t(24) * n;  // 3n edges x 4 boundary picks x lazy coin
  m.w.assign(std::size_t(m.n) * m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    const FlipState& s = sp.states[i];
    std::uint64_t moved = 0;
    for (int eid : s.tri->internal_edges)
      for (int b = 0; b < 4; ++b) {
        int z, w;
        if (!flip_move_valid(s, eid, b, &z, &w)) continue;
        FlipState y = apply_flip(s, FlipMove{eid, b, z, w});
        int j = sp.index_of(pair_key(orientation_to_dyck(y)));
        if (j < 0) fail(Errc::IncompleteSpace, "space", "flip move leaves the state space");
        m.at(i, j) += 1;
        ++moved;
      }
    m.at(i, i) += m.denom - moved;
  }
  return m;
}

inline TransitionMatrix build_matrix_dyck_chain(const std::vector<DyckPair>& pairs) {
  if (pairs.empty()) fail(Errc::EmptySide, "space", "empty pair list");
  std::vector<std::string> keys;
  for (const auto& p : pairs) keys.push_back(pair_key(p));
  auto index_of = [&](const std::string& k) {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    return (it != keys.end() && *it == k) ? int(it - keys.begin()) : -1;
  };
  for (size_t i = 1; i < keys.size(); ++i)
    if (!(keys[i - 1] < keys[i]))
      fail(Errc::BadInput, "pairs", "pair list must be sorted by key");

  const int interior = int(pairs[0].top.steps.size()) - 1;
  TransitionMatrix m;
  m.n = int(pairs.size());
  m.denom = std::uint64_t(4) * interior;  // 2(2n-1) points x lazy coin
  m.w.assign(std::size_t(m.n) * m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    std::uint64_t moved = 0;
    for (int side = 0; side < 2; ++side)
      for (int pos = 1; pos <= interior; ++pos) {
        auto q = dyck_move_result(pairs[i], side == 0, pos);
        if (!q) continue;
        int j = index_of(pair_key(*q));
        if (j < 0) fail(Errc::IncompleteSpace, "space", "path move leaves the state space");
        m.at(i, j) += 1;
        ++moved;
      }
    m.at(i, i) += m.denom - moved;
  }
  return m;
}

struct TvResult {
  std::vector<double> series;  // tv at t = 0..tmax
  std::optional<int> tau;      // first t with tv <= eps from there on
};

inline std::optional<int> settle_time(const std::vector<double>& tv, double eps) {
  int tau = -1;
  for (int t = int(tv.size()) - 1; t >= 0; --t) {
    if (tv[t] > eps) break;
    tau = t;
  }
  if (tau < 0) return std::nullopt;
  return tau;
}

// Exact distribution from one start via vector-matrix powers.
inline TvResult tv_curve(const TransitionMatrix& m, int start, int tmax, double eps) {
  const int n = m.n;
  auto a = m.to_double();
  std::vector<double> dist(n, 0.0), nxt(n);
  dist[start] = 1.0;
  const double pi = 1.0 / n;
  TvResult res;
  for (int t = 0; t <= tmax; ++t) {
    double tv = 0;
    for (int j = 0; j < n; ++j) tv += std::abs(dist[j] - pi);
    res.series.push_back(tv / 2);
    if (t == tmax) break;
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      if (dist[i] == 0.0) continue;
      const double di = dist[i];
      const double* row = &a[std::size_t(i) * n];
      for (int j = 0; j < n; ++j) nxt[j] += di * row[j];
    }
    dist.swap(nxt);
  }
  res.tau = settle_time(res.series, eps);
  return res;
}

// Worst case over all start states, via full matrix powers.
inline TvResult tv_curve_worst(const TransitionMatrix& m, int tmax, double eps) {
  const int n = m.n;
  auto step = m.to_double();
  std::vector<double> pt(step), nxt(std::size_t(n) * n);
  const double pi = 1.0 / n;
  TvResult res;
  res.series.push_back(1.0 - pi);  // t = 0: point mass
  for (int t = 1; t <= tmax; ++t) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      double tv = 0;
      for (int j = 0; j < n; ++j) tv += std::abs(pt[std::size_t(i) * n + j] - pi);
      worst = std::max(worst, tv / 2);
    }
    res.series.push_back(worst);
    if (t == tmax) break;
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        double v = pt[std::size_t(i) * n + k];
        if (v == 0.0) continue;
        const double* row = &step[std::size_t(k) * n];
        double* out = &nxt[std::size_t(i) * n];
        for (int j = 0; j < n; ++j) out[j] += v * row[j];
      }
    pt.swap(nxt);
  }
  res.tau = settle_time(res.series, eps);
  return res;
}

struct Fraction {
  std::uint64_t num = 0, den = 1;
  double value() const { return double(num) / double(den); }
};

inline Fraction reduced(std::uint64_t num, std::uint64_t den) {
  std::uint64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Fraction{num / g, den / g};
}

// Exact conductance of the cut (given uniform stationarity): escaping
// probability mass of the smaller side over its measure.
inline Fraction conductance_of_cut(const TransitionMatrix& m, const std::vector<char>& in_s) {
  std::uint64_t size_s = 0;
  for (char b : in_s) size_s += b ? 1 : 0;
  std::uint64_t size = m.n;
  if (size_s == 0 || size_s == size) fail(Errc::EmptySide, "cut", "cut side is empty");
  bool use_s = 2 * size_s <= size;
  std::uint64_t cross = 0, side = use_s ? size_s : size - size_s;
  for (int i = 0; i < m.n; ++i) {
    bool ins = in_s[i] != 0;
    if (ins != use_s) continue;
    for (int j = 0; j < m.n; ++j)
      if ((in_s[j] != 0) != ins) cross += m.at(i, j);
  }
  return reduced(cross, m.denom * side);
}

// tau >= 1/(4 phi) - 1/2, compared exactly.
inline bool mixing_bound_holds(int tau, const Fraction& phi) {
  // tau >= den/(4 num) - 1/2  <=>  4*num*tau + 2*num >= den
  if (phi.num == 0) return false;
  unsigned __int128 lhs = (unsigned __int128)4 * phi.num * (unsigned)tau + 2 * phi.num;
  return lhs >= phi.den;
}

// Eccentricity maximum under single triangle reversals.
inline int diameter(const FixedSpace& sp) {
  const Triangulation& t = *sp.tri;
  const int n = sp.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    Orientation3 o = sp.state(i);
    for (const auto& tri : t.triangles) {
      if (!triangle_directed(o, tri.verts)) continue;
      reverse_triangle(o, tri.verts);
      int j = sp.index_of(o.key());
      reverse_triangle(o, tri.verts);
      if (j < 0) fail(Errc::IncompleteSpace, "space", "move leaves the state space");
      adj[i].push_back(j);
    }
  }
  int diam = 0;
  std::vector<int> dist(n);
  std::vector<int> bfs;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    bfs.assign(1, s);
    dist[s] = 0;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
      int x = bfs[qi];
      diam = std::max(diam, dist[x]);
      for (int y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          bfs.push_back(y);
        }
    }
    for (int x = 0; x < n; ++x)
      if (dist[x] < 0) fail(Errc::IncompleteSpace, "space", "state graph is disconnected");
  }
  return diam;
}

}  // namespace triorient
