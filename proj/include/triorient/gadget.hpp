#pragma once

#include <cstdint>
#include <vector>

#include "triorient/triangulation.hpp"

namespace triorient {

// External vertex labels used by all built-in instances.
inline constexpr std::int64_t kRedLabel = -1;
inline constexpr std::int64_t kGreenLabel = -2;
inline constexpr std::int64_t kBlueLabel = -3;

// Slow-mixing instance with n = 4t-2 internal vertices.
//
// Layout (labels):
//   0            bottom hub, adjacent to blue and red externals and the fan
//   1..2t+1      fan arc around the hub, apex at t+1
//   1001..       fan tail extending right of 2t+1 (t-3 vertices, t >= 4)
//   2t+2..3t-1   left arc, one vertex per fan gap (1,2)..(t-2,t-1)
//   3t           cap over the gaps (t-1,t), (t,t+1), (t+1,t+2)
// The green external covers the arc, the cap and the remaining right gaps.
// For t == 2 the fan alone is covered by the green external (double wheel);
// the cap degenerates onto it.
//
// The hub's single outgoing fan spoke is always green, so the spoke to the
// apex is green in exactly one orientation, red toward the hub when the
// green spoke sits right of the apex, blue when it sits left.
inline Triangulation build_slow_gadget(int t) {
  if (t < 2) fail(Errc::TooSmall, "t", "gadget needs t >= 2");
  const std::int64_t sr = kRedLabel, sg = kGreenLabel, sb = kBlueLabel;
  std::vector<std::array<std::int64_t, 3>> faces;

  // fan vertex labels, left to right
  std::vector<std::int64_t> fan;
  for (int i = 1; i <= 2 * t + 1; ++i) fan.push_back(i);
  for (int j = 1; j <= t - 3; ++j) fan.push_back(1000 + j);
  const int nf = int(fan.size());  // 3t-2 for t >= 3, 5 for t = 2

  faces.push_back({sb, sr, 0});
  faces.push_back({0, sb, fan.front()});
  faces.push_back({0, fan.back(), sr});
  for (int i = 0; i + 1 < nf; ++i) faces.push_back({0, fan[i], fan[i + 1]});

  if (t == 2) {
    for (int i = 0; i + 1 < nf; ++i) faces.push_back({sg, fan[i], fan[i + 1]});
    faces.push_back({sg, sb, fan.front()});
    faces.push_back({sg, fan.back(), sr});
    return triangulation_from_faces({sr, sg, sb}, std::move(faces));
  }

  auto arc_label = [&](int j) { return std::int64_t(2 * t + 1 + j); };  // j = 1..t-2
  const std::int64_t cap = 3 * t;

  // left arc over gaps (v_1,v_2)..(v_{t-2},v_{t-1})
  for (int j = 1; j <= t - 2; ++j) faces.push_back({arc_label(j), fan[j - 1], fan[j]});
  for (int j = 1; j <= t - 3; ++j) faces.push_back({arc_label(j), fan[j], arc_label(j + 1)});
  faces.push_back({sb, fan.front(), arc_label(1)});
  faces.push_back({sg, sb, arc_label(1)});

  // cap over the three central gaps
  faces.push_back({cap, fan[t - 2], fan[t - 1]});
  faces.push_back({cap, fan[t - 1], fan[t]});
  faces.push_back({cap, fan[t], fan[t + 1]});
  faces.push_back({arc_label(t - 2), fan[t - 2], cap});

  // green external fans over the top layer and the right gaps
  for (int j = 1; j <= t - 3; ++j) faces.push_back({sg, arc_label(j), arc_label(j + 1)});
  faces.push_back({sg, arc_label(t - 2), cap});
  faces.push_back({sg, cap, fan[t + 1]});
  for (int i = t + 1; i + 1 < nf; ++i) faces.push_back({sg, fan[i], fan[i + 1]});
  faces.push_back({sg, fan.back(), sr});

  return triangulation_from_faces({sr, sg, sb}, std::move(faces));
}

}  // namespace triorient
