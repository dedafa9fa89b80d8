#pragma once

#include <cstdint>
#include <vector>

#include "triorient/gadget.hpp"
#include "triorient/triangulation.hpp"

namespace triorient {

// Smallest instance: one internal vertex joined to the three externals.
inline Triangulation make_k4() {
  return triangulation_from_faces(
      {kRedLabel, kGreenLabel, kBlueLabel},
      {{kRedLabel, kBlueLabel, 0}, {kBlueLabel, kGreenLabel, 0}, {kGreenLabel, kRedLabel, 0}});
}

// Repeatedly inserts a new internal vertex into a chosen finite face and
// re-triangulates. Face choices index the canonically sorted face list of
// the intermediate triangulation, so sequences are reproducible. Every
// insertion after the first creates a separating triangle.
inline Triangulation make_stacked(const std::vector<int>& face_choices) {
  Triangulation t = make_k4();
  std::int64_t next_label = 1;
  for (int choice : face_choices) {
    if (choice < 0 || choice >= int(t.faces.size()))
      fail(Errc::BadInput, "face_choices", "face index out of range");
    std::vector<std::array<std::int64_t, 3>> faces;
    for (int f = 0; f < int(t.faces.size()); ++f) {
      const auto& fv = t.faces[f];
      if (f == choice) {
        faces.push_back({t.labels[fv[0]], t.labels[fv[1]], next_label});
        faces.push_back({t.labels[fv[1]], t.labels[fv[2]], next_label});
        faces.push_back({t.labels[fv[2]], t.labels[fv[0]], next_label});
      } else {
        faces.push_back({t.labels[fv[0]], t.labels[fv[1]], t.labels[fv[2]]});
      }
    }
    ++next_label;
    t = triangulation_from_faces({kRedLabel, kGreenLabel, kBlueLabel}, std::move(faces));
  }
  return t;
}

// Hexagonal patch of the triangular lattice: a center, a 6-ring, and the
// external triangle around it. Seven internal vertices, all of degree <= 6.
inline Triangulation make_hex_patch() {
  const std::int64_t c = 0;
  auto r = [](int i) { return std::int64_t(1 + ((i % 6) + 6) % 6); };
  const std::int64_t sr = kRedLabel, sg = kGreenLabel, sb = kBlueLabel;
  std::vector<std::array<std::int64_t, 3>> faces;
  for (int i = 0; i < 6; ++i) faces.push_back({c, r(i), r(i + 1)});
  faces.push_back({sr, r(5), r(0)});
  faces.push_back({sr, r(0), r(1)});
  faces.push_back({sr, sg, r(1)});
  faces.push_back({sg, r(1), r(2)});
  faces.push_back({sg, r(2), r(3)});
  faces.push_back({sg, sb, r(3)});
  faces.push_back({sb, r(3), r(4)});
  faces.push_back({sb, r(4), r(5)});
  faces.push_back({sb, sr, r(5)});
  return triangulation_from_faces({sr, sg, sb}, std::move(faces));
}

// Hub below a fan of m vertices, green external covering the fan from
// above. n = m + 1 internal vertices. The t = 2 gadget is the m = 5 case.
inline Triangulation make_double_wheel(int m) {
  if (m < 2) fail(Errc::TooSmall, "m", "double wheel needs a fan of at least 2");
  const std::int64_t sr = kRedLabel, sg = kGreenLabel, sb = kBlueLabel;
  std::vector<std::array<std::int64_t, 3>> faces;
  faces.push_back({sb, sr, 0});
  faces.push_back({0, sb, 1});
  faces.push_back({0, m, sr});
  for (int i = 1; i < m; ++i) {
    faces.push_back({0, i, i + 1});
    faces.push_back({sg, i, i + 1});
  }
  faces.push_back({sg, sb, 1});
  faces.push_back({sg, m, sr});
  return triangulation_from_faces({sr, sg, sb}, std::move(faces));
}

// Hub with a fan of m vertices, a second row of m-1 vertices over the fan
// gaps, and the green external on top. n = 2m internal vertices. The strip
// between the two rows hosts long zigzag towers.
inline Triangulation make_ladder(int m) {
  if (m < 2) fail(Errc::TooSmall, "m", "ladder needs a fan of at least 2");
  const std::int64_t sr = kRedLabel, sg = kGreenLabel, sb = kBlueLabel;
  auto w = [m](int i) { return std::int64_t(m + i); };  // top row labels m+1..2m-1
  std::vector<std::array<std::int64_t, 3>> faces;
  faces.push_back({sb, sr, 0});
  faces.push_back({0, sb, 1});
  faces.push_back({0, m, sr});
  for (int i = 1; i < m; ++i) {
    faces.push_back({0, i, i + 1});
    faces.push_back({w(i), i, i + 1});
  }
  for (int i = 1; i + 1 < m; ++i) faces.push_back({w(i), i + 1, w(i + 1)});
  for (int i = 1; i + 1 < m; ++i) faces.push_back({sg, w(i), w(i + 1)});
  faces.push_back({sb, 1, w(1)});
  faces.push_back({sg, sb, w(1)});
  faces.push_back({sg, w(m - 1), m});
  faces.push_back({sg, m, sr});
  return triangulation_from_faces({sr, sg, sb}, std::move(faces));
}

// Parallelogram patch of the triangular lattice, rows x cols vertices,
// wrapped by the external triangle. Vertex (r,c) gets label 100*r + c.
inline std::int64_t lattice_label(int r, int c) { return 100 * r + c; }

inline Triangulation make_lattice_patch(int rows, int cols) {
  if (rows < 2 || cols < 2) fail(Errc::TooSmall, "rows/cols", "patch needs at least 2x2");
  const std::int64_t sr = kRedLabel, sg = kGreenLabel, sb = kBlueLabel;
  auto g = [](int r, int c) { return lattice_label(r, c); };
  std::vector<std::array<std::int64_t, 3>> faces;
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) {
      faces.push_back({g(r, c), g(r, c + 1), g(r + 1, c)});
      faces.push_back({g(r, c + 1), g(r + 1, c), g(r + 1, c + 1)});
    }
  for (int c = 0; c + 1 < cols; ++c) {
    faces.push_back({sb, g(0, c), g(0, c + 1)});
    faces.push_back({sg, g(rows - 1, c), g(rows - 1, c + 1)});
  }
  for (int r = 0; r + 1 < rows; ++r) {
    faces.push_back({sb, g(r, 0), g(r + 1, 0)});
    faces.push_back({sr, g(r, cols - 1), g(r + 1, cols - 1)});
  }
  faces.push_back({sg, sb, g(rows - 1, 0)});
  faces.push_back({sb, sr, g(0, cols - 1)});
  faces.push_back({sg, sr, g(rows - 1, cols - 1)});
  return triangulation_from_faces({sr, sg, sb}, std::move(faces));
}

// Two lattice rows; kept for small enumerable spaces.
inline Triangulation make_lattice_strip(int cols) { return make_lattice_patch(2, cols); }

// Deterministic catalog of small instances used by enumeration tests.
// At least one has a separating triangle.
inline std::vector<Triangulation> small_instance_catalog() {
  std::vector<Triangulation> out;
  out.push_back(make_k4());                      // n=1
  out.push_back(make_stacked({0}));              // n=2, separating triangle
  out.push_back(make_stacked({1}));              // n=2
  out.push_back(make_stacked({2}));              // n=2
  out.push_back(make_stacked({0, 0}));           // n=3, nested
  out.push_back(make_stacked({0, 3}));           // n=3
  out.push_back(make_stacked({0, 0, 0}));        // n=4, deeply nested
  out.push_back(make_double_wheel(2));           // n=3
  out.push_back(make_double_wheel(3));           // n=4
  out.push_back(make_double_wheel(4));           // n=5
  out.push_back(make_stacked({0, 2, 4}));        // n=4
  out.push_back(make_stacked({1, 1}));           // n=3
  return out;
}

}  // namespace triorient
