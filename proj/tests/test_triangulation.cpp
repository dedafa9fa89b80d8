#include <catch2/catch_amalgamated.hpp>

#include "triorient/instances.hpp"
#include "triorient/json_io.hpp"
#include "triorient/triangulation.hpp"

using namespace triorient;

TEST_CASE("k4 is the smallest valid instance") {
  Triangulation t = make_k4();
  CHECK(t.n_internal == 1);
  CHECK(t.edges.size() == 6);
  CHECK(t.internal_edges.size() == 3);
  CHECK(t.faces.size() == 3);
}

TEST_CASE("hexagonal lattice patch has the forced counts") {
  Triangulation t = make_hex_patch();
  CHECK(t.n_internal == 7);
  CHECK(t.internal_edges.size() == 21);
  CHECK(t.faces.size() == 15);
  int max_deg = 0;
  for (int v = 0; v < t.num_vertices; ++v)
    if (!t.is_external(v)) max_deg = std::max(max_deg, t.degree(v));
  CHECK(max_deg <= 6);
}

TEST_CASE("euler relation holds on every catalog instance") {
  for (const auto& t : small_instance_catalog()) {
    int V = t.num_vertices, E = int(t.edges.size()), F = int(t.faces.size()) + 1;
    CHECK(V - E + F == 2);
    CHECK(int(t.faces.size()) == 2 * t.n_internal + 1);
    CHECK(E == 3 * t.n_internal + 3);
  }
}

TEST_CASE("quadrilateral face is rejected") {
  // Drop the fan edge {1,2} of a small double wheel: its two incident
  // triangles merge into a quadrilateral face.
  Triangulation good = make_double_wheel(2);
  RotationSystem spec;
  spec.external = {kRedLabel, kGreenLabel, kBlueLabel};
  int a = good.vertex_of_label(1), b = good.vertex_of_label(2);
  for (int v = 0; v < good.num_vertices; ++v) {
    std::vector<std::int64_t> cyc;
    for (int u : good.rotation[v]) {
      if ((v == a && u == b) || (v == b && u == a)) continue;
      cyc.push_back(good.labels[u]);
    }
    spec.rotation.emplace_back(good.labels[v], std::move(cyc));
  }
  try {
    build_triangulation(spec);
    FAIL("expected NonTriangularFace");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonTriangularFace);
  }
}

TEST_CASE("rotation asymmetry is rejected") {
  RotationSystem spec;
  spec.external = {-1, -2, -3};
  spec.rotation = {
      {-1, {-3, 0, -2}},
      {-2, {-1, 0, -3}},
      {-3, {-2, 0, -1}},
      {0, {-1, -3}},  // -2 missing here but present above
  };
  try {
    build_triangulation(spec);
    FAIL("expected InconsistentRotation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InconsistentRotation);
  }
}

TEST_CASE("repeated neighbor is rejected as non simple") {
  RotationSystem spec;
  spec.external = {-1, -2, -3};
  spec.rotation = {
      {-1, {-3, 0, 0, -2}},
      {-2, {-1, 0, -3}},
      {-3, {-2, 0, -1}},
      {0, {-1, -3, -2, -1}},
  };
  try {
    build_triangulation(spec);
    FAIL("expected NotSimple");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSimple);
  }
}

TEST_CASE("external triple must be mutually adjacent and distinct") {
  RotationSystem spec;
  spec.external = {-1, -2, -1};
  spec.rotation = {
      {-1, {-3, 0, -2}},
      {-2, {-1, 0, -3}},
      {-3, {-2, 0, -1}},
      {0, {-1, -3, -2}},
  };
  try {
    build_triangulation(spec);
    FAIL("expected WrongExternalCount");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongExternalCount);
  }
}

TEST_CASE("triangle listing tags facial and excludes the outer triple") {
  Triangulation k4 = make_k4();
  CHECK(k4.triangles.size() == 3);
  for (const auto& tr : k4.triangles) CHECK(tr.facial);

  Triangulation hex = make_hex_patch();
  CHECK(hex.triangles.size() == hex.faces.size());  // 4-connected
  for (const auto& tr : hex.triangles) CHECK(tr.facial);

  Triangulation sep = make_stacked({0});
  CHECK(sep.triangles.size() == sep.faces.size() + 1);
  int nonfacial = 0;
  for (const auto& tr : sep.triangles)
    if (!tr.facial) ++nonfacial;
  CHECK(nonfacial == 1);
}

TEST_CASE("decomposition splits at separating triangles") {
  SECTION("4-connected stays whole") {
    auto pieces = decompose_by_separating_triangles(make_hex_patch());
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].is_top);
    CHECK(pieces[0].tri.n_internal == 7);
  }
  SECTION("one separating triangle gives two pieces") {
    Triangulation t = make_stacked({0});
    auto pieces = decompose_by_separating_triangles(t);
    REQUIRE(pieces.size() == 2);
    int assigned = 0, internal_sum = 0;
    for (const auto& p : pieces) {
      assigned += int(p.assigned_faces.size());
      internal_sum += p.tri.n_internal;
      for (const auto& tr : p.tri.triangles) CHECK(tr.facial);  // 4-connected
    }
    CHECK(assigned == int(t.faces.size()));
    CHECK(internal_sum == t.n_internal);
  }
  SECTION("nested separating triangles respect innermost containment") {
    Triangulation t = make_stacked({0, 0});
    auto pieces = decompose_by_separating_triangles(t);
    REQUIRE(pieces.size() == 3);
    int assigned = 0, internal_sum = 0;
    for (const auto& p : pieces) {
      assigned += int(p.assigned_faces.size());
      internal_sum += p.tri.n_internal;
      for (const auto& tr : p.tri.triangles) CHECK(tr.facial);
    }
    CHECK(assigned == int(t.faces.size()));
    CHECK(internal_sum == t.n_internal);
  }
}

TEST_CASE("json round trip preserves the rotation system") {
  for (const auto& t : {make_k4(), make_hex_patch(), make_stacked({0, 1})}) {
    Json j = triangulation_to_json(t);
    Triangulation t2 = triangulation_from_json(j);
    CHECK(t2.rotation == t.rotation);
    CHECK(t2.external == t.external);
    CHECK(t2.labels == t.labels);
  }
}

TEST_CASE("face indices are deterministic and canonical") {
  Triangulation t = make_hex_patch();
  for (size_t i = 1; i < t.faces.size(); ++i) CHECK(t.faces[i - 1] < t.faces[i]);
  for (const auto& f : t.faces) {
    CHECK(f[0] < f[1]);
    CHECK(f[0] < f[2]);
  }
}
