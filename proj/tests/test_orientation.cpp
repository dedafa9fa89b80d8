#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "triorient/instances.hpp"
#include "triorient/orientation.hpp"
#include "triorient/rng.hpp"

using namespace triorient;
using namespace triorient::testing;

TEST_CASE("k4 has the single forced orientation") {
  Triangulation t = make_k4();
  Orientation3 o = construct_initial_orientation(t);
  REQUIRE(orientation_valid(o));
  // all three edges leave the internal vertex
  int v = t.vertex_of_label(0);
  for (int eid : t.internal_edges) CHECK(o.tail_of(eid) == v);

  SchnyderWood w = derive_schnyder_coloring(o);
  CHECK(color_between(w, 0, kRedLabel) == Color::Red);
  CHECK(color_between(w, 0, kGreenLabel) == Color::Green);
  CHECK(color_between(w, 0, kBlueLabel) == Color::Blue);
  CHECK(schnyder_valid(w));
}

TEST_CASE("initial orientation is valid on every catalog instance") {
  for (const auto& t : small_instance_catalog()) {
    Orientation3 o = construct_initial_orientation(t);
    CHECK(orientation_valid(o));
    CHECK(schnyder_valid(derive_schnyder_coloring(o)));
  }
  for (int tparam : {2, 3, 4, 5}) {
    Triangulation g = build_slow_gadget(tparam);
    Orientation3 o = construct_initial_orientation(g);
    CHECK(orientation_valid(o));
    CHECK(schnyder_valid(derive_schnyder_coloring(o)));
  }
  Triangulation hex = make_hex_patch();
  Orientation3 o = construct_initial_orientation(hex);
  CHECK(orientation_valid(o));
  CHECK(schnyder_valid(derive_schnyder_coloring(o)));
}

TEST_CASE("hand derived two vertex state colors as expected") {
  FlipState s = two_vertex_state_a();
  REQUIRE(orientation_valid(s.view()));
  SchnyderWood w = derive_schnyder_coloring(s.view());
  CHECK(color_between(w, 1, -3) == Color::Blue);
  CHECK(color_between(w, 2, -3) == Color::Blue);
  CHECK(color_between(w, 1, 2) == Color::Red);
  CHECK(color_between(w, 2, -1) == Color::Red);
  CHECK(color_between(w, 1, -2) == Color::Green);
  CHECK(color_between(w, 2, -2) == Color::Green);
  CHECK(schnyder_valid(w));
}

TEST_CASE("hand derived three vertex state colors as expected") {
  FlipState s = three_vertex_state_a();
  REQUIRE(orientation_valid(s.view()));
  SchnyderWood w = derive_schnyder_coloring(s.view());
  CHECK(color_between(w, 1, -3) == Color::Blue);
  CHECK(color_between(w, 2, 1) == Color::Blue);
  CHECK(color_between(w, 3, -3) == Color::Blue);
  CHECK(color_between(w, 1, 3) == Color::Red);
  CHECK(color_between(w, 2, -1) == Color::Red);
  CHECK(color_between(w, 3, -1) == Color::Red);
  CHECK(color_between(w, 1, -2) == Color::Green);
  CHECK(color_between(w, 2, -2) == Color::Green);
  CHECK(color_between(w, 3, 2) == Color::Green);
  CHECK(schnyder_valid(w));
}

TEST_CASE("coloring is idempotent under forgetting colors") {
  for (const auto& t : small_instance_catalog()) {
    Orientation3 o = construct_initial_orientation(t);
    SchnyderWood w1 = derive_schnyder_coloring(o);
    SchnyderWood w2 = derive_schnyder_coloring(w1.orientation);
    CHECK(w1.color == w2.color);
    CHECK(w1.orientation == o);
  }
}

TEST_CASE("vertex condition flags corrupted colorings") {
  FlipState s = two_vertex_state_a();
  const Triangulation& t = *s.tri;
  SchnyderWood w = derive_schnyder_coloring(s.view());
  for (int v = 0; v < t.num_vertices; ++v)
    if (!t.is_external(v)) CHECK(check_vertex_condition(w, v));

  SECTION("duplicate outgoing color") {
    SchnyderWood bad = w;
    // make vertex 2's red and green out-edges both green
    int v2 = t.vertex_of_label(2);
    int red_out = t.edge_id(v2, t.vertex_of_label(-1));
    bad.color[t.internal_rank[red_out]] = Color::Green;
    CHECK_FALSE(check_vertex_condition(bad, v2));
  }
  SECTION("incoming edge in the wrong angular sector") {
    SchnyderWood bad = w;
    // the incoming red edge 1->2 sits between blue-out and green-out at 2;
    // recolored blue it lands outside the incoming-blue sector
    int e = t.edge_id(t.vertex_of_label(1), t.vertex_of_label(2));
    bad.color[t.internal_rank[e]] = Color::Blue;
    CHECK_FALSE(check_vertex_condition(bad, t.vertex_of_label(2)));
  }
  SECTION("external vertex is rejected") {
    try {
      check_vertex_condition(w, t.vertex_of_label(-1));
      FAIL("expected ExternalVertex");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ExternalVertex);
    }
  }
}

TEST_CASE("potential validation") {
  Triangulation t = make_hex_patch();
  PotentialMap zero(t.faces.size(), 0);
  CHECK(validate_potential(t, zero));

  SECTION("boundary face must stay zero") {
    PotentialMap x = zero;
    for (int f = 0; f < int(t.faces.size()); ++f) {
      bool boundary = false;
      for (int e : t.face_edges[f])
        if (!t.edge_is_internal(e)) boundary = true;
      if (boundary) {
        x[f] = 1;
        break;
      }
    }
    CHECK_FALSE(validate_potential(t, x));
  }
  SECTION("adjacent faces may differ by at most one") {
    PotentialMap x = zero;
    for (int e : t.internal_edges) {
      auto [f, g] = t.edge_faces[e];
      bool fb = false, gb = false;
      for (int e2 : t.face_edges[f])
        if (!t.edge_is_internal(e2)) fb = true;
      for (int e2 : t.face_edges[g])
        if (!t.edge_is_internal(e2)) gb = true;
      if (!fb && !gb) {
        x[f] = 0;
        x[g] = 2;
        break;
      }
    }
    CHECK_FALSE(validate_potential(t, x));
  }
  SECTION("random valid potentials stay below half the face count") {
    Rng rng(20240811);
    const long long bound = (2LL * t.n_internal + 1) / 2;
    PotentialMap x(t.faces.size(), 0);
    for (int step = 0; step < 20000; ++step) {
      int f = int(rng.below(t.faces.size()));
      long long delta = rng.unit() < 0.5 ? 1 : -1;
      x[f] += delta;
      if (!validate_potential(t, x)) x[f] -= delta;
      long long mx = 0;
      for (long long v : x) mx = std::max(mx, v);
      REQUIRE(mx <= bound);
    }
  }
}
