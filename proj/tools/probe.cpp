// Scratch probe, not part of the build.
#include <cstdio>
#include <map>
#include <set>

#include "triorient/dyck.hpp"
#include "triorient/instances.hpp"
#include "triorient/oracle.hpp"

using namespace triorient;

static long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

int main() {
  // --- bijection convention search ---
  for (int mask = 0; mask < 16; ++mask) {
    BijectionRules rules{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, (mask & 8) != 0};
    bool ok = true;
    std::string err;
    for (int n = 1; n <= 4 && ok; ++n) {
      auto pairs = enumerate_dyck_pairs(n);
      long long expect = catalan(n + 2) * catalan(n) - catalan(n + 1) * catalan(n + 1);
      if ((long long)pairs.size() != expect) { ok = false; err = "count"; break; }
      for (const auto& p : pairs) {
        try {
          FlipState s = dyck_to_orientation(p, rules);
          if (!orientation_valid(s.view())) { ok = false; err = "orient"; break; }
          if (!schnyder_valid(derive_schnyder_coloring(s.view()))) { ok = false; err = "wood"; break; }
          DyckPair q = orientation_to_dyck(s, rules);
          if (!(q == p)) { ok = false; err = "roundtrip"; break; }
        } catch (const Error& e) {
          ok = false;
          err = std::string("exc:") + e.what();
          break;
        }
      }
    }
    std::printf("rules children_cw=%d red_pop=%d green_first=%d anchor_red=%d -> %s %s\n",
                int((mask & 1) != 0), int((mask & 2) != 0), int((mask & 4) != 0),
                int((mask & 8) != 0), ok ? "OK" : "fail", err.c_str());
  }

  // --- tower length distribution on small spaces ---
  auto probe_towers = [](const Triangulation& t, const char* name) {
    Orientation3 o0 = construct_initial_orientation(t);
    FixedSpace sp = enumerate_reachable(t, o0);
    std::map<int, int> hist;
    for (int i = 0; i < sp.size(); ++i) {
      Orientation3 o = sp.state(i);
      for (int f = 0; f < int(t.faces.size()); ++f)
        if (auto tw = find_tower(o, f)) hist[int(tw->faces.size())]++;
    }
    std::printf("%s: |Psi|=%d towers:", name, sp.size());
    for (auto [k, c] : hist) std::printf(" k%d x%d", k, c);
    std::printf("\n");
  };
  probe_towers(make_hex_patch(), "hex7");
  probe_towers(build_slow_gadget(2), "gadget t=2");
  probe_towers(build_slow_gadget(3), "gadget t=3");
  try {
    probe_towers(build_slow_gadget(4), "gadget t=4");
  } catch (const Error& e) {
    std::printf("gadget t=4 probe failed: %s\n", e.what());
  }
  for (int m : {4, 5}) {
    try {
      probe_towers(make_lattice_strip(m), ("strip cols=" + std::to_string(m)).c_str());
    } catch (const Error& e) {
      std::printf("strip %d probe failed: %s\n", m, e.what());
    }
  }
  return 0;
}
