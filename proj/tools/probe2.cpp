#include <cstdio>
#include "triorient/instances.hpp"
#include "triorient/oracle.hpp"
using namespace triorient;
int main() {
  Triangulation t = make_lattice_patch(5, 6);
  std::printf("patch 5x6: n=%d edges=%zu faces=%zu\n", t.n_internal, t.edges.size(), t.faces.size());
  auto id = [&](int r, int c) { return t.vertex_of_label(lattice_label(r, c)); };
  int v1=id(2,1), v2=id(2,2), v3=id(2,3), v4=id(2,4);
  int w1=id(3,1), w2=id(3,2), w3=id(3,3), w4=id(3,4);
  std::vector<std::pair<int,int>> forced = {
    {v2,w1},{v2,w2},{v3,w2},{v3,w3},{v4,w3},
    {v4,v3},{v3,v2},{v2,v1},{v1,w1},{w1,w2},{w2,w3},{w3,w4},{w4,v4}};
  Orientation3 o = construct_orientation(t, forced);
  std::printf("forced state valid: %d\n", int(orientation_valid(o)));
  int f1 = t.face_index_of({v1, v2, w1});
  auto tw = find_tower(o, f1);
  if (!tw) { std::printf("no tower found!\n"); return 1; }
  std::printf("tower length: %zu\n", tw->faces.size());
  Orientation3 y = reverse_tower(o, *tw);
  std::printf("reverse valid: %d\n", int(orientation_valid(y)));
  Orientation3 z = o;
  for (auto it = tw->faces.rbegin(); it != tw->faces.rend(); ++it) {
    if (!face_directed(z, *it)) { std::printf("sequential oracle stuck\n"); return 1; }
    reverse_face(z, *it);
  }
  std::printf("sequential equals boundary flip: %d\n", int(y == z));
  std::printf("schnyder valid: %d\n", int(schnyder_valid(derive_schnyder_coloring(o))));
  return 0;
}
