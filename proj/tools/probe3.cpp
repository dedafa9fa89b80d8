#include <cstdio>
#include "triorient/instances.hpp"
#include "triorient/oracle.hpp"
using namespace triorient;
int main() {
  Triangulation t = make_lattice_patch(4, 5);
  auto id = [&](int r, int c) { return t.vertex_of_label(lattice_label(r, c)); };
  int v1=id(1,0), v2=id(1,1), v3=id(1,2), v4=id(1,3);
  int w1=id(2,0), w2=id(2,1), w3=id(2,2), w4=id(2,3);
  std::vector<std::pair<int,int>> all = {
    {v2,w1},{v2,w2},{v3,w2},{v3,w3},{v4,w3},
    {v4,v3},{v3,v2},{v2,v1},{v1,w1},{w1,w2},{w2,w3},{w3,w4},{w4,v4}};
  std::vector<std::pair<int,int>> sofar;
  for (auto d : all) {
    sofar.push_back(d);
    try {
      construct_orientation(t, sofar);
      std::printf("ok after %zu\n", sofar.size());
    } catch (const Error& e) {
      std::printf("INFEASIBLE at %zu: forced %lld->%lld\n", sofar.size(),
                  (long long)t.labels[d.first], (long long)t.labels[d.second]);
      break;
    }
  }
  return 0;
}
