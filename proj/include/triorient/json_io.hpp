#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "triorient/chain_flip.hpp"
#include "triorient/dyck.hpp"
#include "triorient/orientation.hpp"
#include "triorient/triangulation.hpp"

namespace triorient {

using Json = nlohmann::ordered_json;

inline Json triangulation_to_json(const Triangulation& t) {
  Json j;
  j["n_internal"] = t.n_internal;
  j["external"] = {t.labels[t.external[0]], t.labels[t.external[1]], t.labels[t.external[2]]};
  Json rot = Json::object();
  for (int v = 0; v < t.num_vertices; ++v) {
    Json cyc = Json::array();
    for (int u : t.rotation[v]) cyc.push_back(t.labels[u]);
    rot[std::to_string(t.labels[v])] = cyc;
  }
  j["rotation"] = rot;
  return j;
}

inline Triangulation triangulation_from_json(const Json& j) {
  if (!j.contains("external") || !j.contains("rotation"))
    fail(Errc::BadInput, "triangulation", "missing external or rotation");
  RotationSystem spec;
  for (int i = 0; i < 3; ++i) spec.external[i] = j["external"][i].get<std::int64_t>();
  for (auto it = j["rotation"].begin(); it != j["rotation"].end(); ++it) {
    std::int64_t label = std::stoll(it.key());
    std::vector<std::int64_t> cyc;
    for (const auto& v : it.value()) cyc.push_back(v.get<std::int64_t>());
    spec.rotation.emplace_back(label, std::move(cyc));
  }
  Triangulation t = build_triangulation(spec);
  if (j.contains("n_internal") && j["n_internal"].get<int>() != t.n_internal)
    fail(Errc::BadInput, "n_internal", "declared n_internal does not match the rotation system");
  return t;
}

inline Json orientation_bundle_to_json(const FlipState& s) {
  const Triangulation& t = *s.tri;
  SchnyderWood w = derive_schnyder_coloring(s.view());
  Json j;
  j["triangulation"] = triangulation_to_json(t);
  Json arr = Json::array();
  for (int eid : t.internal_edges) {
    Json e;
    e["tail"] = t.labels[w.orientation.tail_of(eid)];
    e["head"] = t.labels[w.orientation.head_of(eid)];
    e["color"] = color_name(w.color_of(eid));
    arr.push_back(e);
  }
  j["orientation"] = arr;
  return j;
}

inline FlipState orientation_bundle_from_json(const Json& j) {
  FlipState s;
  s.tri = std::make_shared<Triangulation>(triangulation_from_json(j.at("triangulation")));
  const Triangulation& t = *s.tri;
  s.dir.assign(t.internal_edges.size(), 0);
  std::vector<char> set(t.internal_edges.size(), 0);
  for (const auto& e : j.at("orientation")) {
    int a = t.vertex_of_label(e.at("tail").get<std::int64_t>());
    int b = t.vertex_of_label(e.at("head").get<std::int64_t>());
    int eid = t.edge_id(a, b);
    if (eid < 0 || !t.edge_is_internal(eid))
      fail(Errc::BadInput, "orientation", "edge is not an internal edge");
    s.dir[t.internal_rank[eid]] = (t.edges[eid].first == a) ? 1 : 0;
    set[t.internal_rank[eid]] = 1;
  }
  for (char c : set)
    if (!c) fail(Errc::BadInput, "orientation", "missing direction for an internal edge");
  if (!orientation_valid(s.view()))
    fail(Errc::BadInput, "orientation", "out-degree condition violated");
  return s;
}

inline Json dyck_pair_to_json(const DyckPair& p) {
  Json j;
  j["top"] = Json::array();
  j["bottom"] = Json::array();
  for (auto v : p.top.steps) j["top"].push_back(int(v));
  for (auto v : p.bottom.steps) j["bottom"].push_back(int(v));
  return j;
}

inline DyckPair dyck_pair_from_json(const Json& j) {
  DyckPair p;
  for (const auto& v : j.at("top")) p.top.steps.push_back(std::int8_t(v.get<int>()));
  for (const auto& v : j.at("bottom")) p.bottom.steps.push_back(std::int8_t(v.get<int>()));
  if (!p.valid()) fail(Errc::BadInput, "pair", "not a non-crossing Dyck pair");
  return p;
}

// Embedded graph in DOT, external vertices marked, edges in canonical order.
inline std::string to_dot(const Triangulation& t) {
  std::ostringstream os;
  os << "graph triangulation {\n";
  for (int v = 0; v < t.num_vertices; ++v) {
    os << "  \"" << t.labels[v] << "\"";
    if (t.is_external(v)) {
      const char* role = v == t.external[0] ? "red" : (v == t.external[1] ? "green" : "blue");
      os << " [shape=doublecircle, color=" << role << "]";
    }
    os << ";\n";
  }
  for (const auto& [a, b] : t.edges)
    os << "  \"" << t.labels[a] << "\" -- \"" << t.labels[b] << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace triorient
