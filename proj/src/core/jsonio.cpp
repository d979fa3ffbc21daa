// Copyright 2026 The Toroidal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jsonio.h"

#include <json.hpp>

#include "errors.h"

namespace toro {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON");
  return j;
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::NotTriangulable: return "not-triangulable";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

json tets_json(const Triangulation& t) {
  json tets = json::array();
  for (const Tet& x : t.tets)
    tets.push_back({x.v[0], x.v[1], x.v[2], x.v[3]});
  return tets;
}

}  // namespace

std::string triangulation_to_json(const Triangulation& t) {
  json j;
  j["mesh"] = t.mesh_label;
  j["tets"] = tets_json(t);
  return j.dump(2) + "\n";
}

Triangulation triangulation_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("mesh") || !j.contains("tets") ||
      !j["mesh"].is_string() || !j["tets"].is_array())
    fail(ErrorCode::ParseError, "triangulation JSON needs mesh and tets");
  std::vector<Tet> tets;
  for (const json& t : j["tets"]) {
    if (!t.is_array() || t.size() != 4 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_number_integer() ||
        !t[3].is_number_integer())
      fail(ErrorCode::ParseError, "tet must be four integers");
    tets.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(),
                      t[3].get<int>());
  }
  return Triangulation::of(j["mesh"].get<std::string>(), std::move(tets));
}

std::string decomposition_to_json(const Decomposition& d) {
  json j;
  j["mesh"] = d.mesh_label;
  json pieces = json::array();
  for (const Piece& p : d.pieces) {
    json jp;
    jp["vertices"] = p.vertices;
    json faces = json::array();
    for (const Face& f : p.faces) faces.push_back({f[0], f[1], f[2]});
    jp["faces"] = faces;
    pieces.push_back(jp);
  }
  j["pieces"] = pieces;
  return j.dump(2) + "\n";
}

Decomposition decomposition_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("mesh") || !j.contains("pieces") ||
      !j["pieces"].is_array())
    fail(ErrorCode::ParseError, "decomposition JSON needs mesh and pieces");
  Decomposition d;
  d.mesh_label = j.value("mesh", "");
  for (const json& jp : j["pieces"]) {
    if (!jp.is_object() || !jp.contains("vertices") || !jp.contains("faces"))
      fail(ErrorCode::ParseError, "piece needs vertices and faces");
    Piece p;
    for (const json& v : jp["vertices"]) {
      if (!v.is_number_integer())
        fail(ErrorCode::ParseError, "piece vertex must be an integer");
      p.vertices.push_back(v.get<int>());
    }
    for (const json& f : jp["faces"]) {
      if (!f.is_array() || f.size() != 3)
        fail(ErrorCode::ParseError, "piece face must be three integers");
      p.faces.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    d.pieces.push_back(std::move(p));
  }
  return d;
}

std::string graph_to_json(const ConnectionGraph& g) {
  json j;
  j["nodes"] = g.nodes;
  json edges = json::array();
  for (const GraphEdge& e : g.edges) edges.push_back({e.a, e.b});
  j["edges"] = edges;
  j["cycle_rank"] = g.cycle_rank;
  return j.dump(2) + "\n";
}

ConnectionGraph graph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges") ||
      !j["nodes"].is_number_integer() || !j["edges"].is_array())
    fail(ErrorCode::ParseError, "graph JSON needs nodes and edges");
  std::vector<std::array<int, 2>> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      fail(ErrorCode::ParseError, "graph edge must be two integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  ConnectionGraph g = graph_from_edges(j["nodes"].get<int>(), edges);
  if (j.contains("cycle_rank") && j["cycle_rank"].is_number_integer() &&
      j["cycle_rank"].get<int>() != g.cycle_rank)
    fail(ErrorCode::ParseError, "stored cycle_rank disagrees with edges");
  return g;
}

std::string surface_report_to_json(const SurfaceReport& r) {
  json j;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["faces"] = r.face_count;
  j["euler_characteristic"] = r.euler_characteristic;
  if (r.genus) j["genus"] = *r.genus;
  j["manifold"] = r.manifold;
  j["orientable"] = r.orientable;
  if (r.embedded) j["embedded"] = *r.embedded;
  if (r.volume6) j["volume6"] = rat_str(*r.volume6);
  return j.dump(2) + "\n";
}

std::string search_result_to_json(const SearchResult& r,
                                  const std::string& mesh_label) {
  json j;
  j["status"] = status_name(r.status);
  if (r.t_min) j["t_min"] = *r.t_min;
  if (r.t_max) j["t_max"] = *r.t_max;
  if (r.n_triangulations) j["n_triangulations"] = *r.n_triangulations;
  j["nodes_explored"] = r.nodes_explored;
  if (r.witness_min) {
    Triangulation w = *r.witness_min;
    w.mesh_label = mesh_label;
    j["witness_min"] = json::parse(triangulation_to_json(w));
  }
  if (r.witness_max) {
    Triangulation w = *r.witness_max;
    w.mesh_label = mesh_label;
    j["witness_max"] = json::parse(triangulation_to_json(w));
  }
  return j.dump(2) + "\n";
}

}  // namespace toro
