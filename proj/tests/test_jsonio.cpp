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

#include <doctest.h>

#include <string>

#include <json.hpp>

#include "core/congraph.h"
#include "core/constructions.h"
#include "core/engine.h"
#include "core/errors.h"
#include "core/jsonio.h"
#include "core/trimesh.h"

using namespace toro;
using nlohmann::json;

TEST_CASE("triangulation round-trip") {
  ConstructionOutput c = csaszar();
  std::string text = triangulation_to_json(*c.witness);
  json j = json::parse(text);
  CHECK(j.at("mesh") == c.mesh.label);
  CHECK(j.at("tets").size() == 7);
  for (const auto& t : j.at("tets")) CHECK(t.size() == 4);

  Triangulation back = triangulation_from_json(text);
  CHECK(back.mesh_label == c.witness->mesh_label);
  CHECK(back.tets == c.witness->tets);
}

TEST_CASE("decomposition round-trip") {
  ConstructionOutput t = toroid_p9();
  std::string text = decomposition_to_json(*t.decomposition);
  json j = json::parse(text);
  CHECK(j.at("mesh") == t.mesh.label);
  CHECK(j.at("pieces").size() == 3);
  CHECK(j.at("pieces")[0].contains("vertices"));
  CHECK(j.at("pieces")[0].contains("faces"));

  Decomposition back = decomposition_from_json(text);
  CHECK(back.mesh_label == t.decomposition->mesh_label);
  REQUIRE(back.pieces.size() == t.decomposition->pieces.size());
  for (size_t i = 0; i < back.pieces.size(); ++i) {
    CHECK(back.pieces[i].vertices == t.decomposition->pieces[i].vertices);
    CHECK(back.pieces[i].faces == t.decomposition->pieces[i].faces);
  }
  CHECK(validate_decomposition(t.mesh, back).valid);
}

TEST_CASE("graph round-trip and cycle-rank cross-check") {
  ConnectionGraph g = build_graph(*toroid_p9().decomposition);
  std::string text = graph_to_json(g);
  json j = json::parse(text);
  CHECK(j.at("nodes") == 3);
  CHECK(j.at("edges").size() == 3);
  CHECK(j.at("cycle_rank") == 1);

  ConnectionGraph back = graph_from_json(text);
  CHECK(back.nodes == g.nodes);
  CHECK(back.edges.size() == g.edges.size());
  // The rank is recomputed from the edge list, not trusted from the file.
  CHECK(back.cycle_rank == 1);
  CHECK(graphs_isomorphic(back, g));
}

TEST_CASE("graph_from_json checks stored cycle_rank against the edges") {
  ConnectionGraph g = graph_from_json(
      R"({"nodes":3,"edges":[[0,1],[1,2],[0,2]],"cycle_rank":1})");
  CHECK(g.cycle_rank == 1);
  CHECK(is_single_cycle(g));
  // A missing rank is recomputed; a wrong one is an error.
  CHECK(graph_from_json(R"({"nodes":3,"edges":[[0,1],[1,2],[0,2]]})")
            .cycle_rank == 1);
  CHECK_THROWS_AS(graph_from_json(
                      R"({"nodes":3,"edges":[[0,1],[1,2],[0,2]],"cycle_rank":7})"),
                  Error);
}

TEST_CASE("surface report carries exact rationals") {
  ConstructionOutput c = csaszar();
  SurfaceReport rep = validate(c.mesh);
  rep.embedded = is_embedded(c.mesh).embedded;
  rep.volume6 = enclosed_volume6(c.mesh);
  json j = json::parse(surface_report_to_json(rep));
  CHECK(j.at("vertices") == 7);
  CHECK(j.at("edges") == 21);
  CHECK(j.at("faces") == 14);
  CHECK(j.at("genus") == 1);
  CHECK(j.at("manifold") == true);
  CHECK(j.at("orientable") == true);
  CHECK(j.at("embedded") == true);
  // Volume is serialized as an exact rational string, not a float.
  std::string v = j.at("volume6").get<std::string>();
  CHECK(v == rat_str(enclosed_volume6(c.mesh)));
}

TEST_CASE("search result status names") {
  ConstructionOutput s = schoenhardt();
  json j = json::parse(
      search_result_to_json(search(s.mesh, SearchMode::Any), s.mesh.label));
  CHECK(j.at("status") == "not-triangulable");

  TriMesh m = pyramid(5).mesh;
  json ja = json::parse(
      search_result_to_json(search(m, SearchMode::Any), m.label));
  CHECK(ja.at("status") == "found");
  json je = json::parse(
      search_result_to_json(search(m, SearchMode::Exhaustive), m.label));
  CHECK(je.at("status") == "exhausted");
  CHECK(je.at("t_min") == 2);
  CHECK(je.at("t_max") == 2);

  TriMesh c = csaszar().mesh;
  json jb = json::parse(search_result_to_json(
      search(c, SearchMode::Exhaustive, 1), c.label));
  CHECK(jb.at("status") == "budget-exceeded");
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(triangulation_from_json("not json"), Error);
  CHECK_THROWS_AS(triangulation_from_json(R"({"mesh":"x"})"), Error);
  CHECK_THROWS_AS(
      triangulation_from_json(R"({"mesh":"x","tets":[[0,1,2]]})"), Error);
  CHECK_THROWS_AS(decomposition_from_json(R"({"pieces":3})"), Error);
  CHECK_THROWS_AS(graph_from_json(R"({"nodes":2,"edges":[[0,5]]})"), Error);
}
