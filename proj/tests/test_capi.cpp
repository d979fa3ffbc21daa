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

#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>
#include <toroidal.h>

using nlohmann::json;

namespace {

struct MeshDeleter {
  void operator()(toro_mesh* m) const { toro_mesh_free(m); }
};
using MeshPtr = std::unique_ptr<toro_mesh, MeshDeleter>;

// Takes ownership of a C string and returns it as std::string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  toro_free(s);
  return out;
}

}  // namespace

TEST_CASE("generate, inspect, witness round-trip") {
  MeshPtr m(toro_generate("csaszar", nullptr));
  REQUIRE(m);
  CHECK(std::strlen(toro_last_error()) == 0);

  json rep = json::parse(take(toro_inspect(m.get())));
  CHECK(rep.at("vertices") == 7);
  CHECK(rep.at("genus") == 1);
  CHECK(rep.at("embedded") == true);

  CHECK(toro_mesh_claimed_genus(m.get()) == 1);
  CHECK(toro_mesh_claimed_tmin(m.get()) == 7);

  std::string wj = take(toro_mesh_witness_json(m.get()));
  json verdict = json::parse(take(toro_verify(m.get(), wj.c_str())));
  CHECK(verdict.at("valid") == true);
  CHECK(verdict.at("tets") == 7);

  json cert = json::parse(take(toro_certify(m.get(), wj.c_str())));
  CHECK(cert.at("certification") == "proven-minimal");
  CHECK(cert.at("lower_bound") == 7);
}

TEST_CASE("triangulate modes and budget") {
  MeshPtr m(toro_generate("pyramid", R"({"n":5})"));
  REQUIRE(m);
  json any = json::parse(take(toro_triangulate(m.get(), "any", 1000000)));
  CHECK(any.at("status") == "found");
  json ex = json::parse(take(toro_triangulate(m.get(), "exhaustive", 1000000)));
  CHECK(ex.at("status") == "exhausted");
  CHECK(ex.at("t_min") == 2);

  CHECK(toro_triangulate(m.get(), "wrong", 1) == nullptr);
  CHECK(std::string(toro_last_error_code()) == "BadParams");
}

TEST_CASE("schoenhardt through the C layer") {
  MeshPtr m(toro_generate("schoenhardt", R"({"c":"24/25","s":"7/25"})"));
  REQUIRE(m);
  json r = json::parse(take(toro_triangulate(m.get(), "any", 1000)));
  CHECK(r.at("status") == "not-triangulable");
  CHECK(toro_mesh_witness_json(m.get()) == nullptr);
}

TEST_CASE("OFF round-trip") {
  MeshPtr m(toro_generate("toroid-p9", "{}"));
  REQUIRE(m);
  std::string off = take(toro_mesh_write_off(m.get()));
  MeshPtr back(toro_mesh_parse_off(off.c_str()));
  REQUIRE(back);
  json a = json::parse(take(toro_inspect(m.get())));
  json b = json::parse(take(toro_inspect(back.get())));
  CHECK(a.at("vertices") == b.at("vertices"));
  CHECK(a.at("genus") == b.at("genus"));
  CHECK(a.at("volume6") == b.at("volume6"));
  // A parsed mesh carries no construction metadata.
  CHECK(toro_mesh_claimed_tmin(back.get()) == -1);
}

TEST_CASE("decomposition and graph endpoints") {
  MeshPtr m(toro_generate("toroid-p9", nullptr));
  REQUIRE(m);
  std::string dj = take(toro_mesh_decomposition_json(m.get()));

  json valid = json::parse(take(toro_validate_decomposition(m.get(),
                                                            dj.c_str(), 1)));
  CHECK(valid.at("valid") == true);

  json g = json::parse(take(toro_congraph(dj.c_str())));
  CHECK(g.at("nodes") == 3);
  CHECK(g.at("cycle_rank") == 1);

  json stats = json::parse(take(toro_graph_stats(g.dump().c_str())));
  CHECK(stats.at("connected") == true);
  CHECK(stats.at("single_cycle") == true);

  json md = json::parse(
      take(toro_check_m_division(m.get(), dj.c_str(), 10000000)));
  CHECK(md.at("verdict") == "m-division");
}

TEST_CASE("bound") {
  CHECK(toro_bound(7, 1) == 7);
  CHECK(toro_bound(10, 0) == 7);
  CHECK(toro_bound(15, 3) == 21);
  CHECK(toro_bound(3, 0) < 0);  // too few vertices for any tetrahedron
}

TEST_CASE("error reporting") {
  CHECK(toro_generate("dodecahedron", nullptr) == nullptr);
  CHECK(std::string(toro_last_error_code()) == "UnknownFamily");
  CHECK(std::strlen(toro_last_error()) > 0);

  CHECK(toro_generate("pyramid", "not json") == nullptr);
  CHECK(std::string(toro_last_error_code()) == "BadParams");

  CHECK(toro_mesh_parse_off("garbage") == nullptr);
  CHECK(std::string(toro_last_error_code()) == "ParseError");

  MeshPtr m(toro_generate("csaszar", nullptr));
  CHECK(toro_verify(m.get(), "[1,2") == nullptr);
  CHECK(std::string(toro_last_error_code()) == "ParseError");

  // Success clears the sticky error.
  json rep = json::parse(take(toro_inspect(m.get())));
  CHECK(std::strlen(toro_last_error()) == 0);

  toro_free(nullptr);
  toro_mesh_free(nullptr);
}

TEST_CASE("abstract families report claims through the C layer") {
  MeshPtr m(toro_generate("chain-shared-tet", R"({"p":3})"));
  REQUIRE(m);
  CHECK(toro_mesh_claimed_genus(m.get()) == 3);
  CHECK(toro_mesh_claimed_tmin(m.get()) == 19);
  CHECK(toro_mesh_claimed_tmin(m.get()) == toro_bound(13, 3));
  json rep = json::parse(take(toro_inspect(m.get())));
  CHECK(rep.at("genus") == 3);
  CHECK_FALSE(rep.contains("volume6"));
}
