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

#include <algorithm>

#include "core/constructions.h"
#include "core/engine.h"
#include "core/errors.h"
#include "core/trimesh.h"
#include "oracle.h"

using namespace toro;

namespace {

TriMesh octahedron() {
  TriMesh m;
  m.n_vertices = 6;
  m.label = "octahedron";
  m.coords = std::vector<Point3>{
      {Rat(1), Rat(0), Rat(0)},  {Rat(-1), Rat(0), Rat(0)},
      {Rat(0), Rat(1), Rat(0)},  {Rat(0), Rat(-1), Rat(0)},
      {Rat(0), Rat(0), Rat(1)},  {Rat(0), Rat(0), Rat(-1)}};
  m.faces = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
             {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  normalize_orientation(m);
  return m;
}

}  // namespace

TEST_CASE("lower_bound_tets formula") {
  CHECK(lower_bound_tets(4, 0) == 1);
  CHECK(lower_bound_tets(10, 0) == 7);
  CHECK(lower_bound_tets(7, 1) == 7);
  CHECK(lower_bound_tets(9, 4) == 18);
  CHECK(lower_bound_tets(3 * 5, 6) == 30);
}

TEST_CASE("octahedron: every triangulation has 4 tets") {
  TriMesh m = octahedron();
  SearchResult r = search(m, SearchMode::Exhaustive);
  CHECK(r.status == SearchStatus::Exhausted);
  CHECK(*r.t_min == 4);
  CHECK(*r.t_max == 4);
  CHECK(*r.n_triangulations == 3);  // one per interior diagonal
  CHECK(is_valid_triangulation(m, r.witness_min->tets).valid);
}

TEST_CASE("engine matches the naive oracle") {
  for (const TriMesh& m : {octahedron(), pyramid(5).mesh, pyramid(6).mesh,
                           bipyramid(6).out.mesh, csaszar().mesh}) {
    CAPTURE(m.label);
    SearchResult r = search(m, SearchMode::Exhaustive);
    toro_test::OracleResult o = toro_test::oracle_enumerate(m);
    REQUIRE(r.status == SearchStatus::Exhausted);
    CHECK(*r.n_triangulations == o.count);
    CHECK(*r.t_min == o.t_min);
    CHECK(*r.t_max == o.t_max);
  }
}

TEST_CASE("pyramids have t_min = n - 3") {
  for (int n = 4; n <= 7; ++n) {
    ConstructionOutput p = pyramid(n);
    SearchResult r = search(p.mesh, SearchMode::Exhaustive);
    REQUIRE(r.status == SearchStatus::Exhausted);
    CHECK(*r.t_min == n - 3);
    CHECK(certify_minimal(p.mesh, *r.witness_min) ==
          Certification::ProvenMinimal);
  }
}

TEST_CASE("schoenhardt has no candidate tets") {
  ConstructionOutput s = schoenhardt();
  CHECK(candidate_tets(s.mesh).empty());
  SearchResult r = search(s.mesh, SearchMode::Any);
  CHECK(r.status == SearchStatus::NotTriangulable);
  CHECK(!r.t_min.has_value());
}

TEST_CASE("candidate and inner tets on the octahedron") {
  TriMesh m = octahedron();
  std::vector<Tet> cand = candidate_tets(m);
  // Every candidate must pass the membership test and appear sorted.
  for (const Tet& t : cand) {
    CHECK(is_inner_tet(m, t));
    CHECK(std::is_sorted(t.v.begin(), t.v.end()));
  }
  CHECK(std::is_sorted(cand.begin(), cand.end()));
  // A tet through an equatorial diagonal and an apex is inner.
  CHECK(is_inner_tet(m, Tet(0, 1, 2, 4)));
  // Two opposite axis pairs are coplanar: not a tet at all.
  CHECK_FALSE(is_inner_tet(m, Tet(0, 1, 4, 5)));
}

TEST_CASE("is_valid_triangulation rejects wrong sets") {
  TriMesh m = octahedron();
  SearchResult r = search(m, SearchMode::Any);
  REQUIRE(r.witness_min.has_value());
  std::vector<Tet> good = r.witness_min->tets;

  SUBCASE("valid witness accepted") {
    CHECK(is_valid_triangulation(m, good).valid);
  }
  SUBCASE("missing tet") {
    std::vector<Tet> bad(good.begin(), good.end() - 1);
    CHECK_FALSE(is_valid_triangulation(m, bad).valid);
  }
  SUBCASE("duplicated volume") {
    std::vector<Tet> bad = good;
    bad.push_back(Tet(0, 1, 2, 4));
    CHECK_FALSE(is_valid_triangulation(m, bad).valid);
  }
  SUBCASE("empty set") {
    CHECK_FALSE(is_valid_triangulation(m, {}).valid);
  }
  SUBCASE("out-of-range index") {
    CHECK_THROWS_AS(is_valid_triangulation(m, {Tet(0, 1, 2, 9)}), Error);
  }
}

TEST_CASE("search is deterministic") {
  TriMesh m = bipyramid(7).out.mesh;
  SearchResult a = search(m, SearchMode::Exhaustive);
  SearchResult b = search(m, SearchMode::Exhaustive);
  CHECK(a.witness_min->tets == b.witness_min->tets);
  CHECK(a.witness_max->tets == b.witness_max->tets);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("budget exhaustion is reported") {
  TriMesh m = csaszar().mesh;
  SearchResult r = search(m, SearchMode::Exhaustive, 1);
  CHECK(r.status == SearchStatus::BudgetExceeded);
}

TEST_CASE("certify_minimal outcomes") {
  ConstructionOutput c = csaszar();
  CHECK(certify_minimal(c.mesh, *c.witness) == Certification::ProvenMinimal);

  // The 7-bipyramid's 5-tet minimum exceeds the sphere bound of 4, so the
  // certificate cannot prove it.
  BipyramidOutput b = bipyramid(7);
  CHECK(certify_minimal(b.out.mesh, b.axis_fan) ==
        Certification::ValidButUnproven);
  CHECK_THROWS_AS(certify_minimal(b.out.mesh, Triangulation::of("", {})),
                  Error);
}

TEST_CASE("every found triangulation respects the genus bound") {
  for (const TriMesh& m :
       {octahedron(), pyramid(6).mesh, bipyramid(7).out.mesh,
        csaszar().mesh}) {
    SurfaceReport rep = validate(m);
    SearchResult r = search(m, SearchMode::Exhaustive);
    REQUIRE(r.t_min.has_value());
    CHECK(*r.t_min >= lower_bound_tets(m.n_vertices, *rep.genus));
  }
}
