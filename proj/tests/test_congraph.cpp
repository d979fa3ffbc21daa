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

#include <vector>

#include "core/congraph.h"
#include "core/constructions.h"
#include "core/engine.h"
#include "core/errors.h"
#include "core/trimesh.h"

using namespace toro;

namespace {

// The 7-vertex bipyramid split into its two pyramids along the fanned base
// pentagon: both pieces are convex, the contact faces are the fan triangles.
Decomposition bipyramid7_two_pyramids() {
  Decomposition d;
  d.mesh_label = "bipyramid_n7";
  const int top = 5, bot = 6;
  for (int apex : {top, bot}) {
    Piece p;
    p.vertices = {0, 1, 2, 3, 4, apex};
    for (int k = 0; k < 5; ++k)
      p.faces.push_back({apex, k, (k + 1) % 5});
    for (int k = 1; k + 1 < 5; ++k) p.faces.push_back({0, k, k + 1});
    d.pieces.push_back(std::move(p));
  }
  return d;
}

}  // namespace

TEST_CASE("toroid_p9 decomposition: validity, graph, m-division") {
  ConstructionOutput t = toroid_p9();
  REQUIRE(t.decomposition.has_value());
  ValidityReport v = validate_decomposition(t.mesh, *t.decomposition, true);
  CHECK(v.valid);

  ConnectionGraph g = build_graph(*t.decomposition);
  CHECK(g.nodes == 3);
  CHECK(g.edges.size() == 3);
  CHECK(g.connected);
  CHECK(g.cycle_rank == 1);
  CHECK(is_single_cycle(g));
  CHECK(check_m_division(t.mesh, *t.decomposition) == MDivision::MDiv);
}

TEST_CASE("bipyramid split into two pyramids is not an m-division") {
  BipyramidOutput b = bipyramid(7);
  Decomposition d = bipyramid7_two_pyramids();
  CHECK(validate_decomposition(b.out.mesh, d).valid);
  ConnectionGraph g = build_graph(d);
  CHECK(g.nodes == 2);
  CHECK(g.edges.size() == 3);  // fanned pentagon: three contact triangles
  CHECK(g.cycle_rank == 2);    // parallel edges count
  // Each pyramid piece needs 3 tets, but the whole bipyramid's minimum is 5,
  // so the piece minima cannot assemble into a minimal triangulation.
  CHECK(check_m_division(b.out.mesh, d) == MDivision::NotMDiv);
}

TEST_CASE("a witness decomposition is always an m-division") {
  ConstructionOutput c = csaszar();
  Decomposition d = tets_as_decomposition(c.mesh, *c.witness);
  CHECK(d.pieces.size() == 7);
  CHECK(validate_decomposition(c.mesh, d).valid);
  CHECK(check_m_division(c.mesh, d) == MDivision::MDiv);
}

TEST_CASE("validate_decomposition rejects broken inputs") {
  ConstructionOutput t = toroid_p9();
  SUBCASE("missing piece") {
    Decomposition d = *t.decomposition;
    d.pieces.pop_back();
    CHECK_FALSE(validate_decomposition(t.mesh, d).valid);
  }
  SUBCASE("merged non-convex piece") {
    Decomposition d = *t.decomposition;
    Piece merged;
    std::vector<char> seen(t.mesh.n_vertices, 0);
    for (int i : {0, 1}) {
      for (int v : d.pieces[i].vertices)
        if (!seen[v]) {
          seen[v] = 1;
          merged.vertices.push_back(v);
        }
      for (const Face& f : d.pieces[i].faces) merged.faces.push_back(f);
    }
    d.pieces.erase(d.pieces.begin(), d.pieces.begin() + 2);
    d.pieces.push_back(std::move(merged));
    CHECK_FALSE(validate_decomposition(t.mesh, d).valid);
  }
  SUBCASE("empty decomposition") {
    Decomposition d;
    d.mesh_label = t.mesh.label;
    CHECK_FALSE(validate_decomposition(t.mesh, d).valid);
  }
}

TEST_CASE("piece_mesh extracts a validated sub-surface") {
  ConstructionOutput t = toroid_p9();
  std::vector<int> l2g;
  TriMesh pm = piece_mesh(t.mesh, t.decomposition->pieces[0], &l2g);
  SurfaceReport r = validate(pm);
  CHECK(*r.genus == 0);
  CHECK(l2g.size() == t.decomposition->pieces[0].vertices.size());
}

TEST_CASE("graph_from_edges and cycle_rank") {
  // Triangle plus a pendant: one cycle.
  ConnectionGraph g =
      graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(g.connected);
  CHECK(g.cycle_rank == 1);
  CHECK_FALSE(is_single_cycle(g));  // node 3 has degree 1

  ConnectionGraph tri = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_single_cycle(tri));

  ConnectionGraph lone = graph_from_edges(1, {});
  CHECK_FALSE(is_single_cycle(lone));

  // Two components, one cycle each.
  ConnectionGraph two = graph_from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(two.connected);
  CHECK(two.cycle_rank == 2);
  CHECK_FALSE(is_single_cycle(two));
}

TEST_CASE("graph isomorphism is label-independent") {
  ConnectionGraph a =
      graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  ConnectionGraph b =
      graph_from_edges(4, {{3, 2}, {2, 1}, {3, 1}, {3, 0}});
  CHECK(graphs_isomorphic(a, b));

  ConnectionGraph c = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK_FALSE(graphs_isomorphic(a, c));
  CHECK_FALSE(
      graphs_isomorphic(a, graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST_CASE("pyramid witness tets form a path graph") {
  ConstructionOutput p = pyramid(7);
  Decomposition d = tets_as_decomposition(p.mesh, *p.witness);
  ConnectionGraph g = build_graph(d);
  CHECK(g.nodes == 4);
  CHECK(g.edges.size() == 3);
  CHECK(g.connected);
  CHECK(g.cycle_rank == 0);
}

TEST_CASE("decomposition volumes partition exactly") {
  ConstructionOutput t = toroid_p9();
  Rat total(0);
  for (const Piece& p : t.decomposition->pieces) {
    TriMesh pm = piece_mesh(t.mesh, p);
    total += enclosed_volume6(pm);
  }
  CHECK(total == enclosed_volume6(t.mesh));
}
