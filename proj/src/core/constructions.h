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
//
// Generators for the mesh families: pyramids, bipyramids, the twisted
// prism, the 7-vertex torus, a 9-vertex toroid, and glued chains of these,
// each with a triangulation witness where one exists.

#pragma once

#include <optional>

#include "congraph.h"
#include "engine.h"
#include "trimesh.h"

namespace toro {

struct ConstructionOutput {
  TriMesh mesh;
  std::optional<Triangulation> witness;
  std::optional<Decomposition> decomposition;
  int claimed_genus = 0;
  std::optional<long> claimed_tmin;
};

// Pyramid with n vertices: an (n-1)-gon base and an apex. The planar base is
// fan-triangulated; with planar_base false the base vertices get alternating
// heights. Witness: the fan of n-3 tets from the apex edge. n >= 4.
ConstructionOutput pyramid(int n, bool planar_base = true);

// Bipyramid with n vertices over an (n-2)-gon, n >= 5, with its two classic
// triangulations: two base fans (2(n-4) tets) and the fan around the apex
// axis (n-2 tets). The output witness is the smaller of the two.
struct BipyramidOutput {
  ConstructionOutput out;
  Triangulation two_fans;
  Triangulation axis_fan;
};
BipyramidOutput bipyramid(int n);

// Twisted triangular prism: bottom triangle on the unit circle, top copy
// rotated by the rational rotation (c, s), c^2 + s^2 = 1, s > 0, lifted to
// height 1, lateral quads split so all three diagonals are reflex. Throws
// TwistTooLarge when the twist leaves the solid convex or breaks embedding.
ConstructionOutput schoenhardt(const Rat& c = Rat(24, 25),
                               const Rat& s = Rat(7, 25));

// The 7-vertex torus with complete edge graph, plus its 7-tet witness whose
// connection graph is a single cycle.
ConstructionOutput csaszar();

// A 9-vertex toroid built from three convex wedges around the z axis, with
// a 9-tet witness and the wedge decomposition (graph: a 3-cycle).
ConstructionOutput toroid_p9();

// Glues mesh b onto mesh a by identifying the placed image of b's face_b
// with a's face_a. The placement must carry b's face vertices exactly onto
// a's, b's interior to a's exterior. Vertices merge 3-for-3; witnesses and
// claims combine. Throws PlacementMismatch / NotEmbedded.
struct GlueResult {
  ConstructionOutput out;
  std::vector<int> b_vertex_map;  // b vertex index -> glued mesh index
};
GlueResult glue_on_face(const ConstructionOutput& a, int face_a,
                        const ConstructionOutput& b, int face_b,
                        const AffineMap& placement);

// Searches correspondence orderings and shrink factors for a placement that
// embeds, then glues. Throws NotEmbedded when none of the attempts fit.
GlueResult glue_auto(const ConstructionOutput& a, int face_a,
                     const ConstructionOutput& b, int face_b);

// Chain of p 7-vertex tori glued face to face: n = 4p + 3, genus p,
// 7p tets, meeting the genus bound exactly. p >= 1.
ConstructionOutput chain_csaszar(int p);

// Glues a pyramid with k vertices onto the first face of base that admits a
// placement. Adds k - 3 vertices and k - 3 tets: bound equality persists.
ConstructionOutput attach_simple(const ConstructionOutput& base, int k);

// Abstract chain of p 7-vertex tori in which consecutive copies share a
// whole witness tetrahedron: n = 3p + 4, genus p, 6p + 1 tets claimed.
// The result is a combinatorial complex without coordinates. p >= 1.
ConstructionOutput chain_csaszar_shared_tet(int p);

// Abstract ring of p copies, consecutive ones sharing a tetrahedron:
// n = 3p, genus p + 1, 6p tets claimed. p >= 3. A validated face complex is
// attached whenever one exists (p >= 5); no ring of these units closes for
// p = 3 or 4, so those outputs carry the bookkeeping with an empty face
// list.
ConstructionOutput cycle_closure(int p);

}  // namespace toro
