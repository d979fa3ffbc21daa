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
// Exact geometric predicates over rational coordinates. No floating point,
// no filters: every answer is a decision, never an estimate.

#pragma once

#include <vector>

#include "geometry.h"

namespace toro {

// Sign of det[b-a, c-a, d-a]: +1 if (a,b,c,d) is positively oriented,
// 0 iff coplanar.
int orient3d(const Point3& a, const Point3& b, const Point3& c,
             const Point3& d);

// Signed 6x volume of tetrahedron (a,b,c,d).
Rat tet_volume6(const Point3& a, const Point3& b, const Point3& c,
                const Point3& d);

enum class TriContact {
  Disjoint,
  SharedVertex,  // exactly one common point, a vertex of both
  SharedEdge,    // exactly one common full edge of both
  Identical,
  Improper,  // any other nonempty intersection
};

// Exact classification of the intersection of two closed triangles.
// Throws DegenerateTriangle on zero-area input.
TriContact triangles_classify(const Triangle& t1, const Triangle& t2);

enum class TetContact { InteriorsDisjoint, ImproperOverlap };

// InteriorsDisjoint iff the closed tetrahedra meet in a common face, a
// common edge, a common vertex, or not at all. Throws DegenerateTet.
TetContact tets_classify(const TetPoints& a, const TetPoints& b);

enum class Location { Inside, Boundary, Outside };

// Location of p relative to the closed tetrahedron t. Throws DegenerateTet.
Location point_in_tet(const Point3& p, const TetPoints& t);

// True iff the two convex solids have intersecting interiors. Each solid is
// given by its vertex set plus a triangulation of its boundary (vertex index
// triples); separating axes are drawn from face normals and edge cross
// products. Both solids must span 3D.
bool convex_interiors_intersect(const std::vector<Point3>& a_pts,
                                const std::vector<std::array<int, 3>>& a_faces,
                                const std::vector<Point3>& b_pts,
                                const std::vector<std::array<int, 3>>& b_faces);

// True iff p lies in the closed triangle t (t nondegenerate).
bool point_in_triangle(const Point3& p, const Triangle& t);

// True iff p lies on the closed segment [a, b].
bool point_on_segment(const Point3& p, const Point3& a, const Point3& b);

}  // namespace toro
