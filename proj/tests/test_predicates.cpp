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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "core/errors.h"
#include "core/predicates.h"

using namespace toro;

namespace {

Point3 P(long x, long y, long z) { return {Rat(x), Rat(y), Rat(z)}; }

int perm_parity(const std::array<int, 4>& p) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("orient3d basic signs") {
  CHECK(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)) == 1);
  CHECK(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, -1)) == -1);
  CHECK(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(3, -7, 0)) == 0);
}

TEST_CASE("orient3d alternates with argument parity") {
  const std::array<Point3, 4> q = {P(1, 2, 3), P(4, 0, -1), P(-2, 5, 1),
                                   P(0, 0, 7)};
  int ref = orient3d(q[0], q[1], q[2], q[3]);
  REQUIRE(ref != 0);
  std::array<int, 4> idx = {0, 1, 2, 3};
  do {
    CHECK(orient3d(q[idx[0]], q[idx[1]], q[idx[2]], q[idx[3]]) ==
          perm_parity(idx) * ref);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("orient3d invariant under translation and unimodular maps") {
  const std::array<Point3, 4> q = {P(1, 2, 3), P(4, 0, -1), P(-2, 5, 1),
                                   P(0, 0, 7)};
  int ref = orient3d(q[0], q[1], q[2], q[3]);
  Vec3 t = P(11, -4, 9);
  CHECK(orient3d(q[0] + t, q[1] + t, q[2] + t, q[3] + t) == ref);
  // Shear x += 2y keeps the determinant.
  auto shear = [](const Point3& p) {
    return Point3{p.x + Rat(2) * p.y, p.y, p.z};
  };
  CHECK(orient3d(shear(q[0]), shear(q[1]), shear(q[2]), shear(q[3])) == ref);
}

TEST_CASE("tet_volume6 matches orientation and scales") {
  Rat v = tet_volume6(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1));
  CHECK(v == Rat(1));
  CHECK(tet_volume6(P(0, 0, 0), P(0, 1, 0), P(1, 0, 0), P(0, 0, 1)) ==
        Rat(-1));
  CHECK(tet_volume6(P(0, 0, 0), P(2, 0, 0), P(0, 2, 0), P(0, 0, 2)) ==
        Rat(8));
}

TEST_CASE("triangles_classify covers every contact kind") {
  Triangle a = {P(0, 0, 0), P(4, 0, 0), P(0, 4, 0)};

  SUBCASE("disjoint") {
    Triangle b = {P(10, 0, 0), P(14, 0, 0), P(10, 4, 0)};
    CHECK(triangles_classify(a, b) == TriContact::Disjoint);
    Triangle c = {P(0, 0, 1), P(4, 0, 1), P(0, 4, 1)};
    CHECK(triangles_classify(a, c) == TriContact::Disjoint);
  }
  SUBCASE("shared vertex") {
    Triangle b = {P(4, 0, 0), P(8, 0, 1), P(4, 4, 3)};
    CHECK(triangles_classify(a, b) == TriContact::SharedVertex);
  }
  SUBCASE("shared edge") {
    Triangle b = {P(0, 0, 0), P(4, 0, 0), P(0, -4, 3)};
    CHECK(triangles_classify(a, b) == TriContact::SharedEdge);
  }
  SUBCASE("identical") {
    Triangle b = {P(4, 0, 0), P(0, 4, 0), P(0, 0, 0)};
    CHECK(triangles_classify(a, b) == TriContact::Identical);
  }
  SUBCASE("improper crossings") {
    // Pierces the interior.
    Triangle b = {P(1, 1, -1), P(1, 1, 1), P(3, 3, 1)};
    CHECK(triangles_classify(a, b) == TriContact::Improper);
    // Coplanar overlap.
    Triangle c = {P(1, 1, 0), P(5, 1, 0), P(1, 5, 0)};
    CHECK(triangles_classify(a, c) == TriContact::Improper);
    // Vertex of one in the interior of the other.
    Triangle d = {P(1, 1, 0), P(1, 1, 5), P(2, 1, 5)};
    CHECK(triangles_classify(a, d) == TriContact::Improper);
    // Edge touching an edge interior point.
    Triangle e = {P(2, 0, 0), P(2, -4, 1), P(6, 0, 1)};
    CHECK(triangles_classify(a, e) == TriContact::Improper);
  }
  SUBCASE("symmetry") {
    Triangle b = {P(1, 1, -1), P(1, 1, 1), P(3, 3, 1)};
    CHECK(triangles_classify(a, b) == triangles_classify(b, a));
    Triangle c = {P(4, 0, 0), P(8, 0, 1), P(4, 4, 3)};
    CHECK(triangles_classify(a, c) == triangles_classify(c, a));
  }
  SUBCASE("degenerate input throws") {
    Triangle z = {P(0, 0, 0), P(1, 1, 1), P(2, 2, 2)};
    CHECK_THROWS_AS(triangles_classify(a, z), Error);
  }
}

TEST_CASE("tets_classify distinguishes proper and improper contact") {
  TetPoints a = {P(0, 0, 0), P(4, 0, 0), P(0, 4, 0), P(0, 0, 4)};
  SUBCASE("shared face is proper") {
    TetPoints b = {P(0, 0, 0), P(4, 0, 0), P(0, 4, 0), P(0, 0, -4)};
    CHECK(tets_classify(a, b) == TetContact::InteriorsDisjoint);
  }
  SUBCASE("shared edge is proper") {
    TetPoints b = {P(0, 0, 0), P(4, 0, 0), P(0, -4, 0), P(0, 0, -4)};
    CHECK(tets_classify(a, b) == TetContact::InteriorsDisjoint);
  }
  SUBCASE("disjoint is proper") {
    TetPoints b = {P(10, 0, 0), P(14, 0, 0), P(10, 4, 0), P(10, 0, 4)};
    CHECK(tets_classify(a, b) == TetContact::InteriorsDisjoint);
  }
  SUBCASE("overlapping interiors are improper") {
    TetPoints b = {P(1, 1, 1), P(5, 1, 1), P(1, 5, 1), P(1, 1, 5)};
    CHECK(tets_classify(a, b) == TetContact::ImproperOverlap);
    TetPoints c = {P(0, 0, 0), P(4, 0, 0), P(0, 4, 0), P(1, 1, 4)};
    CHECK(tets_classify(a, c) == TetContact::ImproperOverlap);
  }
  SUBCASE("one inside the other is improper") {
    TetPoints b = {P(1, 1, 1), P(2, 1, 1), P(1, 2, 1), P(1, 1, 2)};
    CHECK(tets_classify(a, b) == TetContact::ImproperOverlap);
  }
  SUBCASE("degenerate input throws") {
    TetPoints z = {P(0, 0, 0), P(1, 0, 0), P(2, 0, 0), P(3, 0, 0)};
    CHECK_THROWS_AS(tets_classify(a, z), Error);
  }
}

TEST_CASE("point_in_tet") {
  TetPoints t = {P(0, 0, 0), P(4, 0, 0), P(0, 4, 0), P(0, 0, 4)};
  CHECK(point_in_tet(P(1, 1, 1), t) == Location::Inside);
  CHECK(point_in_tet(P(0, 0, 0), t) == Location::Boundary);
  CHECK(point_in_tet(P(2, 2, 0), t) == Location::Boundary);
  CHECK(point_in_tet(P(4, 4, 4), t) == Location::Outside);
  CHECK(point_in_tet(P(-1, 0, 0), t) == Location::Outside);
}

TEST_CASE("point_in_triangle and point_on_segment") {
  Triangle t = {P(0, 0, 0), P(4, 0, 0), P(0, 4, 0)};
  CHECK(point_in_triangle(P(1, 1, 0), t));
  CHECK(point_in_triangle(P(2, 2, 0), t));   // edge
  CHECK(point_in_triangle(P(0, 0, 0), t));   // vertex
  CHECK_FALSE(point_in_triangle(P(3, 3, 0), t));
  CHECK_FALSE(point_in_triangle(P(1, 1, 1), t));

  CHECK(point_on_segment(P(2, 2, 2), P(0, 0, 0), P(4, 4, 4)));
  CHECK(point_on_segment(P(0, 0, 0), P(0, 0, 0), P(4, 4, 4)));
  CHECK_FALSE(point_on_segment(P(5, 5, 5), P(0, 0, 0), P(4, 4, 4)));
  CHECK_FALSE(point_on_segment(P(1, 2, 1), P(0, 0, 0), P(4, 4, 4)));
}

TEST_CASE("convex_interiors_intersect on tetrahedra") {
  std::vector<Point3> a = {P(0, 0, 0), P(4, 0, 0), P(0, 4, 0), P(0, 0, 4)};
  std::vector<std::array<int, 3>> af = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3},
                                        {1, 2, 3}};
  // Mirror image sharing the base face.
  std::vector<Point3> b = {P(0, 0, 0), P(4, 0, 0), P(0, 4, 0), P(0, 0, -4)};
  CHECK_FALSE(convex_interiors_intersect(a, af, b, af));
  // Shifted copy overlapping the interior.
  std::vector<Point3> c = {P(1, 1, 1), P(5, 1, 1), P(1, 5, 1), P(1, 1, 5)};
  CHECK(convex_interiors_intersect(a, af, c, af));
  // Far away.
  std::vector<Point3> d = {P(100, 0, 0), P(104, 0, 0), P(100, 4, 0),
                           P(100, 0, 4)};
  CHECK_FALSE(convex_interiors_intersect(a, af, d, af));
}
