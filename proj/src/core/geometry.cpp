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

#include "geometry.h"

#include "errors.h"

namespace toro {

AffineMap AffineMap::identity() {
  AffineMap m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.linear[i][j] = (i == j) ? 1 : 0;
  m.translation = Vec3();
  return m;
}

Point3 AffineMap::apply(const Point3& p) const {
  return {linear[0][0] * p.x + linear[0][1] * p.y + linear[0][2] * p.z +
              translation.x,
          linear[1][0] * p.x + linear[1][1] * p.y + linear[1][2] * p.z +
              translation.y,
          linear[2][0] * p.x + linear[2][1] * p.y + linear[2][2] * p.z +
              translation.z};
}

Rat AffineMap::det() const {
  const auto& m = linear;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

AffineMap AffineMap::from_correspondence(const TetPoints& src,
                                         const TetPoints& dst) {
  // Columns of S are src[i]-src[0]; solve L*S = D, then translation.
  std::array<Vec3, 3> s, d;
  for (int i = 0; i < 3; ++i) {
    s[i] = src[i + 1] - src[0];
    d[i] = dst[i + 1] - dst[0];
  }
  Rat det = dot(s[0], cross(s[1], s[2]));
  if (sgn(det) == 0)
    fail(ErrorCode::DegenerateTet, "affine correspondence source is flat");
  // Rows of S^{-1} are cross products of the other two columns / det.
  std::array<Vec3, 3> inv_rows = {cross(s[1], s[2]), cross(s[2], s[0]),
                                  cross(s[0], s[1])};
  AffineMap m;
  for (int r = 0; r < 3; ++r) {
    // L = D * S^{-1}; D's rows are component-slices of d columns.
    Vec3 drow(r == 0 ? d[0].x : (r == 1 ? d[0].y : d[0].z),
              r == 0 ? d[1].x : (r == 1 ? d[1].y : d[1].z),
              r == 0 ? d[2].x : (r == 1 ? d[2].y : d[2].z));
    for (int c = 0; c < 3; ++c) {
      Vec3 icol(c == 0 ? inv_rows[0].x : (c == 1 ? inv_rows[0].y : inv_rows[0].z),
                c == 0 ? inv_rows[1].x : (c == 1 ? inv_rows[1].y : inv_rows[1].z),
                c == 0 ? inv_rows[2].x : (c == 1 ? inv_rows[2].y : inv_rows[2].z));
      m.linear[r][c] = dot(drow, icol) / det;
    }
  }
  Point3 l0 = {m.linear[0][0] * src[0].x + m.linear[0][1] * src[0].y +
                   m.linear[0][2] * src[0].z,
               m.linear[1][0] * src[0].x + m.linear[1][1] * src[0].y +
                   m.linear[1][2] * src[0].z,
               m.linear[2][0] * src[0].x + m.linear[2][1] * src[0].y +
                   m.linear[2][2] * src[0].z};
  m.translation = dst[0] - l0;
  return m;
}

}  // namespace toro
