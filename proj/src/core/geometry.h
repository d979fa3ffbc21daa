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

#pragma once

#include <array>

#include "rational.h"

namespace toro {

struct Vec3 {
  Rat x, y, z;

  Vec3() : x(0), y(0), z(0) {}
  Vec3(Rat xx, Rat yy, Rat zz)
      : x(std::move(xx)), y(std::move(yy)), z(std::move(zz)) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(const Rat& s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  bool operator==(const Vec3& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
  bool operator!=(const Vec3& o) const { return !(*this == o); }
  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0; }
};

using Point3 = Vec3;

inline Rat dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

using Triangle = std::array<Point3, 3>;
using TetPoints = std::array<Point3, 4>;

// Rational affine transform p -> linear * p + translation.
struct AffineMap {
  std::array<std::array<Rat, 3>, 3> linear;
  Vec3 translation;

  static AffineMap identity();

  Point3 apply(const Point3& p) const;
  Rat det() const;

  // The unique affine map taking src[i] to dst[i] for i = 0..3.
  // Requires src to span (nondegenerate tetrahedron).
  static AffineMap from_correspondence(const TetPoints& src,
                                       const TetPoints& dst);
};

}  // namespace toro
