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

#include "predicates.h"

#include <algorithm>

#include "errors.h"

namespace toro {

int orient3d(const Point3& a, const Point3& b, const Point3& c,
             const Point3& d) {
  return sign(tet_volume6(a, b, c, d));
}

Rat tet_volume6(const Point3& a, const Point3& b, const Point3& c,
                const Point3& d) {
  return dot(b - a, cross(c - a, d - a));
}

bool point_on_segment(const Point3& p, const Point3& a, const Point3& b) {
  Vec3 ab = b - a;
  Vec3 ap = p - a;
  if (!cross(ap, ab).is_zero()) return false;
  Rat t = dot(ap, ab);
  return sgn(t) >= 0 && t <= dot(ab, ab);
}

namespace {

Vec3 tri_normal(const Triangle& t) {
  return cross(t[1] - t[0], t[2] - t[0]);
}

bool is_vertex_of(const Point3& p, const Triangle& t) {
  return p == t[0] || p == t[1] || p == t[2];
}

bool is_vertex_of(const Point3& p, const TetPoints& t) {
  return p == t[0] || p == t[1] || p == t[2] || p == t[3];
}

void push_unique(std::vector<Point3>& pts, const Point3& p) {
  for (const auto& q : pts)
    if (q == p) return;
  pts.push_back(p);
}

// Signed side of p relative to the line through (u, v) within the plane
// with normal n: the plane spanned by (v-u) and n splits space along that
// line.
Rat line_side(const Point3& u, const Point3& v, const Vec3& n,
              const Point3& p) {
  return dot(cross(v - u, n), p - u);
}

// Sutherland-Hodgman clip of a convex polygon (listed in the plane with
// normal n) against the half-plane of edge (u, v) whose inside has the sign
// of `keep`.
std::vector<Point3> clip_polygon_halfplane(const std::vector<Point3>& poly,
                                           const Point3& u, const Point3& v,
                                           const Vec3& n, int keep) {
  std::vector<Point3> out;
  size_t m = poly.size();
  if (m == 0) return out;
  std::vector<Rat> s(m);
  for (size_t i = 0; i < m; ++i) s[i] = line_side(u, v, n, poly[i]) * keep;
  for (size_t i = 0; i < m; ++i) {
    size_t j = (i + 1) % m;
    bool in_i = sgn(s[i]) >= 0;
    bool in_j = sgn(s[j]) >= 0;
    if (in_i) out.push_back(poly[i]);
    if (in_i != in_j && sgn(s[i]) != 0 && sgn(s[j]) != 0) {
      Rat t = s[i] / (s[i] - s[j]);
      out.push_back(poly[i] + (poly[j] - poly[i]) * t);
    }
  }
  return out;
}

std::vector<Point3> dedup(const std::vector<Point3>& pts) {
  std::vector<Point3> out;
  for (const auto& p : pts) push_unique(out, p);
  return out;
}

bool all_collinear(const std::vector<Point3>& pts) {
  if (pts.size() < 3) return true;
  for (size_t i = 2; i < pts.size(); ++i)
    if (!cross(pts[1] - pts[0], pts[i] - pts[0]).is_zero()) return false;
  return true;
}

// Extreme pair of a collinear point set.
std::pair<Point3, Point3> collinear_extremes(const std::vector<Point3>& pts) {
  Vec3 dir = pts[1] - pts[0];
  size_t lo = 0, hi = 0;
  Rat tlo = 0, thi = 0;
  for (size_t i = 1; i < pts.size(); ++i) {
    Rat t = dot(pts[i] - pts[0], dir);
    if (t < tlo) { tlo = t; lo = i; }
    if (t > thi) { thi = t; hi = i; }
  }
  return {pts[lo], pts[hi]};
}

TriContact classify_contact_set(const std::vector<Point3>& pts,
                                const Triangle& t1, const Triangle& t2) {
  if (pts.empty()) return TriContact::Disjoint;
  if (pts.size() == 1) {
    if (is_vertex_of(pts[0], t1) && is_vertex_of(pts[0], t2))
      return TriContact::SharedVertex;
    return TriContact::Improper;
  }
  // Collinear set: a segment. A full common edge means both endpoints are
  // vertices of both triangles (any vertex pair of a triangle is an edge).
  auto [a, b] = collinear_extremes(pts);
  if (is_vertex_of(a, t1) && is_vertex_of(a, t2) && is_vertex_of(b, t1) &&
      is_vertex_of(b, t2))
    return TriContact::SharedEdge;
  return TriContact::Improper;
}

}  // namespace

bool point_in_triangle(const Point3& p, const Triangle& t) {
  Vec3 n = tri_normal(t);
  if (sgn(dot(n, p - t[0])) != 0) return false;
  for (int i = 0; i < 3; ++i) {
    const Point3& u = t[i];
    const Point3& v = t[(i + 1) % 3];
    const Point3& w = t[(i + 2) % 3];
    Rat ref = line_side(u, v, n, w);
    Rat s = line_side(u, v, n, p);
    if (sgn(s) * sgn(ref) < 0) return false;
  }
  return true;
}

TriContact triangles_classify(const Triangle& t1, const Triangle& t2) {
  Vec3 n1 = tri_normal(t1);
  Vec3 n2 = tri_normal(t2);
  if (n1.is_zero() || n2.is_zero())
    fail(ErrorCode::DegenerateTriangle, "zero-area triangle");

  // Same point set, any order.
  if (is_vertex_of(t1[0], t2) && is_vertex_of(t1[1], t2) &&
      is_vertex_of(t1[2], t2) && is_vertex_of(t2[0], t1) &&
      is_vertex_of(t2[1], t1) && is_vertex_of(t2[2], t1))
    return TriContact::Identical;

  Rat d0 = dot(n2, t1[0] - t2[0]);
  Rat d1 = dot(n2, t1[1] - t2[0]);
  Rat d2 = dot(n2, t1[2] - t2[0]);
  int s0 = sgn(d0), s1 = sgn(d1), s2 = sgn(d2);

  if (s0 == 0 && s1 == 0 && s2 == 0) {
    // Coplanar: clip t1 against t2 and inspect the resulting region.
    std::vector<Point3> poly(t1.begin(), t1.end());
    for (int i = 0; i < 3; ++i) {
      const Point3& u = t2[i];
      const Point3& v = t2[(i + 1) % 3];
      const Point3& w = t2[(i + 2) % 3];
      int keep = sgn(line_side(u, v, n2, w));
      poly = clip_polygon_halfplane(poly, u, v, n2, keep);
      if (poly.empty()) return TriContact::Disjoint;
    }
    auto pts = dedup(poly);
    if (!all_collinear(pts)) return TriContact::Improper;  // area overlap
    return classify_contact_set(pts, t1, t2);
  }

  if (s0 > 0 && s1 > 0 && s2 > 0) return TriContact::Disjoint;
  if (s0 < 0 && s1 < 0 && s2 < 0) return TriContact::Disjoint;

  // t1 crosses or touches the plane of t2 in a point or segment.
  std::vector<Point3> span;
  std::array<Rat, 3> d = {d0, d1, d2};
  for (int i = 0; i < 3; ++i) {
    if (sgn(d[i]) == 0) push_unique(span, t1[i]);
    int j = (i + 1) % 3;
    if (sgn(d[i]) * sgn(d[j]) < 0) {
      Rat t = d[i] / (d[i] - d[j]);
      push_unique(span, t1[i] + (t1[j] - t1[i]) * t);
    }
  }
  // Clip the span (point or segment) to the closed triangle t2.
  std::vector<Point3> pts;
  if (span.size() == 1) {
    if (point_in_triangle(span[0], t2)) pts.push_back(span[0]);
  } else if (span.size() == 2) {
    std::vector<Point3> seg = span;
    for (int i = 0; i < 3 && seg.size() == 2; ++i) {
      const Point3& u = t2[i];
      const Point3& v = t2[(i + 1) % 3];
      const Point3& w = t2[(i + 2) % 3];
      int keep = sgn(line_side(u, v, n2, w));
      Rat sa = line_side(u, v, n2, seg[0]) * keep;
      Rat sb = line_side(u, v, n2, seg[1]) * keep;
      int ka = sgn(sa), kb = sgn(sb);
      if (ka < 0 && kb < 0) { seg.clear(); break; }
      if (ka < 0) seg[0] = seg[0] + (seg[1] - seg[0]) * (sa / (sa - sb));
      else if (kb < 0) seg[1] = seg[0] + (seg[1] - seg[0]) * (sa / (sa - sb));
    }
    pts = dedup(seg);
  }
  return classify_contact_set(pts, t1, t2);
}

namespace {

const int kTetFaces[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
const int kTetEdges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

struct Interval {
  Rat lo, hi;
  std::vector<int> at_lo, at_hi;  // vertex ids attaining the bounds
};

Interval project(const TetPoints& t, const Vec3& axis) {
  Interval iv;
  for (int i = 0; i < 4; ++i) {
    Rat v = dot(t[i], axis);
    if (i == 0) {
      iv.lo = v; iv.hi = v; iv.at_lo = {0}; iv.at_hi = {0};
      continue;
    }
    if (v < iv.lo) { iv.lo = v; iv.at_lo = {i}; }
    else if (v == iv.lo) iv.at_lo.push_back(i);
    if (v > iv.hi) { iv.hi = v; iv.at_hi = {i}; }
    else if (v == iv.hi) iv.at_hi.push_back(i);
  }
  return iv;
}

bool in_hull_flat(const Point3& p, const std::vector<Point3>& hull) {
  if (hull.size() == 1) return p == hull[0];
  if (hull.size() == 2) return point_on_segment(p, hull[0], hull[1]);
  return point_in_triangle(p, {hull[0], hull[1], hull[2]});
}

// Intersection points of two segments lying in a common plane with normal n.
// Only the transversal case is handled; collinear overlap is covered by the
// callers' endpoint membership checks.
void seg_seg_points(const Point3& p, const Point3& q, const Point3& r,
                    const Point3& s, const Vec3& n,
                    std::vector<Point3>& out) {
  Vec3 u = q - p, v = s - r, w = r - p;
  Rat denom = dot(cross(u, v), n);
  if (sgn(denom) == 0) return;
  Rat t = dot(cross(w, v), n) / denom;
  Rat tau = dot(cross(w, u), n) / denom;
  if (sgn(t) < 0 || t > 1 || sgn(tau) < 0 || tau > 1) return;
  push_unique(out, p + u * t);
}

std::vector<std::pair<int, int>> hull_edges(size_t k) {
  if (k == 2) return {{0, 1}};
  if (k == 3) return {{0, 1}, {1, 2}, {2, 0}};
  return {};
}

}  // namespace

TetContact tets_classify(const TetPoints& a, const TetPoints& b) {
  if (orient3d(a[0], a[1], a[2], a[3]) == 0)
    fail(ErrorCode::DegenerateTet, "first tetrahedron is flat");
  if (orient3d(b[0], b[1], b[2], b[3]) == 0)
    fail(ErrorCode::DegenerateTet, "second tetrahedron is flat");

  std::vector<Vec3> axes;
  for (auto& f : kTetFaces) {
    axes.push_back(cross(a[f[1]] - a[f[0]], a[f[2]] - a[f[0]]));
    axes.push_back(cross(b[f[1]] - b[f[0]], b[f[2]] - b[f[0]]));
  }
  for (auto& ea : kTetEdges)
    for (auto& eb : kTetEdges) {
      Vec3 d = cross(a[ea[1]] - a[ea[0]], b[eb[1]] - b[eb[0]]);
      if (!d.is_zero()) axes.push_back(d);
    }

  bool have_touch = false;
  std::vector<Point3> a_on, b_on;
  Vec3 touch_axis;
  for (const auto& axis : axes) {
    Interval ia = project(a, axis);
    Interval ib = project(b, axis);
    if (ia.hi < ib.lo || ib.hi < ia.lo) return TetContact::InteriorsDisjoint;
    if (!have_touch && (ia.hi == ib.lo || ib.hi == ia.lo)) {
      have_touch = true;
      touch_axis = axis;
      a_on.clear();
      b_on.clear();
      if (ia.hi == ib.lo) {
        for (int i : ia.at_hi) a_on.push_back(a[i]);
        for (int i : ib.at_lo) b_on.push_back(b[i]);
      } else {
        for (int i : ia.at_lo) a_on.push_back(a[i]);
        for (int i : ib.at_hi) b_on.push_back(b[i]);
      }
    }
  }
  if (!have_touch) return TetContact::ImproperOverlap;

  // Interiors are disjoint; the closed contact set lies in the touching
  // plane. Its extreme points come from hull vertices of one side inside
  // the other and transversal edge crossings.
  std::vector<Point3> contact;
  for (const auto& p : a_on)
    if (in_hull_flat(p, b_on)) push_unique(contact, p);
  for (const auto& p : b_on)
    if (in_hull_flat(p, a_on)) push_unique(contact, p);
  for (auto [i, j] : hull_edges(a_on.size()))
    for (auto [k, l] : hull_edges(b_on.size()))
      seg_seg_points(a_on[i], a_on[j], b_on[k], b_on[l], touch_axis, contact);

  if (contact.empty()) return TetContact::InteriorsDisjoint;
  if (contact.size() == 1) {
    return (is_vertex_of(contact[0], a) && is_vertex_of(contact[0], b))
               ? TetContact::InteriorsDisjoint
               : TetContact::ImproperOverlap;
  }
  if (contact.size() == 2) {
    for (const auto& p : contact)
      if (!is_vertex_of(p, a) || !is_vertex_of(p, b))
        return TetContact::ImproperOverlap;
    return TetContact::InteriorsDisjoint;
  }
  // Planar contact with at least three extreme points: proper only when the
  // two sides present the exact same face.
  if (a_on.size() == 3 && b_on.size() == 3) {
    bool same = true;
    for (const auto& p : a_on)
      if (!(p == b_on[0] || p == b_on[1] || p == b_on[2])) same = false;
    if (same) return TetContact::InteriorsDisjoint;
  }
  return TetContact::ImproperOverlap;
}

Location point_in_tet(const Point3& p, const TetPoints& t) {
  if (orient3d(t[0], t[1], t[2], t[3]) == 0)
    fail(ErrorCode::DegenerateTet, "flat tetrahedron");
  bool on_boundary = false;
  for (int i = 0; i < 4; ++i) {
    auto& f = kTetFaces[i];
    // Compare p's side of each face plane against the opposite vertex.
    int ref = orient3d(t[f[0]], t[f[1]], t[f[2]], t[i]);
    int s = orient3d(t[f[0]], t[f[1]], t[f[2]], p);
    if (s * ref < 0) return Location::Outside;
    if (s == 0) on_boundary = true;
  }
  return on_boundary ? Location::Boundary : Location::Inside;
}

bool convex_interiors_intersect(
    const std::vector<Point3>& a_pts,
    const std::vector<std::array<int, 3>>& a_faces,
    const std::vector<Point3>& b_pts,
    const std::vector<std::array<int, 3>>& b_faces) {
  auto proj = [](const std::vector<Point3>& pts, const Vec3& axis, Rat& lo,
                 Rat& hi) {
    lo = dot(pts[0], axis);
    hi = lo;
    for (size_t i = 1; i < pts.size(); ++i) {
      Rat v = dot(pts[i], axis);
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  };
  auto separated = [&](const Vec3& axis) {
    if (axis.is_zero()) return false;
    Rat alo, ahi, blo, bhi;
    proj(a_pts, axis, alo, ahi);
    proj(b_pts, axis, blo, bhi);
    return ahi <= blo || bhi <= alo;
  };
  for (const auto& f : a_faces)
    if (separated(cross(a_pts[f[1]] - a_pts[f[0]], a_pts[f[2]] - a_pts[f[0]])))
      return false;
  for (const auto& f : b_faces)
    if (separated(cross(b_pts[f[1]] - b_pts[f[0]], b_pts[f[2]] - b_pts[f[0]])))
      return false;
  for (const auto& fa : a_faces)
    for (int i = 0; i < 3; ++i) {
      Vec3 ea = a_pts[fa[(i + 1) % 3]] - a_pts[fa[i]];
      for (const auto& fb : b_faces)
        for (int j = 0; j < 3; ++j) {
          Vec3 eb = b_pts[fb[(j + 1) % 3]] - b_pts[fb[j]];
          if (separated(cross(ea, eb))) return false;
        }
    }
  return true;
}

}  // namespace toro
