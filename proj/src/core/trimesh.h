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
// Closed orientable triangulated surfaces. Coordinates are optional: a mesh
// without them is a purely combinatorial complex and refuses geometric
// queries.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geometry.h"
#include "predicates.h"

namespace toro {

using Face = std::array<int, 3>;

struct TriMesh {
  int n_vertices = 0;
  std::optional<std::vector<Point3>> coords;
  std::vector<Face> faces;
  std::string label;

  bool has_coords() const { return coords.has_value(); }
  const Point3& pt(int i) const;
  Triangle face_points(int f) const;
};

struct SurfaceReport {
  int vertices = 0;
  int edges = 0;
  int face_count = 0;
  int euler_characteristic = 0;
  std::optional<int> genus;
  bool manifold = false;
  bool orientable = false;
  std::optional<bool> embedded;
  std::optional<Rat> volume6;
};

// Structural validation: closed manifold, consistent orientation, single-cycle
// vertex links, nondegenerate faces, no duplicate coordinates. Throws
// NotClosed / NotManifold / NotOrientable / DegenerateTriangle /
// DuplicateVertex naming the offending element.
SurfaceReport validate(const TriMesh& mesh);

// Flips faces into a globally consistent orientation (outward, positive
// enclosed volume when coordinates are present). No-op on meshes whose edge
// structure is broken; validate reports those.
void normalize_orientation(TriMesh& mesh);

struct EmbeddingReport {
  bool embedded = true;
  int face_a = -1, face_b = -1;  // first offending pair
  std::string detail;
};

// True iff every face pair meets exactly as its shared indices dictate.
EmbeddingReport is_embedded(const TriMesh& mesh);

// 6x enclosed volume, positive; orientation is normalized by the caller at
// construction/load time.
Rat enclosed_volume6(const TriMesh& mesh);

// Exact ray-cast parity with automatic re-casting on degenerate hits.
Location point_in_solid(const TriMesh& mesh, const Point3& p);

// True iff every vertex pair is an edge of some face.
bool edge_graph_is_complete(const TriMesh& mesh);

// R-OFF / AOFF text format. When fan_polygons is set, planar convex faces
// with more than three vertices are fan-triangulated on import instead of
// raising NonTriangularFace.
TriMesh parse_off(const std::string& text, bool fan_polygons = false);
std::string write_off(const TriMesh& mesh);

bool meshes_equal(const TriMesh& a, const TriMesh& b);

// Sorted undirected edge list.
std::vector<std::array<int, 2>> mesh_edges(const TriMesh& mesh);

}  // namespace toro
