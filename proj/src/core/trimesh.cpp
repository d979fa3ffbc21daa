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

#include "trimesh.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "errors.h"

namespace toro {

const Point3& TriMesh::pt(int i) const {
  if (!coords) fail(ErrorCode::MissingCoordinates, "mesh '" + label + "'");
  return (*coords)[i];
}

Triangle TriMesh::face_points(int f) const {
  return {pt(faces[f][0]), pt(faces[f][1]), pt(faces[f][2])};
}

namespace {

std::array<int, 2> und(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}

struct EdgeUse {
  int count = 0;
  int forward = 0;  // times traversed as (lo, hi)
  std::vector<int> faces;
};

std::map<std::array<int, 2>, EdgeUse> edge_map(const TriMesh& mesh) {
  std::map<std::array<int, 2>, EdgeUse> edges;
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    const Face& face = mesh.faces[f];
    for (int i = 0; i < 3; ++i) {
      int a = face[i], b = face[(i + 1) % 3];
      EdgeUse& e = edges[und(a, b)];
      e.count++;
      if (a < b) e.forward++;
      e.faces.push_back(static_cast<int>(f));
    }
  }
  return edges;
}

std::string edge_str(const std::array<int, 2>& e) {
  return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")";
}

}  // namespace

std::vector<std::array<int, 2>> mesh_edges(const TriMesh& mesh) {
  std::vector<std::array<int, 2>> out;
  for (const auto& [e, use] : edge_map(mesh)) out.push_back(e);
  return out;
}

SurfaceReport validate(const TriMesh& mesh) {
  if (mesh.faces.empty())
    fail(ErrorCode::ParseError, "mesh '" + mesh.label + "' has no faces");

  std::set<std::array<int, 3>> seen;
  for (const Face& f : mesh.faces) {
    for (int v : f)
      if (v < 0 || v >= mesh.n_vertices)
        fail(ErrorCode::ParseError,
             "face index " + std::to_string(v) + " out of range");
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
      fail(ErrorCode::DegenerateTriangle,
           "face with repeated vertex index");
    std::array<int, 3> key = {f[0], f[1], f[2]};
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second)
      fail(ErrorCode::NotManifold, "duplicate face over vertices " +
                                       std::to_string(key[0]) + "," +
                                       std::to_string(key[1]) + "," +
                                       std::to_string(key[2]));
  }

  if (mesh.has_coords()) {
    const auto& pts = *mesh.coords;
    if (static_cast<int>(pts.size()) != mesh.n_vertices)
      fail(ErrorCode::ParseError, "coordinate count mismatch");
    for (int i = 0; i < mesh.n_vertices; ++i)
      for (int j = i + 1; j < mesh.n_vertices; ++j)
        if (pts[i] == pts[j])
          fail(ErrorCode::DuplicateVertex,
               "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                   " coincide");
    for (size_t f = 0; f < mesh.faces.size(); ++f) {
      Triangle t = mesh.face_points(static_cast<int>(f));
      if (cross(t[1] - t[0], t[2] - t[0]).is_zero())
        fail(ErrorCode::DegenerateTriangle,
             "face " + std::to_string(f) + " has zero area");
    }
  }

  auto edges = edge_map(mesh);
  for (const auto& [e, use] : edges) {
    if (use.count == 1)
      fail(ErrorCode::NotClosed, "edge " + edge_str(e) + " lies in one face");
    if (use.count > 2)
      fail(ErrorCode::NotManifold,
           "edge " + edge_str(e) + " lies in " + std::to_string(use.count) +
               " faces");
    if (use.forward != 1)
      fail(ErrorCode::NotOrientable,
           "edge " + edge_str(e) + " traversed twice in the same direction");
  }

  // Vertex links must be single cycles.
  std::vector<std::vector<std::array<int, 2>>> link(mesh.n_vertices);
  for (const Face& f : mesh.faces)
    for (int i = 0; i < 3; ++i)
      link[f[i]].push_back({f[(i + 1) % 3], f[(i + 2) % 3]});
  for (int v = 0; v < mesh.n_vertices; ++v) {
    const auto& around = link[v];
    if (around.empty())
      fail(ErrorCode::NotManifold,
           "vertex " + std::to_string(v) + " lies in no face");
    std::map<int, int> degree;
    for (const auto& seg : around) {
      degree[seg[0]]++;
      degree[seg[1]]++;
    }
    for (const auto& [u, d] : degree)
      if (d != 2)
        fail(ErrorCode::NotManifold,
             "link of vertex " + std::to_string(v) + " is not a cycle");
    // Connectivity of the link.
    std::map<int, std::vector<int>> adj;
    for (const auto& seg : around) {
      adj[seg[0]].push_back(seg[1]);
      adj[seg[1]].push_back(seg[0]);
    }
    std::set<int> seen_link;
    std::vector<int> stack = {around[0][0]};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (!seen_link.insert(u).second) continue;
      for (int w : adj[u]) stack.push_back(w);
    }
    if (seen_link.size() != degree.size())
      fail(ErrorCode::NotManifold,
           "link of vertex " + std::to_string(v) + " is disconnected");
  }

  SurfaceReport r;
  r.vertices = mesh.n_vertices;
  r.edges = static_cast<int>(edges.size());
  r.face_count = static_cast<int>(mesh.faces.size());
  r.euler_characteristic = r.vertices - r.edges + r.face_count;
  r.manifold = true;
  r.orientable = true;
  r.genus = (2 - r.euler_characteristic) / 2;
  return r;
}

void normalize_orientation(TriMesh& mesh) {
  // Propagate a consistent orientation across shared edges.
  std::map<std::array<int, 2>, std::vector<int>> efaces;
  for (size_t f = 0; f < mesh.faces.size(); ++f)
    for (int i = 0; i < 3; ++i)
      efaces[und(mesh.faces[f][i], mesh.faces[f][(i + 1) % 3])].push_back(
          static_cast<int>(f));
  for (const auto& [e, fs] : efaces)
    if (fs.size() != 2) return;  // broken structure; validate will report

  auto traverses_forward = [&](int f, const std::array<int, 2>& e) {
    const Face& face = mesh.faces[f];
    for (int i = 0; i < 3; ++i)
      if (face[i] == e[0] && face[(i + 1) % 3] == e[1]) return true;
    return false;
  };

  int n_faces = static_cast<int>(mesh.faces.size());
  std::vector<int> state(n_faces, -1);  // -1 unvisited, 0 keep, 1 flip
  for (int seed = 0; seed < n_faces; ++seed) {
    if (state[seed] != -1) continue;
    state[seed] = 0;
    std::vector<int> stack = {seed};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      const Face& face = mesh.faces[f];
      for (int i = 0; i < 3; ++i) {
        auto e = und(face[i], face[(i + 1) % 3]);
        for (int g : efaces[e]) {
          if (g == f || state[g] != -1) continue;
          bool same = traverses_forward(f, e) == traverses_forward(g, e);
          // Consistent neighbours traverse a shared edge oppositely.
          bool f_flipped = state[f] == 1;
          bool g_flipped = same ? !f_flipped : f_flipped;
          state[g] = g_flipped ? 1 : 0;
          stack.push_back(g);
        }
      }
    }
  }
  for (int f = 0; f < n_faces; ++f)
    if (state[f] == 1) std::swap(mesh.faces[f][1], mesh.faces[f][2]);

  if (mesh.has_coords()) {
    Rat total = 0;
    for (size_t f = 0; f < mesh.faces.size(); ++f) {
      Triangle t = mesh.face_points(static_cast<int>(f));
      total += dot(t[0], cross(t[1], t[2]));
    }
    if (sgn(total) < 0)
      for (Face& face : mesh.faces) std::swap(face[1], face[2]);
  }
}

Rat enclosed_volume6(const TriMesh& mesh) {
  if (!mesh.has_coords())
    fail(ErrorCode::MissingCoordinates, "volume of abstract mesh");
  Rat total = 0;
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    Triangle t = mesh.face_points(static_cast<int>(f));
    total += dot(t[0], cross(t[1], t[2]));
  }
  return abs(total);
}

EmbeddingReport is_embedded(const TriMesh& mesh) {
  if (!mesh.has_coords())
    fail(ErrorCode::MissingCoordinates, "embedding of abstract mesh");
  EmbeddingReport rep;
  int nf = static_cast<int>(mesh.faces.size());
  for (int a = 0; a < nf; ++a) {
    Triangle ta = mesh.face_points(a);
    for (int b = a + 1; b < nf; ++b) {
      Triangle tb = mesh.face_points(b);
      int shared = 0;
      for (int i : mesh.faces[a])
        for (int j : mesh.faces[b])
          if (i == j) shared++;
      TriContact c = triangles_classify(ta, tb);
      bool ok = (shared == 0 && c == TriContact::Disjoint) ||
                (shared == 1 && c == TriContact::SharedVertex) ||
                (shared == 2 && c == TriContact::SharedEdge);
      if (!ok) {
        rep.embedded = false;
        rep.face_a = a;
        rep.face_b = b;
        rep.detail = "faces " + std::to_string(a) + " and " +
                     std::to_string(b) + " share " + std::to_string(shared) +
                     " indices but meet otherwise";
        return rep;
      }
    }
  }
  return rep;
}

Location point_in_solid(const TriMesh& mesh, const Point3& p) {
  if (!mesh.has_coords())
    fail(ErrorCode::MissingCoordinates, "point query on abstract mesh");
  int nf = static_cast<int>(mesh.faces.size());
  for (int f = 0; f < nf; ++f)
    if (point_in_triangle(p, mesh.face_points(f))) return Location::Boundary;

  for (int k = 1; k <= 64; ++k) {
    Vec3 d(1, k, Rat(k) * k);
    bool degenerate = false;
    int crossings = 0;
    for (int f = 0; f < nf && !degenerate; ++f) {
      Triangle t = mesh.face_points(f);
      Vec3 n = cross(t[1] - t[0], t[2] - t[0]);
      Rat denom = dot(n, d);
      if (sgn(denom) == 0) {
        if (sgn(dot(n, p - t[0])) == 0) degenerate = true;
        continue;
      }
      Rat tt = dot(n, t[0] - p) / denom;
      if (sgn(tt) <= 0) continue;
      Point3 x = p + d * tt;
      // Strict interior hit counts; touching an edge retries the cast.
      bool inside = true, on_rim = false;
      for (int i = 0; i < 3 && inside; ++i) {
        Rat ref = dot(cross(t[(i + 1) % 3] - t[i], n), t[(i + 2) % 3] - t[i]);
        Rat s = dot(cross(t[(i + 1) % 3] - t[i], n), x - t[i]);
        int prod = sgn(s) * sgn(ref);
        if (prod < 0) inside = false;
        else if (sgn(s) == 0) on_rim = true;
      }
      if (!inside) continue;
      if (on_rim) { degenerate = true; continue; }
      crossings++;
    }
    if (!degenerate) return (crossings % 2 == 1) ? Location::Inside
                                                 : Location::Outside;
  }
  fail(ErrorCode::Internal, "no valid ray direction found");
}

bool edge_graph_is_complete(const TriMesh& mesh) {
  auto edges = mesh_edges(mesh);
  long n = mesh.n_vertices;
  return static_cast<long>(edges.size()) == n * (n - 1) / 2;
}

namespace {

std::vector<std::string> tokenize_off(const std::string& text,
                                      std::string& label_out) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::string comment = line.substr(hash + 1);
      auto lpos = comment.find("label:");
      if (lpos != std::string::npos) {
        std::string lbl = comment.substr(lpos + 6);
        size_t s = lbl.find_first_not_of(" \t");
        size_t e = lbl.find_last_not_of(" \t\r");
        if (s != std::string::npos) label_out = lbl.substr(s, e - s + 1);
      }
      line = line.substr(0, hash);
    }
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

long parse_count(const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError,
         std::string("bad ") + what + " '" + tok + "'");
  }
}

}  // namespace

TriMesh parse_off(const std::string& text, bool fan_polygons) {
  TriMesh mesh;
  std::string label;
  auto tokens = tokenize_off(text, label);
  size_t i = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (i >= tokens.size())
      fail(ErrorCode::ParseError, std::string("unexpected end of file, expected ") + what);
    return tokens[i++];
  };

  std::string header = next("header");
  bool abstract = header == "AOFF";
  if (!abstract && header != "OFF")
    fail(ErrorCode::ParseError, "expected OFF or AOFF header, got '" + header + "'");

  long nv = parse_count(next("vertex count"), "vertex count");
  long nfaces = parse_count(next("face count"), "face count");
  parse_count(next("edge count"), "edge count");  // may be 0 = unspecified

  mesh.n_vertices = static_cast<int>(nv);
  mesh.label = label;
  if (!abstract) {
    std::vector<Point3> pts;
    pts.reserve(nv);
    for (long v = 0; v < nv; ++v) {
      Rat c[3];
      for (int k = 0; k < 3; ++k) {
        const std::string& tok = next("coordinate");
        auto r = rat_parse(tok);
        if (!r) fail(ErrorCode::ParseError, "bad coordinate '" + tok + "'");
        c[k] = *r;
      }
      pts.push_back({c[0], c[1], c[2]});
    }
    mesh.coords = std::move(pts);
  }
  for (long f = 0; f < nfaces; ++f) {
    long arity = parse_count(next("face arity"), "face arity");
    std::vector<int> idx;
    for (long k = 0; k < arity; ++k) {
      long v = parse_count(next("face index"), "face index");
      if (v >= nv) fail(ErrorCode::ParseError, "face index out of range");
      idx.push_back(static_cast<int>(v));
    }
    if (arity == 3) {
      mesh.faces.push_back({idx[0], idx[1], idx[2]});
    } else if (arity > 3 && fan_polygons && !abstract) {
      // Planar convex polygon: fan from the first vertex.
      for (long k = 1; k + 1 < arity; ++k)
        mesh.faces.push_back({idx[0], idx[k], idx[k + 1]});
    } else {
      fail(ErrorCode::NonTriangularFace,
           "face with " + std::to_string(arity) + " vertices");
    }
  }
  normalize_orientation(mesh);
  return mesh;
}

std::string write_off(const TriMesh& mesh) {
  std::ostringstream out;
  if (!mesh.label.empty()) out << "# label: " << mesh.label << "\n";
  out << (mesh.has_coords() ? "OFF" : "AOFF") << "\n";
  size_t e2 = mesh.faces.size() * 3;
  out << mesh.n_vertices << " " << mesh.faces.size() << " "
      << (e2 % 2 == 0 ? e2 / 2 : 0) << "\n";
  if (mesh.has_coords())
    for (const Point3& p : *mesh.coords)
      out << rat_str(p.x) << " " << rat_str(p.y) << " " << rat_str(p.z)
          << "\n";
  for (const Face& f : mesh.faces)
    out << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
  return out.str();
}

bool meshes_equal(const TriMesh& a, const TriMesh& b) {
  if (a.n_vertices != b.n_vertices || a.faces != b.faces ||
      a.label != b.label)
    return false;
  if (a.has_coords() != b.has_coords()) return false;
  if (a.has_coords() && !(*a.coords == *b.coords)) return false;
  return true;
}

}  // namespace toro
