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

#include "congraph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "errors.h"

namespace toro {

namespace {

std::array<int, 3> sorted_face(const Face& f) {
  std::array<int, 3> s = {f[0], f[1], f[2]};
  std::sort(s.begin(), s.end());
  return s;
}

ValidityReport bad(std::string reason) { return {false, std::move(reason)}; }

// Union-find style connectivity over an adjacency list.
bool dfs_connected(int n, const std::vector<std::vector<int>>& adj) {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

int component_count(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

}  // namespace

TriMesh piece_mesh(const TriMesh& mesh, const Piece& piece,
                   std::vector<int>* local_to_global) {
  TriMesh pm;
  pm.label = mesh.label + "/piece";
  pm.n_vertices = static_cast<int>(piece.vertices.size());
  std::map<int, int> g2l;
  for (size_t i = 0; i < piece.vertices.size(); ++i)
    g2l[piece.vertices[i]] = static_cast<int>(i);
  if (mesh.has_coords()) {
    std::vector<Point3> pts;
    pts.reserve(piece.vertices.size());
    for (int v : piece.vertices) {
      if (v < 0 || v >= mesh.n_vertices)
        fail(ErrorCode::ParseError, "piece vertex out of range");
      pts.push_back(mesh.pt(v));
    }
    pm.coords = std::move(pts);
  }
  for (const Face& f : piece.faces) {
    Face lf;
    for (int k = 0; k < 3; ++k) {
      auto it = g2l.find(f[k]);
      if (it == g2l.end())
        fail(ErrorCode::ParseError, "piece face uses vertex not in piece");
      lf[k] = it->second;
    }
    pm.faces.push_back(lf);
  }
  if (local_to_global) *local_to_global = piece.vertices;
  normalize_orientation(pm);
  return pm;
}

ValidityReport validate_decomposition(const TriMesh& mesh,
                                      const Decomposition& d,
                                      bool check_sharing_rule) {
  if (!mesh.has_coords())
    fail(ErrorCode::MissingCoordinates,
         "decomposition checks need an embedded mesh");
  if (d.pieces.empty()) return bad("decomposition has no pieces");

  const size_t np = d.pieces.size();
  std::vector<TriMesh> pms;
  pms.reserve(np);

  // Per-piece closedness and convexity.
  for (size_t i = 0; i < np; ++i) {
    const Piece& p = d.pieces[i];
    if (p.vertices.size() < 4)
      return bad("piece " + std::to_string(i) + " has fewer than 4 vertices");
    std::set<int> vs(p.vertices.begin(), p.vertices.end());
    if (vs.size() != p.vertices.size())
      return bad("piece " + std::to_string(i) + " repeats a vertex");
    TriMesh pm;
    try {
      pm = piece_mesh(mesh, p);
      SurfaceReport rep = validate(pm);
      if (!rep.genus || *rep.genus != 0)
        return bad("piece " + std::to_string(i) + " is not a sphere");
    } catch (const Error& e) {
      return bad("piece " + std::to_string(i) + ": " + e.what());
    }
    std::set<int> used;
    for (const Face& f : pm.faces) used.insert({f[0], f[1], f[2]});
    if (static_cast<int>(used.size()) != pm.n_vertices)
      return bad("piece " + std::to_string(i) + " has an unused vertex");
    // Supporting planes: no piece vertex strictly outside any face plane.
    for (size_t fi = 0; fi < pm.faces.size(); ++fi) {
      Triangle t = pm.face_points(static_cast<int>(fi));
      for (int v = 0; v < pm.n_vertices; ++v) {
        if (orient3d(t[0], t[1], t[2], pm.pt(v)) > 0)
          return bad("piece " + std::to_string(i) +
                     " is not convex: vertex outside face plane");
      }
    }
    pms.push_back(std::move(pm));
  }

  // Pairwise disjoint interiors.
  for (size_t i = 0; i < np; ++i)
    for (size_t j = i + 1; j < np; ++j) {
      std::vector<std::array<int, 3>> fi(pms[i].faces.begin(),
                                         pms[i].faces.end());
      std::vector<std::array<int, 3>> fj(pms[j].faces.begin(),
                                         pms[j].faces.end());
      if (convex_interiors_intersect(*pms[i].coords, fi, *pms[j].coords, fj))
        return bad("pieces " + std::to_string(i) + " and " +
                   std::to_string(j) + " have overlapping interiors");
    }

  // Exact volume partition.
  Rat total(0);
  for (const TriMesh& pm : pms) total += enclosed_volume6(pm);
  if (total != enclosed_volume6(mesh))
    return bad("piece volumes do not sum to the mesh volume");

  // Face matching: boundary faces in exactly one piece, other piece faces
  // (contact faces) in exactly two.
  std::set<std::array<int, 3>> boundary;
  for (const Face& f : mesh.faces) boundary.insert(sorted_face(f));
  std::map<std::array<int, 3>, int> count;
  for (const Piece& p : d.pieces)
    for (const Face& f : p.faces) ++count[sorted_face(f)];
  for (const auto& [f, c] : count) {
    bool on_boundary = boundary.count(f) > 0;
    if (on_boundary && c != 1)
      return bad("boundary face appears in " + std::to_string(c) + " pieces");
    if (!on_boundary && c != 2)
      return bad("contact face appears in " + std::to_string(c) +
                 " pieces instead of 2");
  }
  for (const auto& f : boundary)
    if (!count.count(f)) return bad("boundary face missing from all pieces");

  if (check_sharing_rule) {
    // Pieces meeting in an edge or vertex only must be joined through that
    // element by a chain of contact faces.
    auto pieces_with = [&](auto pred) {
      std::vector<int> out;
      for (size_t i = 0; i < np; ++i)
        if (pred(d.pieces[i])) out.push_back(static_cast<int>(i));
      return out;
    };
    // Collect shared elements: vertices and edges used by >= 2 pieces.
    std::map<int, std::vector<int>> vert_pieces;
    for (size_t i = 0; i < np; ++i)
      for (int v : d.pieces[i].vertices)
        vert_pieces[v].push_back(static_cast<int>(i));
    (void)pieces_with;
    for (const auto& [v, ps] : vert_pieces) {
      if (ps.size() < 2) continue;
      // Edges: contact faces containing v link two pieces.
      std::vector<std::vector<int>> adj(np);
      std::map<std::array<int, 3>, std::vector<int>> face_pieces;
      for (size_t i = 0; i < np; ++i)
        for (const Face& f : d.pieces[i].faces) {
          auto sf = sorted_face(f);
          if (sf[0] == v || sf[1] == v || sf[2] == v)
            face_pieces[sf].push_back(static_cast<int>(i));
        }
      for (const auto& [f, fps] : face_pieces)
        if (fps.size() == 2 && !boundary.count(f)) {
          adj[fps[0]].push_back(fps[1]);
          adj[fps[1]].push_back(fps[0]);
        }
      // All pieces at v must lie in one component of this local graph.
      std::vector<char> seen(np, 0);
      std::vector<int> stack = {ps[0]};
      seen[ps[0]] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : adj[x])
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      for (int pzz : ps)
        if (!seen[pzz])
          return bad("pieces share vertex " + std::to_string(v) +
                     " without a contact-face chain through it");
    }
  }

  return {true, ""};
}

ConnectionGraph build_graph(const Decomposition& d) {
  ConnectionGraph g;
  g.nodes = static_cast<int>(d.pieces.size());
  std::map<std::array<int, 3>, std::vector<int>> face_pieces;
  for (size_t i = 0; i < d.pieces.size(); ++i)
    for (const Face& f : d.pieces[i].faces)
      face_pieces[sorted_face(f)].push_back(static_cast<int>(i));
  std::set<std::pair<int, int>> seen;
  for (const auto& [f, ps] : face_pieces) {
    if (ps.size() != 2 || ps[0] == ps[1]) continue;
    int a = std::min(ps[0], ps[1]), b = std::max(ps[0], ps[1]);
    g.edges.push_back({a, b, f});
    seen.insert({a, b});
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const GraphEdge& x, const GraphEdge& y) {
              return std::tie(x.a, x.b, x.contact) <
                     std::tie(y.a, y.b, y.contact);
            });
  std::vector<std::vector<int>> adj(g.nodes);
  for (const GraphEdge& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  g.connected = dfs_connected(g.nodes, adj);
  int comps = component_count(g.nodes, adj);
  g.cycle_rank = static_cast<int>(g.edges.size()) - g.nodes + comps;
  return g;
}

bool is_single_cycle(const ConnectionGraph& g) {
  if (!g.connected || g.cycle_rank != 1) return false;
  std::vector<int> deg(g.nodes, 0);
  for (const GraphEdge& e : g.edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

ConnectionGraph graph_from_edges(int nodes,
                                 const std::vector<std::array<int, 2>>& edges) {
  ConnectionGraph g;
  g.nodes = nodes;
  for (const auto& e : edges) {
    if (e[0] < 0 || e[1] < 0 || e[0] >= nodes || e[1] >= nodes ||
        e[0] == e[1])
      fail(ErrorCode::ParseError, "bad graph edge");
    g.edges.push_back(
        {std::min(e[0], e[1]), std::max(e[0], e[1]), {-1, -1, -1}});
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const GraphEdge& x, const GraphEdge& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end(),
                            [](const GraphEdge& x, const GraphEdge& y) {
                              return x.a == y.a && x.b == y.b;
                            }),
                g.edges.end());
  std::vector<std::vector<int>> adj(nodes);
  for (const GraphEdge& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  g.connected = dfs_connected(nodes, adj);
  g.cycle_rank =
      static_cast<int>(g.edges.size()) - nodes + component_count(nodes, adj);
  return g;
}

bool graphs_isomorphic(const ConnectionGraph& a, const ConnectionGraph& b) {
  if (a.nodes != b.nodes || a.edges.size() != b.edges.size()) return false;
  int n = a.nodes;
  std::set<std::pair<int, int>> eb;
  for (const GraphEdge& e : b.edges) eb.insert({e.a, e.b});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const GraphEdge& e : a.edges) {
      int x = std::min(perm[e.a], perm[e.b]);
      int y = std::max(perm[e.a], perm[e.b]);
      if (!eb.count({x, y})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

MDivision check_m_division(const TriMesh& mesh, const Decomposition& d,
                           std::uint64_t budget) {
  ValidityReport vr = validate_decomposition(mesh, d);
  if (!vr.valid) fail(ErrorCode::NotConvexPiece, vr.reason);

  long piece_sum = 0;
  std::vector<Tet> combined;
  for (const Piece& p : d.pieces) {
    TriMesh pm = piece_mesh(mesh, p);
    SearchResult r = search(pm, SearchMode::Exhaustive, budget);
    if (r.status == SearchStatus::BudgetExceeded) return MDivision::Undecided;
    if (r.status != SearchStatus::Exhausted || !r.t_min)
      fail(ErrorCode::Internal, "convex piece admits no triangulation");
    piece_sum += *r.t_min;
    for (const Tet& t : r.witness_min->tets)
      combined.emplace_back(p.vertices[t.v[0]], p.vertices[t.v[1]],
                            p.vertices[t.v[2]], p.vertices[t.v[3]]);
  }

  // The combined piece witnesses triangulate the whole, so the true minimum
  // is at most piece_sum; equal to the genus floor it is settled at once.
  ValidityReport cv = is_valid_triangulation(mesh, combined);
  if (!cv.valid)
    fail(ErrorCode::Internal,
         "piece triangulations do not combine: " + cv.reason);
  SurfaceReport rep = validate(mesh);
  if (rep.genus && piece_sum == lower_bound_tets(mesh.n_vertices, *rep.genus))
    return MDivision::MDiv;

  SearchResult whole = search(mesh, SearchMode::Exhaustive, budget);
  if (whole.status == SearchStatus::BudgetExceeded) return MDivision::Undecided;
  if (whole.status != SearchStatus::Exhausted || !whole.t_min)
    fail(ErrorCode::Internal, "whole mesh admits no triangulation");
  return piece_sum == *whole.t_min ? MDivision::MDiv : MDivision::NotMDiv;
}

Decomposition tets_as_decomposition(const TriMesh& mesh,
                                    const Triangulation& tri) {
  Decomposition d;
  d.mesh_label = mesh.label;
  for (const Tet& t : tri.tets) {
    Piece p;
    p.vertices = {t.v[0], t.v[1], t.v[2], t.v[3]};
    p.faces = {{t.v[0], t.v[1], t.v[2]},
               {t.v[0], t.v[1], t.v[3]},
               {t.v[0], t.v[2], t.v[3]},
               {t.v[1], t.v[2], t.v[3]}};
    d.pieces.push_back(std::move(p));
  }
  return d;
}

}  // namespace toro
