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
// Convex decompositions and their graphs of connection: one node per convex
// piece, one edge per triangular contact face. The cycle rank of the graph
// reflects the genus of the decomposed solid.

#pragma once

#include <cstdint>

#include "engine.h"
#include "trimesh.h"

namespace toro {

struct Piece {
  std::vector<int> vertices;  // mesh vertex indices
  std::vector<Face> faces;    // full boundary, contact faces included
};

struct Decomposition {
  std::string mesh_label;
  std::vector<Piece> pieces;
};

struct GraphEdge {
  int a, b;
  std::array<int, 3> contact;  // sorted contact-face vertices (or -1s)
};

struct ConnectionGraph {
  int nodes = 0;
  std::vector<GraphEdge> edges;
  bool connected = false;
  int cycle_rank = 0;  // E - V + number of components
};

// Checks the decomposition invariants: convex closed pieces, pairwise
// disjoint interiors, exact volume partition, and contact/boundary face
// matching. With check_sharing_rule set, additionally checks that pieces
// sharing an edge or vertex without being neighbours are linked by a chain
// of contact faces through that element.
ValidityReport validate_decomposition(const TriMesh& mesh,
                                      const Decomposition& d,
                                      bool check_sharing_rule = false);

// The piece mesh of one decomposition piece, with coordinates when the
// parent mesh has them. local_to_global receives the piece's index map.
TriMesh piece_mesh(const TriMesh& mesh, const Piece& piece,
                   std::vector<int>* local_to_global = nullptr);

ConnectionGraph build_graph(const Decomposition& d);

// Connected, every node of degree 2, cycle rank 1.
bool is_single_cycle(const ConnectionGraph& g);

// Graph from raw node/edge data (fixture files carry no geometry).
ConnectionGraph graph_from_edges(int nodes,
                                 const std::vector<std::array<int, 2>>& edges);

// True iff the two graphs are isomorphic (brute force; fixture scale only).
bool graphs_isomorphic(const ConnectionGraph& a, const ConnectionGraph& b);

enum class MDivision { MDiv, NotMDiv, Undecided };

// m-division: the pieces' minimal triangulations together form a minimal
// triangulation of the whole. Piece minima come from exhaustive search;
// the whole-mesh minimum is settled by the genus bound or by exhaustive
// search within the budget.
MDivision check_m_division(const TriMesh& mesh, const Decomposition& d,
                           std::uint64_t budget = kDefaultBudget);

// The decomposition of a mesh into the tets of a triangulation.
Decomposition tets_as_decomposition(const TriMesh& mesh,
                                    const Triangulation& tri);

}  // namespace toro
