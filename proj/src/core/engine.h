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
// Enumeration, verification and exhaustive search of 3-triangulations
// (tetrahedral partitions on original vertices only).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trimesh.h"

namespace toro {

// A tetrahedron as four sorted vertex indices of a reference mesh.
struct Tet {
  std::array<int, 4> v;

  Tet() : v{0, 0, 0, 0} {}
  Tet(int a, int b, int c, int d);
  auto operator<=>(const Tet&) const = default;
};

struct Triangulation {
  std::string mesh_label;
  std::vector<Tet> tets;  // sorted, duplicate-free

  static Triangulation of(const std::string& label, std::vector<Tet> ts);
  size_t size() const { return tets.size(); }
};

// All 4-subsets of mesh vertices whose closed tetrahedron lies inside the
// closed solid (inner tetrahedra). Requires an embedded mesh with
// coordinates.
std::vector<Tet> candidate_tets(const TriMesh& mesh);

// Single-tet membership test behind candidate_tets.
bool is_inner_tet(const TriMesh& mesh, const Tet& t);

struct ValidityReport {
  bool valid = true;
  std::string reason;
};

// A set of tets is a 3-triangulation iff every tet is inner, all pairs have
// disjoint interiors meeting conformally, volumes sum exactly to the
// enclosed volume, and every boundary face is a face of exactly one tet.
ValidityReport is_valid_triangulation(const TriMesh& mesh,
                                      const std::vector<Tet>& tets);

enum class SearchStatus { Found, Exhausted, NotTriangulable, BudgetExceeded };
enum class SearchMode { Any, Exhaustive };

struct SearchResult {
  SearchStatus status = SearchStatus::NotTriangulable;
  std::optional<int> t_min;
  std::optional<int> t_max;
  std::optional<std::uint64_t> n_triangulations;
  std::optional<Triangulation> witness_min;
  std::optional<Triangulation> witness_max;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Deterministic advancing-front backtracking over the candidate set: always
// branch on the lexicographically least open triangle. Exhaustive mode
// enumerates every triangulation (as a set of tets) exactly once.
SearchResult search(const TriMesh& mesh, SearchMode mode,
                    std::uint64_t budget = kDefaultBudget);

// n + 3(p-1): the floor on tetrahedron count for a genus-p surface with n
// vertices; n-3 in the simply connected case.
long lower_bound_tets(long n, long p);

enum class Certification { ProvenMinimal, ValidButUnproven };

// ProvenMinimal iff the witness validates and meets the genus bound exactly.
Certification certify_minimal(const TriMesh& mesh,
                              const Triangulation& witness);

}  // namespace toro
