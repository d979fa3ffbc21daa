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
// Test-only reference enumerator: finds every 3-triangulation by naive
// subset recursion over the candidate tetrahedra, independently of the
// engine's advancing-front search. Usable only at toy sizes.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "core/engine.h"
#include "core/trimesh.h"

namespace toro_test {

struct OracleResult {
  std::uint64_t count = 0;
  int t_min = -1;
  int t_max = -1;
  std::vector<std::vector<toro::Tet>> triangulations;
};

inline OracleResult oracle_enumerate(const toro::TriMesh& mesh) {
  using namespace toro;
  OracleResult res;
  std::vector<Tet> cand = candidate_tets(mesh);
  const size_t n = cand.size();
  std::vector<Rat> vol(n);
  std::vector<std::vector<char>> compat(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    TetPoints ti = {mesh.pt(cand[i].v[0]), mesh.pt(cand[i].v[1]),
                    mesh.pt(cand[i].v[2]), mesh.pt(cand[i].v[3])};
    vol[i] = abs(tet_volume6(ti[0], ti[1], ti[2], ti[3]));
    for (size_t j = i + 1; j < n; ++j) {
      TetPoints tj = {mesh.pt(cand[j].v[0]), mesh.pt(cand[j].v[1]),
                      mesh.pt(cand[j].v[2]), mesh.pt(cand[j].v[3])};
      compat[i][j] = compat[j][i] =
          tets_classify(ti, tj) == TetContact::InteriorsDisjoint;
    }
  }
  const Rat total = enclosed_volume6(mesh);
  std::vector<Tet> cur;
  std::vector<size_t> curi;
  std::function<void(size_t, Rat)> rec = [&](size_t start, Rat acc) {
    if (acc == total) {
      if (is_valid_triangulation(mesh, cur).valid) {
        res.triangulations.push_back(cur);
        int sz = static_cast<int>(cur.size());
        if (res.count == 0 || sz < res.t_min) res.t_min = sz;
        if (res.count == 0 || sz > res.t_max) res.t_max = sz;
        ++res.count;
      }
      return;
    }
    for (size_t i = start; i < n; ++i) {
      if (acc + vol[i] > total) continue;
      bool ok = true;
      for (size_t j : curi) ok = ok && compat[j][i];
      if (!ok) continue;
      cur.push_back(cand[i]);
      curi.push_back(i);
      rec(i + 1, acc + vol[i]);
      cur.pop_back();
      curi.pop_back();
    }
  };
  rec(0, Rat(0));
  return res;
}

}  // namespace toro_test
