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

#include "engine.h"

#include <algorithm>
#include <map>
#include <set>

#include "errors.h"

namespace toro {

Tet::Tet(int a, int b, int c, int d) : v{a, b, c, d} {
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2] || v[2] == v[3])
    fail(ErrorCode::BadParams, "tet indices must be distinct");
}

Triangulation Triangulation::of(const std::string& label,
                                std::vector<Tet> ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return Triangulation{label, std::move(ts)};
}

namespace {

using Tri = std::array<int, 3>;

Tri sorted_tri(int a, int b, int c) {
  Tri t = {a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::array<Tri, 4> tet_faces(const Tet& t) {
  return {sorted_tri(t.v[1], t.v[2], t.v[3]), sorted_tri(t.v[0], t.v[2], t.v[3]),
          sorted_tri(t.v[0], t.v[1], t.v[3]), sorted_tri(t.v[0], t.v[1], t.v[2])};
}

TetPoints tet_points(const TriMesh& mesh, const Tet& t) {
  return {mesh.pt(t.v[0]), mesh.pt(t.v[1]), mesh.pt(t.v[2]), mesh.pt(t.v[3])};
}

std::string tet_str(const Tet& t) {
  return "(" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
         std::to_string(t.v[2]) + "," + std::to_string(t.v[3]) + ")";
}

}  // namespace

bool is_inner_tet(const TriMesh& mesh, const Tet& t) {
  if (!mesh.has_coords())
    fail(ErrorCode::MissingCoordinates, "inner-tet test on abstract mesh");
  for (int i : t.v)
    if (i < 0 || i >= mesh.n_vertices)
      fail(ErrorCode::BadParams, "tet index out of range");
  TetPoints pts = tet_points(mesh, t);
  if (orient3d(pts[0], pts[1], pts[2], pts[3]) == 0) return false;

  // The tet boundary may not cross the surface.
  std::array<Triangle, 4> tf = {
      Triangle{pts[1], pts[2], pts[3]}, Triangle{pts[0], pts[2], pts[3]},
      Triangle{pts[0], pts[1], pts[3]}, Triangle{pts[0], pts[1], pts[2]}};
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    Triangle mf = mesh.face_points(static_cast<int>(f));
    for (const Triangle& face : tf)
      if (triangles_classify(face, mf) == TriContact::Improper) return false;
  }

  Point3 centroid = (pts[0] + pts[1] + pts[2] + pts[3]) * Rat(1, 4);
  if (point_in_solid(mesh, centroid) == Location::Outside) return false;

  // A tet swallowing an original vertex can never take part in a partition.
  for (int i = 0; i < mesh.n_vertices; ++i) {
    if (i == t.v[0] || i == t.v[1] || i == t.v[2] || i == t.v[3]) continue;
    if (point_in_tet(mesh.pt(i), pts) == Location::Inside) return false;
  }
  return true;
}

std::vector<Tet> candidate_tets(const TriMesh& mesh) {
  if (!mesh.has_coords())
    fail(ErrorCode::MissingCoordinates, "candidate tets of abstract mesh");
  std::vector<Tet> out;
  int n = mesh.n_vertices;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          Tet t(a, b, c, d);
          if (is_inner_tet(mesh, t)) out.push_back(t);
        }
  return out;
}

ValidityReport is_valid_triangulation(const TriMesh& mesh,
                                      const std::vector<Tet>& tets) {
  ValidityReport rep;
  auto bad = [&](const std::string& why) {
    rep.valid = false;
    rep.reason = why;
    return rep;
  };
  if (tets.empty()) return bad("empty tet set");

  for (const Tet& t : tets)
    if (!is_inner_tet(mesh, t)) return bad("tet " + tet_str(t) + " is not inner");

  for (size_t i = 0; i < tets.size(); ++i)
    for (size_t j = i + 1; j < tets.size(); ++j) {
      if (tets[i] == tets[j]) return bad("duplicate tet " + tet_str(tets[i]));
      if (tets_classify(tet_points(mesh, tets[i]),
                        tet_points(mesh, tets[j])) ==
          TetContact::ImproperOverlap)
        return bad("tets " + tet_str(tets[i]) + " and " + tet_str(tets[j]) +
                   " overlap improperly");
    }

  Rat total = 0;
  for (const Tet& t : tets) {
    TetPoints p = tet_points(mesh, t);
    total += abs(tet_volume6(p[0], p[1], p[2], p[3]));
  }
  if (total != enclosed_volume6(mesh))
    return bad("tet volumes sum to " + rat_str(total) + ", solid encloses " +
               rat_str(enclosed_volume6(mesh)));

  std::map<Tri, int> cover;
  for (const Tet& t : tets)
    for (const Tri& f : tet_faces(t)) cover[f]++;
  for (const Face& f : mesh.faces) {
    Tri key = sorted_tri(f[0], f[1], f[2]);
    if (cover[key] != 1)
      return bad("boundary face (" + std::to_string(key[0]) + "," +
                 std::to_string(key[1]) + "," + std::to_string(key[2]) +
                 ") is a face of " + std::to_string(cover[key]) + " tets");
  }
  return rep;
}

namespace {

class FrontSearch {
 public:
  FrontSearch(const TriMesh& mesh, SearchMode mode, std::uint64_t budget)
      : mesh_(mesh), mode_(mode), budget_(budget) {
    cands_ = candidate_tets(mesh);
    total_ = enclosed_volume6(mesh);
    for (const Face& f : mesh.faces)
      boundary_.insert(sorted_tri(f[0], f[1], f[2]));
    for (size_t i = 0; i < cands_.size(); ++i) {
      TetPoints p = tet_points(mesh, cands_[i]);
      vols_.push_back(abs(tet_volume6(p[0], p[1], p[2], p[3])));
      for (const Tri& f : tet_faces(cands_[i]))
        tri2tets_[f].push_back(static_cast<int>(i));
    }
    size_t m = cands_.size();
    conflict_.assign(m * m, -1);
  }

  SearchResult run() {
    SearchResult res;
    if (cands_.empty()) {
      res.status = SearchStatus::NotTriangulable;
      return res;
    }
    open_ = boundary_;
    chosen_flag_.assign(cands_.size(), false);
    acc_ = 0;
    stopped_ = done_ = false;
    recurse();
    res.nodes_explored = nodes_;
    res.n_triangulations = count_;
    if (count_ > 0) {
      res.t_min = t_min_;
      res.t_max = t_max_;
      res.witness_min = Triangulation::of(mesh_.label, best_min_);
      res.witness_max = Triangulation::of(mesh_.label, best_max_);
    }
    if (stopped_)
      res.status = SearchStatus::BudgetExceeded;
    else if (mode_ == SearchMode::Any && count_ > 0)
      res.status = SearchStatus::Found;
    else if (count_ > 0)
      res.status = SearchStatus::Exhausted;
    else
      res.status = SearchStatus::NotTriangulable;
    return res;
  }

 private:
  bool conflicts(int a, int b) {
    size_t m = cands_.size();
    int8_t& slot = conflict_[std::min(a, b) * m + std::max(a, b)];
    if (slot == -1) {
      TetContact c = tets_classify(tet_points(mesh_, cands_[a]),
                                   tet_points(mesh_, cands_[b]));
      slot = (c == TetContact::ImproperOverlap) ? 1 : 0;
    }
    return slot == 1;
  }

  void record() {
    std::vector<Tet> sol;
    for (size_t i = 0; i < cands_.size(); ++i)
      if (chosen_flag_[i]) sol.push_back(cands_[i]);
    count_++;
    int sz = static_cast<int>(sol.size());
    if (count_ == 1 || sz < t_min_) { t_min_ = sz; best_min_ = sol; }
    if (count_ == 1 || sz > t_max_) { t_max_ = sz; best_max_ = sol; }
    if (mode_ == SearchMode::Any) done_ = true;
  }

  void recurse() {
    if (done_ || stopped_) return;
    if (open_.empty()) {
      if (acc_ == total_) record();
      return;
    }
    Tri f = *open_.begin();
    auto it = tri2tets_.find(f);
    if (it == tri2tets_.end()) return;
    for (int ti : it->second) {
      if (done_ || stopped_) return;
      if (chosen_flag_[ti]) continue;
      if (acc_ + vols_[ti] > total_) continue;

      bool feasible = true;
      auto faces = tet_faces(cands_[ti]);
      for (const Tri& g : faces) {
        int limit = boundary_.count(g) ? 1 : 2;
        if (cover_[g] + 1 > limit) { feasible = false; break; }
      }
      if (!feasible) continue;
      for (size_t j = 0; j < cands_.size() && feasible; ++j)
        if (chosen_flag_[j] && conflicts(ti, static_cast<int>(j)))
          feasible = false;
      if (!feasible) continue;

      if (++nodes_ > budget_) { stopped_ = true; return; }

      chosen_flag_[ti] = true;
      acc_ += vols_[ti];
      std::vector<Tri> opened, closed;
      for (const Tri& g : faces) {
        int c = ++cover_[g];
        int limit = boundary_.count(g) ? 1 : 2;
        if (c == limit) {
          if (open_.erase(g)) closed.push_back(g);
        } else {
          open_.insert(g);
          opened.push_back(g);
        }
      }
      recurse();
      for (const Tri& g : opened) open_.erase(g);
      for (const Tri& g : closed) open_.insert(g);
      for (const Tri& g : faces) cover_[g]--;
      acc_ -= vols_[ti];
      chosen_flag_[ti] = false;
    }
  }

  const TriMesh& mesh_;
  SearchMode mode_;
  std::uint64_t budget_;
  std::vector<Tet> cands_;
  std::vector<Rat> vols_;
  Rat total_;
  std::set<Tri> boundary_;
  std::map<Tri, std::vector<int>> tri2tets_;
  std::vector<int8_t> conflict_;

  std::set<Tri> open_;
  std::map<Tri, int> cover_;
  std::vector<bool> chosen_flag_;
  Rat acc_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  int t_min_ = 0, t_max_ = 0;
  std::vector<Tet> best_min_, best_max_;
  bool done_ = false, stopped_ = false;
};

}  // namespace

SearchResult search(const TriMesh& mesh, SearchMode mode,
                    std::uint64_t budget) {
  if (!mesh.has_coords())
    fail(ErrorCode::AbstractMesh,
         "search requires coordinates; mesh '" + mesh.label + "' is abstract");
  return FrontSearch(mesh, mode, budget).run();
}

long lower_bound_tets(long n, long p) {
  if (n < 4 || p < 0)
    fail(ErrorCode::BadParams, "need n >= 4 and p >= 0");
  return n + 3 * (p - 1);
}

Certification certify_minimal(const TriMesh& mesh,
                              const Triangulation& witness) {
  if (!witness.mesh_label.empty() && !mesh.label.empty() &&
      witness.mesh_label != mesh.label)
    fail(ErrorCode::InvalidWitness,
         "witness is for mesh '" + witness.mesh_label + "', not '" +
             mesh.label + "'");
  ValidityReport v = is_valid_triangulation(mesh, witness.tets);
  if (!v.valid) fail(ErrorCode::InvalidWitness, v.reason);
  SurfaceReport s = validate(mesh);
  long bound = lower_bound_tets(s.vertices, *s.genus);
  return (static_cast<long>(witness.size()) == bound)
             ? Certification::ProvenMinimal
             : Certification::ValidButUnproven;
}

}  // namespace toro
