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

#include "toroidal.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <string>

#include "../core/congraph.h"
#include "../core/constructions.h"
#include "../core/engine.h"
#include "../core/errors.h"
#include "../core/jsonio.h"
#include "../core/trimesh.h"

using nlohmann::json;

struct toro_mesh {
  toro::ConstructionOutput out;
};

namespace {

thread_local std::string g_err_msg;
thread_local std::string g_err_code;

void clear_error() {
  g_err_msg.clear();
  g_err_code.clear();
}

void set_error(const toro::Error& e) {
  g_err_msg = e.what();
  g_err_code = toro::error_code_name(e.code());
}

void set_error(const std::exception& e) {
  g_err_msg = e.what();
  g_err_code = "Internal";
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, converting exceptions into thread-local error state.
template <typename T, typename Fn>
T guarded(T fallback, Fn fn) {
  clear_error();
  try {
    return fn();
  } catch (const toro::Error& e) {
    set_error(e);
  } catch (const std::exception& e) {
    set_error(e);
  }
  return fallback;
}

toro::Rat param_rat(const json& j, const char* key, toro::Rat dflt) {
  if (!j.contains(key)) return dflt;
  if (j[key].is_number_integer()) return toro::Rat(j[key].get<long>());
  if (j[key].is_string()) {
    auto r = toro::rat_parse(j[key].get<std::string>());
    if (r) return *r;
  }
  toro::fail(toro::ErrorCode::BadParams,
             std::string("parameter ") + key + " must be an integer or p/q");
}

}  // namespace

extern "C" {

const char* toro_last_error(void) { return g_err_msg.c_str(); }
const char* toro_last_error_code(void) { return g_err_code.c_str(); }

toro_mesh* toro_mesh_parse_off(const char* text) {
  return guarded<toro_mesh*>(nullptr, [&]() {
    if (!text) toro::fail(toro::ErrorCode::ParseError, "null input");
    toro_mesh* m = new toro_mesh;
    m->out.mesh = toro::parse_off(text);
    m->out.claimed_genus = -1;
    return m;
  });
}

char* toro_mesh_write_off(const toro_mesh* m) {
  return guarded<char*>(nullptr, [&]() {
    if (!m) toro::fail(toro::ErrorCode::BadParams, "null mesh");
    return dup_string(toro::write_off(m->out.mesh));
  });
}

toro_mesh* toro_generate(const char* family, const char* params_json) {
  return guarded<toro_mesh*>(nullptr, [&]() -> toro_mesh* {
    if (!family) toro::fail(toro::ErrorCode::UnknownFamily, "null family");
    json p = json::object();
    if (params_json && *params_json) {
      p = json::parse(params_json, nullptr, false);
      if (p.is_discarded() || !p.is_object())
        toro::fail(toro::ErrorCode::BadParams, "params must be a JSON object");
    }
    std::string fam = family;
    toro::ConstructionOutput out;
    if (fam == "pyramid") {
      out = toro::pyramid(p.value("n", 4), p.value("planar", true));
    } else if (fam == "bipyramid") {
      out = toro::bipyramid(p.value("n", 5)).out;
    } else if (fam == "schoenhardt") {
      out = toro::schoenhardt(param_rat(p, "c", toro::Rat(24, 25)),
                              param_rat(p, "s", toro::Rat(7, 25)));
    } else if (fam == "csaszar") {
      out = toro::csaszar();
    } else if (fam == "toroid-p9") {
      out = toro::toroid_p9();
    } else if (fam == "chain") {
      out = toro::chain_csaszar(p.value("p", 1));
    } else if (fam == "chain+attach") {
      out = toro::attach_simple(toro::chain_csaszar(p.value("p", 1)),
                                p.value("k", 4));
    } else if (fam == "chain-shared-tet") {
      out = toro::chain_csaszar_shared_tet(p.value("p", 1));
    } else if (fam == "cycle-closure") {
      out = toro::cycle_closure(p.value("p", 3));
    } else {
      toro::fail(toro::ErrorCode::UnknownFamily, fam);
    }
    toro_mesh* m = new toro_mesh;
    m->out = std::move(out);
    return m;
  });
}

char* toro_inspect(const toro_mesh* m) {
  return guarded<char*>(nullptr, [&]() {
    if (!m) toro::fail(toro::ErrorCode::BadParams, "null mesh");
    toro::SurfaceReport rep = toro::validate(m->out.mesh);
    if (m->out.mesh.has_coords()) {
      rep.embedded = toro::is_embedded(m->out.mesh).embedded;
      rep.volume6 = toro::enclosed_volume6(m->out.mesh);
    }
    return dup_string(toro::surface_report_to_json(rep));
  });
}

char* toro_triangulate(const toro_mesh* m, const char* mode,
                       uint64_t budget) {
  return guarded<char*>(nullptr, [&]() {
    if (!m) toro::fail(toro::ErrorCode::BadParams, "null mesh");
    std::string md = mode ? mode : "any";
    toro::SearchMode sm;
    if (md == "any") {
      sm = toro::SearchMode::Any;
    } else if (md == "exhaustive") {
      sm = toro::SearchMode::Exhaustive;
    } else {
      toro::fail(toro::ErrorCode::BadParams, "mode must be any|exhaustive");
    }
    toro::SearchResult r = toro::search(m->out.mesh, sm, budget);
    return dup_string(toro::search_result_to_json(r, m->out.mesh.label));
  });
}

char* toro_verify(const toro_mesh* m, const char* triangulation_json) {
  return guarded<char*>(nullptr, [&]() {
    if (!m || !triangulation_json)
      toro::fail(toro::ErrorCode::BadParams, "null argument");
    toro::Triangulation t =
        toro::triangulation_from_json(triangulation_json);
    toro::ValidityReport v = toro::is_valid_triangulation(m->out.mesh, t.tets);
    json j;
    j["valid"] = v.valid;
    j["reason"] = v.reason;
    j["tets"] = t.size();
    return dup_string(j.dump(2) + "\n");
  });
}

char* toro_certify(const toro_mesh* m, const char* triangulation_json) {
  return guarded<char*>(nullptr, [&]() {
    if (!m || !triangulation_json)
      toro::fail(toro::ErrorCode::BadParams, "null argument");
    toro::Triangulation t =
        toro::triangulation_from_json(triangulation_json);
    toro::Certification c = toro::certify_minimal(m->out.mesh, t);
    toro::SurfaceReport rep = toro::validate(m->out.mesh);
    json j;
    j["certification"] = c == toro::Certification::ProvenMinimal
                             ? "proven-minimal"
                             : "valid-but-unproven";
    j["tets"] = t.size();
    if (rep.genus)
      j["lower_bound"] =
          toro::lower_bound_tets(m->out.mesh.n_vertices, *rep.genus);
    return dup_string(j.dump(2) + "\n");
  });
}

int64_t toro_bound(int64_t n, int64_t p) {
  return guarded<int64_t>(-1, [&]() -> int64_t {
    return toro::lower_bound_tets(static_cast<long>(n),
                                  static_cast<long>(p));
  });
}

char* toro_congraph(const char* decomposition_json) {
  return guarded<char*>(nullptr, [&]() {
    if (!decomposition_json)
      toro::fail(toro::ErrorCode::BadParams, "null argument");
    toro::Decomposition d =
        toro::decomposition_from_json(decomposition_json);
    return dup_string(toro::graph_to_json(toro::build_graph(d)));
  });
}

char* toro_graph_stats(const char* graph_json) {
  return guarded<char*>(nullptr, [&]() {
    if (!graph_json) toro::fail(toro::ErrorCode::BadParams, "null argument");
    toro::ConnectionGraph g = toro::graph_from_json(graph_json);
    json j = json::parse(toro::graph_to_json(g));
    j["connected"] = g.connected;
    j["single_cycle"] = toro::is_single_cycle(g);
    return dup_string(j.dump(2) + "\n");
  });
}

char* toro_validate_decomposition(const toro_mesh* m,
                                  const char* decomposition_json,
                                  int check_sharing_rule) {
  return guarded<char*>(nullptr, [&]() {
    if (!m || !decomposition_json)
      toro::fail(toro::ErrorCode::BadParams, "null argument");
    toro::Decomposition d =
        toro::decomposition_from_json(decomposition_json);
    toro::ValidityReport v = toro::validate_decomposition(
        m->out.mesh, d, check_sharing_rule != 0);
    json j;
    j["valid"] = v.valid;
    j["reason"] = v.reason;
    return dup_string(j.dump(2) + "\n");
  });
}

char* toro_check_m_division(const toro_mesh* m,
                            const char* decomposition_json,
                            uint64_t budget) {
  return guarded<char*>(nullptr, [&]() {
    if (!m || !decomposition_json)
      toro::fail(toro::ErrorCode::BadParams, "null argument");
    toro::Decomposition d =
        toro::decomposition_from_json(decomposition_json);
    toro::MDivision v = toro::check_m_division(m->out.mesh, d, budget);
    json j;
    j["verdict"] = v == toro::MDivision::MDiv        ? "m-division"
                   : v == toro::MDivision::NotMDiv   ? "not-m-division"
                                                     : "undecided";
    return dup_string(j.dump(2) + "\n");
  });
}

char* toro_mesh_witness_json(const toro_mesh* m) {
  return guarded<char*>(nullptr, [&]() -> char* {
    if (!m || !m->out.witness) return nullptr;
    return dup_string(toro::triangulation_to_json(*m->out.witness));
  });
}

char* toro_mesh_decomposition_json(const toro_mesh* m) {
  return guarded<char*>(nullptr, [&]() -> char* {
    if (!m || !m->out.decomposition) return nullptr;
    return dup_string(toro::decomposition_to_json(*m->out.decomposition));
  });
}

int64_t toro_mesh_claimed_genus(const toro_mesh* m) {
  return m ? m->out.claimed_genus : -1;
}

int64_t toro_mesh_claimed_tmin(const toro_mesh* m) {
  return m && m->out.claimed_tmin ? *m->out.claimed_tmin : -1;
}

void toro_mesh_free(toro_mesh* m) { delete m; }

void toro_free(char* s) { std::free(s); }

}  // extern "C"
