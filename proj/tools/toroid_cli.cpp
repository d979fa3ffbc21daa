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
// Command-line front end. Talks to the library exclusively through the C
// API in toroidal.h.
//
// Exit codes: 0 success / 1 usage or input error / 2 negative result /
// 3 budget exceeded.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "toroidal.h"

namespace {

constexpr int kOk = 0, kUsage = 1, kNegative = 2, kBudget = 3;

struct MeshDeleter {
  void operator()(toro_mesh* m) const { toro_mesh_free(m); }
};
using MeshPtr = std::unique_ptr<toro_mesh, MeshDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  toro_free(s);
  return out;
}

// Usage-style failures get exit 1, domain-negative results exit 2.
int error_exit_code() {
  std::string code = toro_last_error_code();
  if (code == "ParseError" || code == "BadParams" ||
      code == "UnknownFamily" || code == "NonTriangularFace")
    return kUsage;
  return kNegative;
}

int report_error(const std::string& context) {
  std::cerr << context << ": " << toro_last_error() << "\n";
  return error_exit_code();
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return "";
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  ok = true;
  return ss.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return bool(out);
}

MeshPtr load_mesh(const std::string& path, int& rc) {
  bool ok = false;
  std::string text = read_file(path, ok);
  if (!ok) {
    std::cerr << "cannot read " << path << "\n";
    rc = kUsage;
    return nullptr;
  }
  MeshPtr m(toro_mesh_parse_off(text.c_str()));
  if (!m) rc = report_error(path);
  return m;
}

// Minimal JSON string assembly for generate parameters.
std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toroidal polyhedra: construction, triangulation, graphs"};
  app.require_subcommand(1);

  std::uint64_t budget = 10'000'000;
  bool json_out = false;
  std::uint64_t seed = 0;
  app.add_option("--budget", budget, "search budget in tree nodes");
  app.add_flag("--json", json_out, "machine-readable output (default)");
  app.add_option("--seed", seed, "seed for randomized helpers (unused)");

  // generate
  auto* gen = app.add_subcommand("generate", "construct a mesh family");
  std::string family, out_prefix, c_str = "24/25", s_str = "7/25";
  int g_n = 4, g_p = 1, g_k = 4;
  bool planar = true, no_planar = false;
  gen->add_option("family", family,
                  "pyramid|bipyramid|schoenhardt|csaszar|toroid-p9|chain|"
                  "chain+attach|chain-shared-tet|cycle-closure")
      ->required();
  gen->add_option("--n", g_n, "vertex count (pyramid, bipyramid)");
  gen->add_option("--p", g_p, "chain length / genus parameter");
  gen->add_option("--k", g_k, "attached pyramid size");
  gen->add_option("--c", c_str, "twist cosine as rational");
  gen->add_option("--s", s_str, "twist sine as rational");
  gen->add_flag("--space-base", no_planar, "non-planar pyramid base");
  gen->add_option("--out", out_prefix, "output path prefix");

  // inspect
  auto* ins = app.add_subcommand("inspect", "validate and report a mesh");
  std::string ins_path;
  ins->add_option("mesh", ins_path, "R-OFF/AOFF file")->required();

  // triangulate
  auto* tri = app.add_subcommand("triangulate", "search for 3-triangulations");
  std::string tri_path, tri_mode = "any", tri_out;
  tri->add_option("mesh", tri_path, "R-OFF file")->required();
  tri->add_option("--mode", tri_mode, "any|exhaustive");
  tri->add_option("--out", tri_out, "write SearchResult JSON here");

  // verify
  auto* ver = app.add_subcommand("verify", "check a triangulation witness");
  std::string ver_mesh, ver_tets;
  ver->add_option("mesh", ver_mesh, "R-OFF file")->required();
  ver->add_option("tets", ver_tets, "triangulation JSON")->required();

  // certify
  auto* cert = app.add_subcommand("certify", "certify witness minimality");
  std::string cert_mesh, cert_tets;
  cert->add_option("mesh", cert_mesh, "R-OFF file")->required();
  cert->add_option("tets", cert_tets, "triangulation JSON")->required();

  // bound
  auto* bnd = app.add_subcommand("bound", "genus lower bound n + 3(p-1)");
  std::int64_t b_n = 0, b_p = 0;
  bnd->add_option("--n", b_n, "vertex count")->required();
  bnd->add_option("--p", b_p, "genus")->required();

  // congraph
  auto* cg = app.add_subcommand("congraph", "connection graph analysis");
  std::string cg_decomp, cg_mesh;
  bool cg_check_m = false, cg_sharing = false;
  cg->add_option("decomposition", cg_decomp,
                 "decomposition JSON (or graph JSON)")
      ->required();
  cg->add_option("--mesh", cg_mesh, "R-OFF file for validation");
  cg->add_flag("--check-m", cg_check_m, "decide the m-division property");
  cg->add_flag("--check-sharing", cg_sharing,
               "also check the non-neighbour sharing rule");

  // Global options (--budget et al.) remain usable after the subcommand.
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the usage message
    return code == 0 ? kOk : kUsage;
  }
  (void)json_out;
  (void)seed;

  if (gen->parsed()) {
    if (no_planar) planar = false;
    std::ostringstream params;
    params << "{\"n\":" << g_n << ",\"p\":" << g_p << ",\"k\":" << g_k
           << ",\"planar\":" << (planar ? "true" : "false")
           << ",\"c\":" << quote(c_str) << ",\"s\":" << quote(s_str) << "}";
    MeshPtr m(toro_generate(family.c_str(), params.str().c_str()));
    if (!m) return report_error("generate " + family);
    if (out_prefix.empty()) {
      out_prefix = family;
      for (char& ch : out_prefix)
        if (ch == '+') ch = '_';
    }
    std::string off = take(toro_mesh_write_off(m.get()));
    if (!write_file(out_prefix + ".off", off)) {
      std::cerr << "cannot write " << out_prefix << ".off\n";
      return kUsage;
    }
    std::ostringstream rep;
    rep << "{\n  \"files\": [" << quote(out_prefix + ".off");
    std::string w = take(toro_mesh_witness_json(m.get()));
    if (!w.empty()) {
      if (!write_file(out_prefix + ".witness.json", w)) return kUsage;
      rep << ", " << quote(out_prefix + ".witness.json");
    }
    std::string d = take(toro_mesh_decomposition_json(m.get()));
    if (!d.empty()) {
      if (!write_file(out_prefix + ".decomposition.json", d)) return kUsage;
      rep << ", " << quote(out_prefix + ".decomposition.json");
    }
    rep << "],\n  \"claimed_genus\": " << toro_mesh_claimed_genus(m.get())
        << ",\n  \"claimed_tmin\": " << toro_mesh_claimed_tmin(m.get())
        << "\n}\n";
    std::cout << rep.str();
    return kOk;
  }

  if (ins->parsed()) {
    int rc = kOk;
    MeshPtr m = load_mesh(ins_path, rc);
    if (!m) return rc;
    std::string rep = take(toro_inspect(m.get()));
    if (rep.empty()) return report_error("inspect");
    std::cout << rep;
    return kOk;
  }

  if (tri->parsed()) {
    int rc = kOk;
    MeshPtr m = load_mesh(tri_path, rc);
    if (!m) return rc;
    std::string rep =
        take(toro_triangulate(m.get(), tri_mode.c_str(), budget));
    if (rep.empty()) return report_error("triangulate");
    std::cout << rep;
    if (!tri_out.empty() && !write_file(tri_out, rep)) {
      std::cerr << "cannot write " << tri_out << "\n";
      return kUsage;
    }
    if (rep.find("\"not-triangulable\"") != std::string::npos)
      return kNegative;
    if (rep.find("\"budget-exceeded\"") != std::string::npos) return kBudget;
    return kOk;
  }

  if (ver->parsed() || cert->parsed()) {
    bool certify = cert->parsed();
    int rc = kOk;
    MeshPtr m = load_mesh(certify ? cert_mesh : ver_mesh, rc);
    if (!m) return rc;
    bool ok = false;
    std::string tets = read_file(certify ? cert_tets : ver_tets, ok);
    if (!ok) {
      std::cerr << "cannot read triangulation file\n";
      return kUsage;
    }
    std::string rep =
        certify ? take(toro_certify(m.get(), tets.c_str()))
                : take(toro_verify(m.get(), tets.c_str()));
    if (rep.empty()) return report_error(certify ? "certify" : "verify");
    std::cout << rep;
    if (!certify && rep.find("\"valid\": false") != std::string::npos)
      return kNegative;
    return kOk;
  }

  if (bnd->parsed()) {
    std::int64_t b = toro_bound(b_n, b_p);
    if (b < 0) return report_error("bound");
    std::cout << "{\n  \"n\": " << b_n << ",\n  \"p\": " << b_p
              << ",\n  \"lower_bound\": " << b << "\n}\n";
    return kOk;
  }

  if (cg->parsed()) {
    bool ok = false;
    std::string text = read_file(cg_decomp, ok);
    if (!ok) {
      std::cerr << "cannot read " << cg_decomp << "\n";
      return kUsage;
    }
    // Graph-JSON input (fixture files): echo computed stats.
    if (text.find("\"pieces\"") == std::string::npos) {
      std::string rep = take(toro_graph_stats(text.c_str()));
      if (rep.empty()) return report_error("congraph");
      std::cout << rep;
      return kOk;
    }
    std::string graph = take(toro_congraph(text.c_str()));
    if (graph.empty()) return report_error("congraph");
    std::cout << graph;
    if (!cg_mesh.empty()) {
      int rc = kOk;
      MeshPtr m = load_mesh(cg_mesh, rc);
      if (!m) return rc;
      std::string vr = take(toro_validate_decomposition(
          m.get(), text.c_str(), cg_sharing ? 1 : 0));
      if (vr.empty()) return report_error("validate-decomposition");
      std::cout << vr;
      if (vr.find("\"valid\": false") != std::string::npos) return kNegative;
      if (cg_check_m) {
        std::string mv =
            take(toro_check_m_division(m.get(), text.c_str(), budget));
        if (mv.empty()) return report_error("check-m");
        std::cout << mv;
        if (mv.find("undecided") != std::string::npos) return kBudget;
        if (mv.find("not-m-division") != std::string::npos) return kNegative;
      }
    } else if (cg_check_m) {
      std::cerr << "--check-m needs --mesh\n";
      return kUsage;
    }
    return kOk;
  }

  return kUsage;
}
