/* Copyright 2026 The Toroidal Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the toroidal-polyhedra library.
 *
 * Meshes are opaque handles; everything else travels as JSON or R-OFF text.
 * Functions returning pointers yield NULL on failure; consult
 * toro_last_error() / toro_last_error_code() on the same thread. Strings
 * returned by the library are heap-allocated and must be released with
 * toro_free(); handles with toro_mesh_free().
 */

#ifndef TOROIDAL_H_
#define TOROIDAL_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct toro_mesh toro_mesh;

/* Message and stable code name ("NotEmbedded", "BadParams", ...) of the last
 * failure on the calling thread. Empty strings when the last call succeeded. */
const char* toro_last_error(void);
const char* toro_last_error_code(void);

/* R-OFF / AOFF text round-trip. */
toro_mesh* toro_mesh_parse_off(const char* text);
char* toro_mesh_write_off(const toro_mesh* m);

/* Families: pyramid (n, planar), bipyramid (n), schoenhardt (c, s as "p/q"),
 * csaszar, toroid-p9, chain (p), chain+attach (p, k), chain-shared-tet (p),
 * cycle-closure (p). params_json may be NULL or "{}" for defaults. */
toro_mesh* toro_generate(const char* family, const char* params_json);

/* Surface report (V/E/F, Euler characteristic, genus, manifold, orientable,
 * embedded, exact 6x volume) as JSON. */
char* toro_inspect(const toro_mesh* m);

/* mode: "any" or "exhaustive". Returns SearchResult JSON. */
char* toro_triangulate(const toro_mesh* m, const char* mode, uint64_t budget);

/* Checks a triangulation JSON against the mesh: {"valid":bool,"reason":s}. */
char* toro_verify(const toro_mesh* m, const char* triangulation_json);

/* {"certification":"proven-minimal"|"valid-but-unproven", ...}. */
char* toro_certify(const toro_mesh* m, const char* triangulation_json);

/* n + 3(p-1); negative on bad parameters. */
int64_t toro_bound(int64_t n, int64_t p);

/* Connection graph of a decomposition JSON, as graph JSON. */
char* toro_congraph(const char* decomposition_json);

/* Recomputes the stats of a graph JSON (nodes/edges/cycle_rank echo). */
char* toro_graph_stats(const char* graph_json);

/* Decomposition validity: {"valid":bool,"reason":s}. */
char* toro_validate_decomposition(const toro_mesh* m,
                                  const char* decomposition_json,
                                  int check_sharing_rule);

/* {"verdict":"m-division"|"not-m-division"|"undecided"}. */
char* toro_check_m_division(const toro_mesh* m,
                            const char* decomposition_json, uint64_t budget);

/* Construction metadata carried by generated meshes; NULL / negative when
 * absent. */
char* toro_mesh_witness_json(const toro_mesh* m);
char* toro_mesh_decomposition_json(const toro_mesh* m);
int64_t toro_mesh_claimed_genus(const toro_mesh* m);
int64_t toro_mesh_claimed_tmin(const toro_mesh* m);

void toro_mesh_free(toro_mesh* m);
void toro_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TOROIDAL_H_ */
