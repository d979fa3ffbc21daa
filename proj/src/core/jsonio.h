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
// JSON round-trips for triangulations, decompositions and graphs.

#pragma once

#include <string>

#include "congraph.h"
#include "engine.h"

namespace toro {

std::string triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& text);

std::string decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);

std::string graph_to_json(const ConnectionGraph& g);
ConnectionGraph graph_from_json(const std::string& text);

std::string surface_report_to_json(const SurfaceReport& r);
std::string search_result_to_json(const SearchResult& r,
                                  const std::string& mesh_label);

}  // namespace toro
