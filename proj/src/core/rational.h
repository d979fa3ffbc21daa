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

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace toro {

// Exact rational scalar. Always canonical: lowest terms, positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat& r) { return sgn(r); }

// n/d in canonical form. The raw two-argument mpq_class constructor does not
// reduce, which breaks exact comparisons; route every literal fraction with
// computed parts through here.
inline Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// Parses "p/q" or a plain integer (optionally signed). Returns nullopt on
// malformed input or zero denominator.
std::optional<Rat> rat_parse(const std::string& s);

// Renders as "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& r);

}  // namespace toro
