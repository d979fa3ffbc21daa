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

#include "errors.h"

namespace toro {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::DegenerateTet: return "DegenerateTet";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotManifold: return "NotManifold";
    case ErrorCode::NotOrientable: return "NotOrientable";
    case ErrorCode::MissingCoordinates: return "MissingCoordinates";
    case ErrorCode::AbstractMesh: return "AbstractMesh";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonTriangularFace: return "NonTriangularFace";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NotEmbedded: return "NotEmbedded";
    case ErrorCode::TwistTooLarge: return "TwistTooLarge";
    case ErrorCode::PlacementMismatch: return "PlacementMismatch";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::NotConvexPiece: return "NotConvexPiece";
    case ErrorCode::VolumeMismatch: return "VolumeMismatch";
    case ErrorCode::UnmatchedFace: return "UnmatchedFace";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace toro
