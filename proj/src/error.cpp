// Copyright 2026 The matfunc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matfunc/error.hpp"

namespace matfunc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DivergentSeries: return "DivergentSeries";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::DegenerateBound: return "DegenerateBound";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::BadScale: return "BadScale";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::NullImage: return "NullImage";
    case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::NullProjection: return "NullProjection";
    case ErrorCode::NormTooLarge: return "NormTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace matfunc
