// Copyright 2026 The hdshapes Authors.
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

#include "hdshapes/error.hpp"

namespace hdshapes {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidPlan: return "invalid-plan";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kShape: return "shape";
    case ErrorCode::kParameter: return "parameter";
    case ErrorCode::kDimension: return "dimension";
    case ErrorCode::kDegenerateHole: return "degenerate-hole";
    case ErrorCode::kRegistry: return "registry";
    case ErrorCode::kRejectedParameter: return "rejected-parameter";
    case ErrorCode::kInvalidRotation: return "invalid-rotation";
  }
  return "unknown";
}

}  // namespace hdshapes
