// ======================================================================== //
// Copyright 2026 The qpset Authors                                         //
//                                                                          //
// Licensed under the Apache License, Version 2.0 (the "License");          //
// you may not use this file except in compliance with the License.         //
// You may obtain a copy of the License at                                  //
//                                                                          //
//     http://www.apache.org/licenses/LICENSE-2.0                           //
//                                                                          //
// Unless required by applicable law or agreed to in writing, software      //
// distributed under the License is distributed on an "AS IS" BASIS,        //
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. //
// See the License for the specific language governing permissions and      //
// limitations under the License.                                           //
// ======================================================================== //

#include "qpset/error.hpp"

namespace qpset {

const char *to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidArgument:
    return "invalid argument";
  case ErrorCode::InvalidGroup:
    return "invalid group";
  case ErrorCode::NonConvergence:
    return "orbit did not converge";
  case ErrorCode::AsymmetricCluster:
    return "asymmetric cluster";
  case ErrorCode::NotAGCluster:
    return "not a G-cluster";
  case ErrorCode::EmptyStrip:
    return "empty strip";
  case ErrorCode::DimensionMismatch:
    return "dimension mismatch";
  case ErrorCode::Truncated:
    return "output truncated";
  case ErrorCode::ConfigSyntax:
    return "config syntax error";
  case ErrorCode::ConfigSemantic:
    return "config error";
  case ErrorCode::Io:
    return "i/o error";
  case ErrorCode::EmptyPatch:
    return "empty patch";
  case ErrorCode::TooFewPoints:
    return "too few points";
  }
  return "unknown error";
}

} // namespace qpset
