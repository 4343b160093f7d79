/*
Copyright 2026 The pdakit Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "pdakit/errors.h"

namespace pdakit {

std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kMalformedGrid: return "MalformedGrid";
    case Errc::kParseError: return "ParseError";
    case Errc::kConflictingTriples: return "ConflictingTriples";
    case Errc::kParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::kDegenerateInput: return "DegenerateInput";
    case Errc::kNonIntegralZ: return "NonIntegralZ";
    case Errc::kNonIntegralParameter: return "NonIntegralParameter";
    case Errc::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kSweepTooLarge: return "SweepTooLarge";
    case Errc::kNoMatchingParameters: return "NoMatchingParameters";
  }
  return "Unknown";
}

}  // namespace pdakit
