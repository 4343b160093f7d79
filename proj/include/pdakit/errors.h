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

#ifndef PDAKIT_ERRORS_H_
#define PDAKIT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdakit {

enum class Errc {
  kMalformedGrid,
  kParseError,
  kConflictingTriples,
  kParameterOutOfRange,
  kDegenerateInput,
  kNonIntegralZ,
  kNonIntegralParameter,
  kSearchSpaceTooLarge,
  kDimensionMismatch,
  kSweepTooLarge,
  kNoMatchingParameters,
};

std::string_view ErrcName(Errc code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(ErrcName(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace pdakit

#endif  // PDAKIT_ERRORS_H_
