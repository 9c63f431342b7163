// Copyright 2026 The Authors.
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

#ifndef POLYTUTTE_ERROR_HPP
#define POLYTUTTE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace polytutte {

// Every failure the library reports carries one of these categories. The CLI
// maps each category to its own exit status.
enum class ErrorKind {
  kEmptySet,
  kUnequalSums,
  kExchangeFailure,
  kNonzeroEmptySet,
  kSubmodularityFailure,
  kSizeLimitExceeded,
  kEmptySlice,
  kOutOfRange,
  kFullGroundSet,
  kOverlappingSets,
  kNotABasis,
  kNotAMatroid,
  kNegativeCoordinates,
  kDegreeExceedsN,
  kInvalidArgument,
  kParse,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kEmptySet: return "EmptySet";
    case ErrorKind::kUnequalSums: return "UnequalSums";
    case ErrorKind::kExchangeFailure: return "ExchangeFailure";
    case ErrorKind::kNonzeroEmptySet: return "NonzeroEmptySet";
    case ErrorKind::kSubmodularityFailure: return "SubmodularityFailure";
    case ErrorKind::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::kEmptySlice: return "EmptySlice";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kFullGroundSet: return "FullGroundSet";
    case ErrorKind::kOverlappingSets: return "OverlappingSets";
    case ErrorKind::kNotABasis: return "NotABasis";
    case ErrorKind::kNotAMatroid: return "NotAMatroid";
    case ErrorKind::kNegativeCoordinates: return "NegativeCoordinates";
    case ErrorKind::kDegreeExceedsN: return "DegreeExceedsN";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

// Process exit status used by the CLI for an error of the given kind.
// 1 is reserved for verdict mismatches and 2 for usage errors.
constexpr int exit_code(ErrorKind kind) noexcept {
  return 10 + static_cast<int>(kind);
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polytutte

#endif  // POLYTUTTE_ERROR_HPP
