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

#ifndef POLYTUTTE_CONFIG_HPP
#define POLYTUTTE_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "polytutte/error.hpp"
#include "polytutte/polymatroid.hpp"
#include "polytutte/subset.hpp"

namespace polytutte {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2026'0001ULL;

enum class OutputFormat { kText, kJson };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "text") return OutputFormat::kText;
  if (s == "json") return OutputFormat::kJson;
  throw Error(ErrorKind::kInvalidArgument, "unknown format '" + std::string(s) + "'");
}

struct RunConfig {
  int max_n = kMaxGroundSet;
  std::size_t max_bases = kDefaultMaxBases;
  std::size_t memo_capacity = std::size_t{1} << 20;
  std::uint64_t rng_seed = kDefaultSeed;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::kText;

  void validate() const {
    if (max_n < 1 || max_n > kMaxGroundSet) {
      throw Error(ErrorKind::kInvalidArgument,
                  "max_n must be in [1, " + std::to_string(kMaxGroundSet) + "]");
    }
    if (max_bases == 0 || memo_capacity == 0 || jobs == 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "max_bases, memo_capacity and jobs must be positive");
    }
  }
};

}  // namespace polytutte

#endif  // POLYTUTTE_CONFIG_HPP
