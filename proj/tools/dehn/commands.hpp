// Copyright 2026 The dehn Authors
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


#ifndef DEHN_TOOLS_COMMANDS_HPP_
#define DEHN_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace dehn::cli {

// Every command fills `report` and returns the exit code: 0 on success, 1
// when the input fails validation. Unreadable or malformed input throws.
int run_validate(const std::string& path, bool table, Json& report);
int run_stats(const std::string& path, Json& report);

struct ConvertOptions {
  std::string direction;  // tri2cub or cub2tri
  std::string input;
  std::string bits = "auto";
  std::string out;
  int exhaustive_max = 20;
  std::uint64_t seed = 0;
  int restarts = 8;
  int threads = 1;
};
int run_convert(const ConvertOptions& opts, Json& report);

struct QfsOptions {
  std::string input;  // .qfs file or inline expression
  std::vector<int> bubbles;
  int inverse = 0;
};
int run_qfs(const QfsOptions& opts, Json& report);

struct BoundsOptions {
  std::optional<int> tri_size;
  std::string name = "M";
  std::string qfs;
  std::string script;
  std::vector<std::string> catalog;
};
int run_bounds(const BoundsOptions& opts, Json& report);

struct Lc2dOptions {
  std::string action;  // thicken, lc, search, dual
  std::string input;   // diagram file/text, or surface name
  int max_crossings = 2;
  bool from_squares = false;
};
int run_lc2d(const Lc2dOptions& opts, Json& report);

struct CensusCliOptions {
  int cubes = 0;
  int tetrahedra = 0;
  std::string filter;
  std::string out;
  std::uint64_t seed = 0;
  int threads = 1;
  bool list = false;
};
int run_census(const CensusCliOptions& opts, Json& report);

}  // namespace dehn::cli

#endif  // DEHN_TOOLS_COMMANDS_HPP_
