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


// Reports are built once as JSON and printed either as JSON or as
// indented "key: value" text, so both forms carry the same data.

#ifndef DEHN_TOOLS_REPORT_HPP_
#define DEHN_TOOLS_REPORT_HPP_

#include <iosfwd>
#include <stdexcept>

#include "json.hpp"

namespace dehn::cli {

using Json = nlohmann::ordered_json;

// Bad flags or arguments; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void print_report(std::ostream& out, const Json& report, bool json);

}  // namespace dehn::cli

#endif  // DEHN_TOOLS_REPORT_HPP_
