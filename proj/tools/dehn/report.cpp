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

#include "report.hpp"

#include <ostream>
#include <string>

namespace dehn::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalar(const Json& a) {
  for (const auto& v : a)
    if (v.is_structured()) return false;
  return true;
}

bool short_items(const Json& a) {
  for (const auto& v : a)
    if (v.is_string() && v.get<std::string>().find(' ') != std::string::npos) return false;
  return true;
}

void print_value(std::ostream& out, const std::string& indent, const std::string& key, const Json& v) {
  if (v.is_object()) {
    out << indent << key << ":\n";
    for (const auto& [k, x] : v.items()) print_value(out, indent + "  ", k, x);
  } else if (v.is_array() && all_scalar(v)) {
    if (short_items(v)) {
      out << indent << key << ":";
      for (const auto& x : v) out << ' ' << scalar(x);
      out << '\n';
    } else {
      out << indent << key << ":\n";
      for (const auto& x : v) out << indent << "  " << scalar(x) << '\n';
    }
  } else if (v.is_array()) {
    out << indent << key << ":\n";
    for (const auto& x : v) {
      if (!x.is_object()) {
        out << indent << "  - " << scalar(x) << '\n';
        continue;
      }
      out << indent << "  -";
      for (const auto& [k, y] : x.items()) {
        if (y.is_structured())
          out << ' ' << k << '=' << y.dump();
        else
          out << ' ' << k << '=' << scalar(y);
      }
      out << '\n';
    }
  } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
    out << indent << key << ":\n";
    std::string s = v.get<std::string>();
    std::size_t b = 0;
    while (b < s.size()) {
      auto e = s.find('\n', b);
      if (e == std::string::npos) e = s.size();
      out << indent << "  " << s.substr(b, e - b) << '\n';
      b = e + 1;
    }
  } else {
    out << indent << key << ": " << scalar(v) << '\n';
  }
}

}  // namespace

void print_report(std::ostream& out, const Json& report, bool json) {
  if (json) {
    out << report.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : report.items()) print_value(out, "", k, v);
}

}  // namespace dehn::cli
