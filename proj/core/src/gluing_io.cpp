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

#include "dehn/gluing_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace dehn {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint8_t small(const std::string& s) {
  unsigned long v = std::stoul(s);
  return static_cast<std::uint8_t>(v > 255 ? 255 : v);
}

}  // namespace

Complex read_complex(std::istream& in) {
  static const std::regex kHeader(R"((cubulation\s+k|triangulation\s+n)\s*=\s*(\d+))");
  static const std::regex kCube(
      R"((\d+)\s+(\d+)\s*->\s*(\d+)\s+(\d+)\s*:\s*(\d+)\s+(\d+)\s+(\d+)\s+(\d+))");
  static const std::regex kTet(R"((\d+)\s+(\d+)\s*->\s*(\d+)\s*:\s*(\d+)\s+(\d+)\s+(\d+)\s+(\d+))");

  std::string raw;
  int line_no = 0;
  std::optional<Complex> out;
  bool cubes = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::smatch m;
    if (!out) {
      if (!std::regex_match(line, m, kHeader))
        throw ParseError(line_no, "expected 'cubulation k=<int>' or 'triangulation n=<int>'");
      std::size_t count = std::stoul(m[2]);
      cubes = m[1].str().rfind("cubulation", 0) == 0;
      if (cubes) {
        out = IdealCubulation(count);
      } else {
        out = IdealTriangulation(count);
      }
      continue;
    }
    if (cubes) {
      if (!std::regex_match(line, m, kCube))
        throw ParseError(line_no, "malformed cube gluing line '" + line + "'");
      auto& c = std::get<IdealCubulation>(*out);
      std::size_t a = std::stoul(m[1]);
      std::size_t b = std::stoul(m[3]);
      int f = std::stoi(m[2]);
      int g = std::stoi(m[4]);
      if (a >= c.size() || b >= c.size() || f >= kCubeFaces || g >= kCubeFaces)
        throw ParseError(line_no, "cube or face index out of range");
      CornerMap corners{small(m[5]), small(m[6]), small(m[7]), small(m[8])};
      if (c.record(a, f) || c.record(b, g))
        throw ParseError(line_no, "face glued twice");
      if (a == b && f == g) {
        c.set_record(a, f, CubeGluing{static_cast<std::uint32_t>(b), static_cast<std::uint8_t>(g), corners});
      } else if (!is_permutation(corners)) {
        // Keep the broken record so validation can report it.
        c.set_record(a, f, CubeGluing{static_cast<std::uint32_t>(b), static_cast<std::uint8_t>(g), corners});
      } else {
        c.glue(a, f, b, g, corners);
      }
    } else {
      if (!std::regex_match(line, m, kTet))
        throw ParseError(line_no, "malformed tetrahedron gluing line '" + line + "'");
      auto& t = std::get<IdealTriangulation>(*out);
      std::size_t a = std::stoul(m[1]);
      std::size_t b = std::stoul(m[3]);
      int f = std::stoi(m[2]);
      if (a >= t.size() || b >= t.size() || f > 3)
        throw ParseError(line_no, "tetrahedron or face index out of range");
      Perm4 perm{small(m[4]), small(m[5]), small(m[6]), small(m[7])};
      if (t.record(a, f)) throw ParseError(line_no, "face glued twice");
      if (!is_permutation(perm) || (a == b && perm[f] == f)) {
        t.set_record(a, f, TetGluing{static_cast<std::uint32_t>(b), perm});
      } else {
        if (t.record(b, perm[f])) throw ParseError(line_no, "face glued twice");
        t.glue(a, f, b, perm);
      }
    }
  }
  if (!out) throw ParseError(line_no, "empty input");
  return std::move(*out);
}

Complex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return read_complex(in);
}

IdealCubulation read_cubulation_file(const std::string& path) {
  auto x = read_complex_file(path);
  if (!std::holds_alternative<IdealCubulation>(x))
    throw std::runtime_error(path + " does not contain a cubulation");
  return std::get<IdealCubulation>(std::move(x));
}

IdealTriangulation read_triangulation_file(const std::string& path) {
  auto x = read_complex_file(path);
  if (!std::holds_alternative<IdealTriangulation>(x))
    throw std::runtime_error(path + " does not contain a triangulation");
  return std::get<IdealTriangulation>(std::move(x));
}

void write_complex(std::ostream& out, const IdealTriangulation& t) {
  out << "triangulation n=" << t.size() << '\n';
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (int f = 0; f < 4; ++f) {
      const auto& r = t.record(a, f);
      if (!r) continue;
      if (std::make_pair(std::size_t{r->tet}, int(r->perm[f])) < std::make_pair(a, f)) continue;
      out << a << ' ' << f << " -> " << r->tet << " : " << to_string(r->perm) << '\n';
    }
  }
}

void write_complex(std::ostream& out, const IdealCubulation& c) {
  out << "cubulation k=" << c.size() << '\n';
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (int f = 0; f < kCubeFaces; ++f) {
      const auto& r = c.record(a, f);
      if (!r) continue;
      if (std::make_pair(std::size_t{r->cube}, int(r->face)) < std::make_pair(a, f)) continue;
      out << a << ' ' << f << " -> " << r->cube << ' ' << int(r->face) << " : "
          << to_string(r->corners) << '\n';
    }
  }
}

std::string to_text(const IdealTriangulation& t) {
  std::ostringstream os;
  write_complex(os, t);
  return os.str();
}

std::string to_text(const IdealCubulation& c) {
  std::ostringstream os;
  write_complex(os, c);
  return os.str();
}

void write_complex_file(const std::string& path, const Complex& x) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  std::visit([&](const auto& v) { write_complex(out, v); }, x);
}

}  // namespace dehn
