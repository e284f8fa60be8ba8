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

// Text gluing-table format, one complex per file:
//
//   cubulation k=<int>            |  triangulation n=<int>
//   c f -> c' f' : p0 p1 p2 p3    |  t f -> t' : q0 q1 q2 q3
//
// One line per glued face pair; the partner record is implied. For cubes the
// p's are the corner map in canonical corner order, for tetrahedra the q's
// are the images of vertex labels 0..3. '#' starts a comment.

#ifndef DEHN_GLUING_IO_HPP_
#define DEHN_GLUING_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "dehn/cubulation.hpp"
#include "dehn/triangulation.hpp"

namespace dehn {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

using Complex = std::variant<IdealTriangulation, IdealCubulation>;

Complex read_complex(std::istream& in);
Complex read_complex_file(const std::string& path);
IdealCubulation read_cubulation_file(const std::string& path);
IdealTriangulation read_triangulation_file(const std::string& path);

void write_complex(std::ostream& out, const IdealTriangulation& t);
void write_complex(std::ostream& out, const IdealCubulation& c);
std::string to_text(const IdealTriangulation& t);
std::string to_text(const IdealCubulation& c);
void write_complex_file(const std::string& path, const Complex& x);

}  // namespace dehn

#endif  // DEHN_GLUING_IO_HPP_
