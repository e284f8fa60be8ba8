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

// Validation, orbit tracing and vertex links for gluing tables.

#ifndef DEHN_VALIDATION_HPP_
#define DEHN_VALIDATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dehn/cubulation.hpp"
#include "dehn/surface.hpp"
#include "dehn/triangulation.hpp"

namespace dehn {

enum class ViolationKind {
  kUnglued,         // a face without a record
  kOutOfRange,      // record names a missing cell or face
  kBadMap,          // not a permutation / not a square symmetry
  kSelfGluedFace,   // a face glued onto itself
  kNonInvolutive,   // partner record does not point back with the inverse
  kReversedEdge,    // an edge identified with itself reversed
  kDisconnected,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t cell = 0;
  // Face label for face-level violations, local edge index for edges,
  // -1 for complex-level violations.
  int label = -1;
  std::string message;
};

struct CellLabel {
  std::size_t cell = 0;
  int label = 0;
  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

struct OrbitReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;  // glued pairs
  int cells = 0;
  std::vector<CellLabel> vertex_reps;
  std::vector<CellLabel> edge_reps;  // label = local edge index
  std::vector<CellLabel> face_reps;
  // Class id of every (cell, vertex) and (cell, edge).
  std::vector<std::vector<int>> vertex_class;
  std::vector<std::vector<int>> edge_class;

  int euler_characteristic() const { return vertices - edges + faces - cells; }
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::optional<OrbitReport> orbits;  // present iff ok()

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const IdealTriangulation& t);
ValidationReport validate(const IdealCubulation& c);

// Local edge tables. Tetrahedron edges are the 6 pairs a<b in lex order;
// cube edges are indexed axis*4 + (the two other bits), running from the
// vertex with bit 0 on `axis` to the vertex with bit 1.
std::pair<int, int> tet_edge_vertices(int edge);
std::pair<int, int> cube_edge_vertices(int edge);

struct VertexLink {
  int vertex_class = 0;
  CellLabel representative;
  SurfaceDescriptor link;
  bool ideal() const { return !link.is_sphere(); }
};

// Requires a valid complex (throws std::invalid_argument otherwise).
std::vector<VertexLink> vertex_links(const IdealTriangulation& t);
std::vector<VertexLink> vertex_links(const IdealCubulation& c);

// For callers holding the orbits of an already validated complex.
std::vector<VertexLink> vertex_links(const IdealTriangulation& t, const OrbitReport& orbits);
std::vector<VertexLink> vertex_links(const IdealCubulation& c, const OrbitReport& orbits);

// V - E + F - cells == V - (sum of link Euler characteristics) / 2.
bool euler_identity_check(const IdealTriangulation& t);
bool euler_identity_check(const IdealCubulation& c);
bool euler_identity_check(const OrbitReport& orbits, const std::vector<VertexLink>& links);

// Euler characteristic computed from the links alone.
int euler_from_links(int vertex_classes, const std::vector<VertexLink>& links);

}  // namespace dehn

#endif  // DEHN_VALIDATION_HPP_
