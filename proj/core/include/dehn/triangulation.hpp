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

#ifndef DEHN_TRIANGULATION_HPP_
#define DEHN_TRIANGULATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dehn/combinatorics.hpp"

namespace dehn {

// Face f of a tetrahedron is the face opposite vertex f. A gluing of face f
// of tetrahedron t sends vertex labels of t to vertex labels of `tet`
// through `perm`, and the target face is perm[f].
struct TetGluing {
  std::uint32_t tet = 0;
  Perm4 perm = kIdentityPerm4;

  friend bool operator==(const TetGluing&, const TetGluing&) = default;
};

// Gluing table of an ideal triangulation. The table may be incomplete or
// inconsistent; validate() decides whether it presents a complex.
class IdealTriangulation {
 public:
  IdealTriangulation() = default;
  explicit IdealTriangulation(std::size_t tetrahedra) : records_(tetrahedra) {}

  std::size_t size() const { return records_.size(); }
  std::size_t add_tetrahedron();

  // Glues face `face` of `tet` and sets the inverse record on the partner.
  // Throws std::invalid_argument when either face already carries a record,
  // when indices are out of range, or when a face would be glued to itself.
  void glue(std::size_t tet, int face, std::size_t target, const Perm4& perm);

  // Raw one-sided access, used to build deliberately broken tables.
  void set_record(std::size_t tet, int face, std::optional<TetGluing> record);
  const std::optional<TetGluing>& record(std::size_t tet, int face) const {
    return records_[tet][static_cast<std::size_t>(face)];
  }

  friend bool operator==(const IdealTriangulation&, const IdealTriangulation&) = default;

 private:
  std::vector<std::array<std::optional<TetGluing>, 4>> records_;
};

// Relabels tetrahedra by `tet_map` (old -> new) and vertices of old
// tetrahedron t by `vertex_maps[t]` (old label -> new label).
IdealTriangulation relabel(const IdealTriangulation& t, const std::vector<std::size_t>& tet_map,
                           const std::vector<Perm4>& vertex_maps);

}  // namespace dehn

#endif  // DEHN_TRIANGULATION_HPP_
