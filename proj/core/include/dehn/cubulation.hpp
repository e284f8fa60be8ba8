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

#ifndef DEHN_CUBULATION_HPP_
#define DEHN_CUBULATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dehn/combinatorics.hpp"

namespace dehn {

// Gluing of one cube face onto face `face` of cube `cube`. Corner position p
// of the source face is identified with corner position corners[p] of the
// target face (positions as in combinatorics.hpp).
struct CubeGluing {
  std::uint32_t cube = 0;
  std::uint8_t face = 0;
  CornerMap corners = kIdentityCorners;

  friend bool operator==(const CubeGluing&, const CubeGluing&) = default;
};

class IdealCubulation {
 public:
  IdealCubulation() = default;
  explicit IdealCubulation(std::size_t cubes) : records_(cubes) {}

  std::size_t size() const { return records_.size(); }
  std::size_t add_cube();

  // Glues (cube, face) to (target, target_face) and sets the inverse record.
  // Throws std::invalid_argument on out-of-range indices, a face glued to
  // itself, a face that already carries a record, or a corner map that is
  // not a permutation of 0..3.
  void glue(std::size_t cube, int face, std::size_t target, int target_face,
            const CornerMap& corners);

  void set_record(std::size_t cube, int face, std::optional<CubeGluing> record);
  const std::optional<CubeGluing>& record(std::size_t cube, int face) const {
    return records_[cube][static_cast<std::size_t>(face)];
  }

  // Cube vertex on the partner side identified with `vertex` of (cube, face).
  // Requires a record whose corner map is a permutation.
  int glued_vertex(std::size_t cube, int face, int vertex) const;

  friend bool operator==(const IdealCubulation&, const IdealCubulation&) = default;

 private:
  std::vector<std::array<std::optional<CubeGluing>, kCubeFaces>> records_;
};

// Relabels cubes by `cube_map` (old -> new) and applies cube symmetry
// cube_syms()[syms[c]] to old cube c.
IdealCubulation relabel(const IdealCubulation& c, const std::vector<std::size_t>& cube_map,
                        const std::vector<int>& syms);

}  // namespace dehn

#endif  // DEHN_CUBULATION_HPP_
