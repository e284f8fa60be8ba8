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

// Small fixed-size permutation groups used by the gluing tables:
//   * Perm4       - permutations of the four vertex labels of a tetrahedron.
//   * square maps - the 8 dihedral symmetries of a square, acting on the
//                   canonical corner positions 0..3 of a cube face.
//   * CubeSym     - the 48 symmetries of the cube (signed axis permutations).
//
// Cube conventions: a cube vertex is a bitstring (b0,b1,b2) stored as the
// integer b0*4 + b1*2 + b2, so lexicographic order on bitstrings is integer
// order. Face 2i+s is {v : b_i(v) = s}. The corners of a face are ordered
// by their vertex integers; corner position p therefore equals 2*b_j + b_k
// where j < k are the two free coordinates of the face.

#ifndef DEHN_COMBINATORICS_HPP_
#define DEHN_COMBINATORICS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace dehn {

using Perm4 = std::array<std::uint8_t, 4>;

inline constexpr Perm4 kIdentityPerm4{0, 1, 2, 3};

bool is_permutation(const Perm4& p);
Perm4 inverse(const Perm4& p);
// (a ∘ b)(i) = a[b[i]].
Perm4 compose(const Perm4& a, const Perm4& b);
// Index of p in the lexicographically sorted list of all 24 permutations.
int perm4_index(const Perm4& p);
const std::array<Perm4, 24>& all_perm4();
std::string to_string(const Perm4& p);

// ---------------------------------------------------------------------------
// Cube geometry.

inline constexpr int kCubeVertices = 8;
inline constexpr int kCubeFaces = 6;

constexpr int cube_bit(int vertex, int axis) { return (vertex >> (2 - axis)) & 1; }
constexpr int axis_mask(int axis) { return 1 << (2 - axis); }
constexpr int face_axis(int face) { return face / 2; }
constexpr int face_side(int face) { return face % 2; }
constexpr int opposite_face(int face) { return face ^ 1; }
constexpr int vertex_parity(int vertex) {
  return ((vertex >> 2) ^ (vertex >> 1) ^ vertex) & 1;
}

// Cube vertex at canonical corner position `pos` of `face`.
int face_corner(int face, int pos);
// Inverse of face_corner; -1 when `vertex` is not on `face`.
int corner_position(int face, int vertex);
bool vertex_on_face(int face, int vertex);

// Dihedral corner maps. A corner map m sends corner position p of the
// source face to position m[p] of the target face.
using CornerMap = std::array<std::uint8_t, 4>;

inline constexpr int kDihedralCount = 8;
inline constexpr CornerMap kIdentityCorners{0, 1, 2, 3};

const std::array<CornerMap, kDihedralCount>& dihedral_maps();
// Index into dihedral_maps(), or nullopt when m is not a square symmetry
// (including the case where m is not a permutation at all).
std::optional<int> dihedral_index(const CornerMap& m);
int dihedral_inverse(int index);
// Whether the map exchanges the two diagonals {0,3} and {1,2}.
bool swaps_diagonals(int index);

// Signed axis permutation: old axis i goes to new axis axis[i], and the
// coordinate is complemented when bit i of flip is set.
struct CubeSym {
  std::array<std::uint8_t, 3> axis{0, 1, 2};
  std::uint8_t flip = 0;

  int apply_vertex(int v) const;
  int apply_face(int f) const;
};

inline constexpr int kCubeSymCount = 48;

const std::array<CubeSym, kCubeSymCount>& cube_syms();
int cube_sym_inverse(int index);
// Index of the symmetry that maps `from_face` onto `to_face` with corner map
// dihedral_maps()[dihedral]. A cube symmetry is determined by this data.
int cube_sym_from_face_map(int from_face, int to_face, int dihedral);
// Dihedral index of the corner map induced on `face` by symmetry `sym`.
int induced_dihedral(int sym, int face);

}  // namespace dehn

#endif  // DEHN_COMBINATORICS_HPP_
