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

#include <stdexcept>

#include "dehn/cubulation.hpp"
#include "dehn/triangulation.hpp"

namespace dehn {

std::size_t IdealTriangulation::add_tetrahedron() {
  records_.emplace_back();
  return records_.size() - 1;
}

void IdealTriangulation::glue(std::size_t tet, int face, std::size_t target, const Perm4& perm) {
  if (tet >= size() || target >= size() || face < 0 || face > 3)
    throw std::invalid_argument("tetrahedron gluing index out of range");
  if (!is_permutation(perm)) throw std::invalid_argument("gluing is not a permutation");
  int target_face = perm[face];
  if (tet == target && face == target_face)
    throw std::invalid_argument("a face cannot be glued to itself");
  if (record(tet, face) || record(target, target_face))
    throw std::invalid_argument("face already glued");
  records_[tet][face] = TetGluing{static_cast<std::uint32_t>(target), perm};
  records_[target][target_face] = TetGluing{static_cast<std::uint32_t>(tet), inverse(perm)};
}

void IdealTriangulation::set_record(std::size_t tet, int face, std::optional<TetGluing> record) {
  records_.at(tet).at(static_cast<std::size_t>(face)) = record;
}

IdealTriangulation relabel(const IdealTriangulation& t, const std::vector<std::size_t>& tet_map,
                           const std::vector<Perm4>& vertex_maps) {
  IdealTriangulation out(t.size());
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (int f = 0; f < 4; ++f) {
      const auto& r = t.record(a, f);
      if (!r) continue;
      // new_perm = vb ∘ perm ∘ va^{-1}
      Perm4 p = compose(vertex_maps[r->tet], compose(r->perm, inverse(vertex_maps[a])));
      out.set_record(tet_map[a], vertex_maps[a][f],
                     TetGluing{static_cast<std::uint32_t>(tet_map[r->tet]), p});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t IdealCubulation::add_cube() {
  records_.emplace_back();
  return records_.size() - 1;
}

void IdealCubulation::glue(std::size_t cube, int face, std::size_t target, int target_face,
                           const CornerMap& corners) {
  if (cube >= size() || target >= size() || face < 0 || face >= kCubeFaces || target_face < 0 ||
      target_face >= kCubeFaces)
    throw std::invalid_argument("cube gluing index out of range");
  if (!is_permutation(corners)) throw std::invalid_argument("corner map is not a permutation");
  if (cube == target && face == target_face)
    throw std::invalid_argument("a face cannot be glued to itself");
  if (record(cube, face) || record(target, target_face))
    throw std::invalid_argument("face already glued");
  records_[cube][face] =
      CubeGluing{static_cast<std::uint32_t>(target), static_cast<std::uint8_t>(target_face), corners};
  records_[target][target_face] =
      CubeGluing{static_cast<std::uint32_t>(cube), static_cast<std::uint8_t>(face), inverse(corners)};
}

void IdealCubulation::set_record(std::size_t cube, int face, std::optional<CubeGluing> record) {
  records_.at(cube).at(static_cast<std::size_t>(face)) = record;
}

int IdealCubulation::glued_vertex(std::size_t cube, int face, int vertex) const {
  const auto& r = record(cube, face);
  return face_corner(r->face, r->corners[corner_position(face, vertex)]);
}

IdealCubulation relabel(const IdealCubulation& c, const std::vector<std::size_t>& cube_map,
                        const std::vector<int>& syms) {
  IdealCubulation out(c.size());
  const auto& all = cube_syms();
  for (std::size_t a = 0; a < c.size(); ++a) {
    const CubeSym& ga = all[syms[a]];
    for (int f = 0; f < kCubeFaces; ++f) {
      const auto& r = c.record(a, f);
      if (!r) continue;
      const CubeSym& gb = all[syms[r->cube]];
      int new_face = ga.apply_face(f);
      int new_target_face = gb.apply_face(r->face);
      CornerMap m{};
      const CubeSym& ga_inv = all[cube_sym_inverse(syms[a])];
      for (int p = 0; p < 4; ++p) {
        // New corner p of new_face is the image of old vertex u on f.
        int u = ga_inv.apply_vertex(face_corner(new_face, p));
        int target_old = face_corner(r->face, r->corners[corner_position(f, u)]);
        m[p] = static_cast<std::uint8_t>(corner_position(new_target_face, gb.apply_vertex(target_old)));
      }
      out.set_record(cube_map[a], new_face,
                     CubeGluing{static_cast<std::uint32_t>(cube_map[r->cube]),
                                static_cast<std::uint8_t>(new_target_face), m});
    }
  }
  return out;
}

}  // namespace dehn
