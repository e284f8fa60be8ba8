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

#include "dehn/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dehn {

bool is_permutation(const Perm4& p) {
  unsigned seen = 0;
  for (auto x : p) {
    if (x > 3) return false;
    seen |= 1u << x;
  }
  return seen == 0xF;
}

Perm4 inverse(const Perm4& p) {
  Perm4 out{};
  for (std::uint8_t i = 0; i < 4; ++i) out[p[i]] = i;
  return out;
}

Perm4 compose(const Perm4& a, const Perm4& b) {
  Perm4 out{};
  for (int i = 0; i < 4; ++i) out[i] = a[b[i]];
  return out;
}

const std::array<Perm4, 24>& all_perm4() {
  static const std::array<Perm4, 24> perms = [] {
    std::array<Perm4, 24> out{};
    Perm4 p = kIdentityPerm4;
    int i = 0;
    do {
      out[i++] = p;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

int perm4_index(const Perm4& p) {
  const auto& all = all_perm4();
  auto it = std::lower_bound(all.begin(), all.end(), p);
  if (it == all.end() || *it != p) throw std::invalid_argument("not a permutation");
  return static_cast<int>(it - all.begin());
}

std::string to_string(const Perm4& p) {
  std::ostringstream os;
  os << int(p[0]) << ' ' << int(p[1]) << ' ' << int(p[2]) << ' ' << int(p[3]);
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

struct FaceTables {
  std::array<std::array<int, 4>, kCubeFaces> corner{};
  std::array<std::array<int, kCubeVertices>, kCubeFaces> position{};
};

const FaceTables& face_tables() {
  static const FaceTables tables = [] {
    FaceTables t{};
    for (int f = 0; f < kCubeFaces; ++f) {
      t.position[f].fill(-1);
      int pos = 0;
      for (int v = 0; v < kCubeVertices; ++v) {
        if (cube_bit(v, face_axis(f)) == face_side(f)) {
          t.corner[f][pos] = v;
          t.position[f][v] = pos;
          ++pos;
        }
      }
    }
    return t;
  }();
  return tables;
}

bool adjacent_positions(int p, int q) { return (p ^ q) == 1 || (p ^ q) == 2; }

struct DihedralTables {
  std::array<CornerMap, kDihedralCount> maps{};
  // Keyed by the 8-bit packing m[0] | m[1]<<2 | m[2]<<4 | m[3]<<6.
  std::array<std::int8_t, 256> index{};
  std::array<int, kDihedralCount> inverse{};
};

int pack(const CornerMap& m) {
  return (m[0] & 3) | ((m[1] & 3) << 2) | ((m[2] & 3) << 4) | ((m[3] & 3) << 6);
}

const DihedralTables& dihedral_tables() {
  static const DihedralTables tables = [] {
    DihedralTables t{};
    t.index.fill(-1);
    Perm4 p = kIdentityPerm4;
    int n = 0;
    do {
      bool ok = true;
      for (int a = 0; a < 4 && ok; ++a)
        for (int b = 0; b < 4 && ok; ++b)
          if (adjacent_positions(a, b) != adjacent_positions(p[a], p[b])) ok = false;
      if (ok) {
        t.maps[n] = p;
        t.index[pack(p)] = static_cast<std::int8_t>(n);
        ++n;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    for (int i = 0; i < kDihedralCount; ++i)
      t.inverse[i] = t.index[pack(inverse(t.maps[i]))];
    return t;
  }();
  return tables;
}

struct SymTables {
  std::array<CubeSym, kCubeSymCount> syms{};
  std::array<std::array<std::uint8_t, kCubeVertices>, kCubeSymCount> vertex{};
  std::array<int, kCubeSymCount> inverse{};
  // [from_face][to_face][dihedral] -> sym
  std::array<std::array<std::array<std::int8_t, kDihedralCount>, kCubeFaces>, kCubeFaces>
      from_face_map{};
  std::array<std::array<std::int8_t, kCubeFaces>, kCubeSymCount> induced{};
};

const SymTables& sym_tables() {
  static const SymTables tables = [] {
    SymTables t{};
    int n = 0;
    std::array<std::uint8_t, 3> axis{0, 1, 2};
    do {
      for (std::uint8_t flip = 0; flip < 8; ++flip) {
        t.syms[n].axis = axis;
        t.syms[n].flip = flip;
        ++n;
      }
    } while (std::next_permutation(axis.begin(), axis.end()));
    for (int s = 0; s < kCubeSymCount; ++s)
      for (int v = 0; v < kCubeVertices; ++v)
        t.vertex[s][v] = static_cast<std::uint8_t>(t.syms[s].apply_vertex(v));
    for (int s = 0; s < kCubeSymCount; ++s) {
      for (int r = 0; r < kCubeSymCount; ++r) {
        bool inv = true;
        for (int v = 0; v < kCubeVertices; ++v)
          if (t.vertex[r][t.vertex[s][v]] != v) inv = false;
        if (inv) t.inverse[s] = r;
      }
    }
    for (auto& a : t.from_face_map)
      for (auto& b : a) b.fill(-1);
    const auto& ft = face_tables();
    for (int s = 0; s < kCubeSymCount; ++s) {
      for (int f = 0; f < kCubeFaces; ++f) {
        int g = t.syms[s].apply_face(f);
        CornerMap m{};
        for (int p = 0; p < 4; ++p)
          m[p] = static_cast<std::uint8_t>(ft.position[g][t.vertex[s][ft.corner[f][p]]]);
        int d = dihedral_tables().index[pack(m)];
        t.from_face_map[f][g][d] = static_cast<std::int8_t>(s);
        t.induced[s][f] = static_cast<std::int8_t>(d);
      }
    }
    return t;
  }();
  return tables;
}

}  // namespace

int face_corner(int face, int pos) { return face_tables().corner[face][pos]; }

int corner_position(int face, int vertex) { return face_tables().position[face][vertex]; }

bool vertex_on_face(int face, int vertex) {
  return cube_bit(vertex, face_axis(face)) == face_side(face);
}

const std::array<CornerMap, kDihedralCount>& dihedral_maps() { return dihedral_tables().maps; }

std::optional<int> dihedral_index(const CornerMap& m) {
  for (auto x : m)
    if (x > 3) return std::nullopt;
  int idx = dihedral_tables().index[pack(m)];
  if (idx < 0) return std::nullopt;
  return idx;
}

int dihedral_inverse(int index) { return dihedral_tables().inverse[index]; }

bool swaps_diagonals(int index) {
  const auto& m = dihedral_tables().maps[index];
  return m[0] != 0 && m[0] != 3;
}

int CubeSym::apply_vertex(int v) const {
  int out = 0;
  for (int i = 0; i < 3; ++i) {
    int b = cube_bit(v, i) ^ ((flip >> i) & 1);
    if (b) out |= axis_mask(axis[i]);
  }
  return out;
}

int CubeSym::apply_face(int f) const {
  int i = face_axis(f);
  return 2 * axis[i] + (face_side(f) ^ ((flip >> i) & 1));
}

const std::array<CubeSym, kCubeSymCount>& cube_syms() { return sym_tables().syms; }

int cube_sym_inverse(int index) { return sym_tables().inverse[index]; }

int cube_sym_from_face_map(int from_face, int to_face, int dihedral) {
  return sym_tables().from_face_map[from_face][to_face][dihedral];
}

int induced_dihedral(int sym, int face) { return sym_tables().induced[sym][face]; }

}  // namespace dehn
