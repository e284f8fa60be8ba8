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

#include "dehn/conversions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "dehn/validation.hpp"

namespace dehn {

namespace {

void require_valid(const ValidationReport& r, const char* what) {
  if (!r.ok())
    throw std::invalid_argument(std::string("invalid ") + what + ": " + r.violations.front().message);
}

// Sorted vertices of a tetrahedron other than v.
std::array<int, 3> others(int v) {
  std::array<int, 3> w{};
  int k = 0;
  for (int u = 0; u < 4; ++u)
    if (u != v) w[k++] = u;
  return w;
}

int axis_of(int v, int w) {
  auto o = others(v);
  for (int i = 0; i < 3; ++i)
    if (o[i] == w) return i;
  return -1;
}

// Subset of tetrahedron vertices (bitmask over 0..3) -> cube vertex of the
// corner cube at v. The subset must contain v.
int cube_vertex(int v, unsigned subset) {
  auto o = others(v);
  int x = 0;
  for (int i = 0; i < 3; ++i)
    if (subset & (1u << o[i])) x |= axis_mask(i);
  return x;
}

unsigned subset_of(int v, int cube_vertex) {
  auto o = others(v);
  unsigned s = 1u << v;
  for (int i = 0; i < 3; ++i)
    if (cube_bit(cube_vertex, i)) s |= 1u << o[i];
  return s;
}

unsigned map_subset(const Perm4& p, unsigned s) {
  unsigned out = 0;
  for (int u = 0; u < 4; ++u)
    if (s & (1u << u)) out |= 1u << p[u];
  return out;
}

}  // namespace

IdealCubulation triangulation_to_cubulation(const IdealTriangulation& t) {
  require_valid(validate(t), "triangulation");
  IdealCubulation c(4 * t.size());
  auto glue_once = [&](std::size_t a, int f, std::size_t b, int g, const auto& vertex_map) {
    if (c.record(a, f)) return;
    CornerMap m{};
    for (int p = 0; p < 4; ++p)
      m[p] = static_cast<std::uint8_t>(corner_position(g, vertex_map(face_corner(f, p))));
    c.glue(a, f, b, g, m);
  };
  for (std::size_t tet = 0; tet < t.size(); ++tet) {
    for (int v = 0; v < 4; ++v) {
      std::size_t cube = 4 * tet + v;
      auto o = others(v);
      for (int i = 0; i < 3; ++i) {
        int w = o[i];
        // Inside the tetrahedron: the square through the midpoint of vw.
        glue_once(cube, 2 * i + 1, 4 * tet + w, 2 * axis_of(w, v) + 1,
                  [&](int x) { return cube_vertex(w, subset_of(v, x)); });
        // On the tetrahedron face opposite w.
        const auto& r = *t.record(tet, w);
        int v2 = r.perm[v];
        glue_once(cube, 2 * i, 4 * r.tet + v2, 2 * axis_of(v2, r.perm[w]),
                  [&](int x) { return cube_vertex(v2, map_subset(r.perm, subset_of(v, x))); });
      }
    }
  }
  return c;
}

MismatchModel mismatch_model(const IdealCubulation& c) {
  MismatchModel m;
  m.cubes = static_cast<int>(c.size());
  m.incident.resize(c.size());
  for (std::size_t a = 0; a < c.size(); ++a)
    for (int f = 0; f < kCubeFaces; ++f) {
      const auto& r = *c.record(a, f);
      if (std::make_pair(std::size_t{r.cube}, int(r.face)) < std::make_pair(a, f)) continue;
      int v = face_corner(f, 0);
      int flip = vertex_parity(v) ^ vertex_parity(c.glued_vertex(a, f, v));
      if (r.cube == a) {
        m.constant += flip;
        continue;
      }
      int idx = static_cast<int>(m.pairs.size());
      m.pairs.push_back({static_cast<int>(a), static_cast<int>(r.cube), flip});
      m.incident[a].push_back(idx);
      m.incident[r.cube].push_back(idx);
    }
  return m;
}

int MismatchModel::mismatches(const OrientationBits& bits) const {
  int n = constant;
  for (const auto& p : pairs) n += bits[p.a] ^ bits[p.b] ^ p.flip;
  return n;
}

CubeSplitting cubulation_to_triangulation(const IdealCubulation& c, const OrientationBits& bits) {
  require_valid(validate(c), "cubulation");
  if (bits.size() != c.size()) throw std::invalid_argument("need one orientation bit per cube");

  // Corner tetrahedron index of apex u within its cube, and its vertices.
  auto corner_slot = [&](std::size_t cube, int u) {
    int slot = 0;
    for (int w = 0; w < u; ++w) slot += vertex_parity(w) != bits[cube];
    return 5 * cube + 1 + slot;
  };
  auto label_in = [](const std::array<int, 4>& verts, int v) {
    for (int i = 0; i < 4; ++i)
      if (verts[i] == v) return i;
    return -1;
  };
  auto central_vertices = [&](std::size_t cube) {
    std::array<int, 4> out{};
    int k = 0;
    for (int v = 0; v < 8; ++v)
      if (vertex_parity(v) == bits[cube]) out[k++] = v;
    return out;
  };
  auto corner_vertices = [](int u) {
    std::array<int, 4> out{u, u ^ 1, u ^ 2, u ^ 4};
    std::sort(out.begin(), out.end());
    return out;
  };

  IdealTriangulation t(5 * c.size());
  for (std::size_t a = 0; a < c.size(); ++a) {
    auto central = central_vertices(a);
    for (int u = 0; u < 8; ++u) {
      if (vertex_parity(u) == bits[a]) continue;
      auto corner = corner_vertices(u);
      Perm4 p{};
      for (int i = 0; i < 4; ++i) {
        int x = corner[i] == u ? u ^ 7 : corner[i];
        p[i] = static_cast<std::uint8_t>(label_in(central, x));
      }
      t.glue(corner_slot(a, u), label_in(corner, u), 5 * a, p);
    }
  }

  int insertions = 0;
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (int f = 0; f < kCubeFaces; ++f) {
      const auto& r = *c.record(a, f);
      std::size_t b = r.cube;
      int g = r.face;
      if (std::make_pair(b, g) < std::make_pair(a, f)) continue;
      int mask_f = axis_mask(face_axis(f));
      int mask_g = axis_mask(face_axis(g));
      // Off-diagonal corners of f in cube a.
      std::array<int, 2> anti{};
      std::array<int, 2> diag{};
      int na = 0;
      int nd = 0;
      for (int p = 0; p < 4; ++p) {
        int v = face_corner(f, p);
        if (vertex_parity(v) == bits[a]) {
          diag[nd++] = v;
        } else {
          anti[na++] = v;
        }
      }
      bool match = vertex_parity(c.glued_vertex(a, f, diag[0])) == bits[b];
      if (match) {
        for (int u : anti) {
          int gu = c.glued_vertex(a, f, u);
          auto src = corner_vertices(u);
          auto dst = corner_vertices(gu);
          Perm4 p{};
          for (int i = 0; i < 4; ++i) {
            int x = src[i];
            int y = vertex_on_face(f, x) ? c.glued_vertex(a, f, x) : gu ^ mask_g;
            p[i] = static_cast<std::uint8_t>(label_in(dst, y));
          }
          t.glue(corner_slot(a, u), label_in(src, u ^ mask_f), corner_slot(b, gu), p);
        }
        continue;
      }
      ++insertions;
      std::size_t ins = t.add_tetrahedron();
      // a's triangle at u faces the insertion face opposite the other anti
      // corner.
      for (int i = 0; i < 2; ++i) {
        int u = anti[i];
        auto src = corner_vertices(u);
        Perm4 p{};
        for (int j = 0; j < 4; ++j) {
          int x = src[j];
          p[j] = static_cast<std::uint8_t>(vertex_on_face(f, x) ? corner_position(f, x)
                                                                 : corner_position(f, anti[1 - i]));
        }
        t.glue(corner_slot(a, u), label_in(src, u ^ mask_f), ins, p);
      }
      // b's triangle at the image of diagonal corner d faces the insertion
      // face opposite the other diagonal corner.
      for (int i = 0; i < 2; ++i) {
        int w = c.glued_vertex(a, f, diag[i]);
        auto src = corner_vertices(w);
        Perm4 p{};
        for (int j = 0; j < 4; ++j) {
          int y = src[j];
          p[j] = static_cast<std::uint8_t>(vertex_on_face(g, y)
                                               ? corner_position(f, c.glued_vertex(b, g, y))
                                               : corner_position(f, diag[1 - i]));
        }
        t.glue(corner_slot(b, w), label_in(src, w ^ mask_g), ins, p);
      }
    }
  }
  return {std::move(t), insertions, bits};
}

}  // namespace dehn
