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

// Shared helpers for the test binaries: fixture paths and random complexes.

#ifndef DEHN_TESTS_TEST_SUPPORT_HPP_
#define DEHN_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dehn/cubulation.hpp"
#include "dehn/gluing_io.hpp"
#include "dehn/triangulation.hpp"
#include "dehn/validation.hpp"

namespace dehn::testing {

inline std::string fixture(const std::string& name) {
  return std::string(DEHN_FIXTURE_DIR) + "/" + name;
}

inline IdealCubulation coordinate_planes() {
  return read_cubulation_file(fixture("s3_coordinate_planes.cub"));
}

inline IdealCubulation two_cube_torus() { return read_cubulation_file(fixture("t3_two_cubes.cub")); }

inline IdealTriangulation two_tet_sphere() {
  return read_triangulation_file(fixture("s3_two_tetrahedra.tri"));
}

// Random face pairing with random dihedral corner maps; not necessarily
// valid.
inline IdealCubulation random_cube_gluing(std::size_t k, std::mt19937_64& rng) {
  IdealCubulation c(k);
  std::vector<int> faces(6 * k);
  std::iota(faces.begin(), faces.end(), 0);
  std::shuffle(faces.begin(), faces.end(), rng);
  std::uniform_int_distribution<int> dihedral(0, kDihedralCount - 1);
  for (std::size_t i = 0; i + 1 < faces.size(); i += 2) {
    c.glue(faces[i] / 6, faces[i] % 6, faces[i + 1] / 6, faces[i + 1] % 6,
           dihedral_maps()[dihedral(rng)]);
  }
  return c;
}

inline IdealCubulation random_valid_cubulation(std::size_t k, std::mt19937_64& rng) {
  for (;;) {
    auto c = random_cube_gluing(k, rng);
    if (validate(c).ok()) return c;
  }
}

inline IdealTriangulation random_tet_gluing(std::size_t n, std::mt19937_64& rng) {
  IdealTriangulation t(n);
  std::vector<int> faces(4 * n);
  std::iota(faces.begin(), faces.end(), 0);
  std::shuffle(faces.begin(), faces.end(), rng);
  std::uniform_int_distribution<int> pick(0, 5);
  for (std::size_t i = 0; i + 1 < faces.size(); i += 2) {
    int f = faces[i] % 4;
    int g = faces[i + 1] % 4;
    // Permutations sending f to g.
    std::vector<Perm4> options;
    for (const auto& p : all_perm4())
      if (p[f] == g) options.push_back(p);
    t.glue(faces[i] / 4, f, faces[i + 1] / 4, options[pick(rng)]);
  }
  return t;
}

inline IdealTriangulation random_valid_triangulation(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto t = random_tet_gluing(n, rng);
    if (validate(t).ok()) return t;
  }
}

inline IdealCubulation random_relabel(const IdealCubulation& c, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> syms(c.size());
  std::uniform_int_distribution<int> pick(0, kCubeSymCount - 1);
  for (auto& s : syms) s = pick(rng);
  return relabel(c, perm, syms);
}

inline IdealTriangulation random_relabel(const IdealTriangulation& t, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(t.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Perm4> maps(t.size());
  std::uniform_int_distribution<int> pick(0, 23);
  for (auto& m : maps) m = all_perm4()[pick(rng)];
  return relabel(t, perm, maps);
}

}  // namespace dehn::testing

#endif  // DEHN_TESTS_TEST_SUPPORT_HPP_
