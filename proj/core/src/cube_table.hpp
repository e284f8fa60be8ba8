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

// Flat gluing table for cubulations whose corner maps are known to be
// dihedral. Used by the canonical-form code and the census generator.

#ifndef DEHN_SRC_CUBE_TABLE_HPP_
#define DEHN_SRC_CUBE_TABLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dehn/cubulation.hpp"

namespace dehn::detail {

struct CubeTable {
  int cubes = 0;
  // Indexed by cube*6 + face.
  std::vector<int> partner;            // cube*6 + face of the partner
  std::vector<std::uint8_t> dihedral;  // corner map index

  explicit CubeTable(int k = 0) : cubes(k), partner(6 * k, -1), dihedral(6 * k, 0) {}
};

// Requires total, involutive, dihedral records.
CubeTable to_table(const IdealCubulation& c);
IdealCubulation from_table(const CubeTable& t);

// Token sequence of the breadth-first relabelling started at `start` with
// cube symmetry `sym`; each token is label*48 + face*8 + dihedral. Returns
// false if the table is disconnected.
bool bfs_tokens(const CubeTable& t, int start, int sym, std::vector<int>* tokens);

std::vector<int> canonical_tokens(const CubeTable& t);

// True iff the table's own token sequence (cube 0, identity frame) is the
// lexicographic minimum over all starts. Aborts each start at the first
// differing token.
bool is_canonical(const CubeTable& t);

// The same test on a table whose cubes 0..complete-1 carry all their
// records: false if some relabelling already beats the table within the
// first `complete` cubes, which rules out every completion.
bool is_canonical_prefix(const CubeTable& t, int complete);

std::string encode_cube_tokens(int cubes, const std::vector<int>& tokens);

int dihedral_compose(int a, int b);

}  // namespace dehn::detail

#endif  // DEHN_SRC_CUBE_TABLE_HPP_
