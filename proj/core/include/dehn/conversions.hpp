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

// Conversions between ideal triangulations and ideal cubulations.
//
// Triangulation to cubulation: tetrahedron t contributes four cubes, cube
// 4t+v sitting at corner v. The axes of that cube correspond to the other
// three vertices w_0 < w_1 < w_2, and cube vertex (b_0, b_1, b_2) stands for
// the barycentre of the face spanned by v and the w_i with b_i = 1.
//
// Cubulation to triangulation: bit x_a picks the central tetrahedron of
// cube a on the corners of parity x_a (1 + 4 tetrahedra per cube, indices
// 5a .. 5a+4, corner tetrahedra by increasing apex). A face pair whose
// diagonals disagree gets one flat insertion tetrahedron whose vertex
// labels are the corner positions of the lower-indexed side of the pair.

#ifndef DEHN_CONVERSIONS_HPP_
#define DEHN_CONVERSIONS_HPP_

#include <cstdint>
#include <vector>

#include "dehn/cubulation.hpp"
#include "dehn/triangulation.hpp"

namespace dehn {

using OrientationBits = std::vector<std::uint8_t>;

// Throws std::invalid_argument if t does not validate.
IdealCubulation triangulation_to_cubulation(const IdealTriangulation& t);

struct CubeSplitting {
  IdealTriangulation triangulation;
  int insertions = 0;
  OrientationBits bits;
};

// Throws std::invalid_argument if c does not validate or bits has the wrong
// length.
CubeSplitting cubulation_to_triangulation(const IdealCubulation& c, const OrientationBits& bits);

// The XOR model behind the insertion count: face pair p between cubes a
// and b needs an insertion iff x_a ^ x_b ^ flip == 1. Self-gluings of a
// cube do not depend on the bits and are folded into `constant`.
struct MismatchModel {
  struct Pair {
    int a = 0;
    int b = 0;
    int flip = 0;
  };
  int cubes = 0;
  int constant = 0;
  std::vector<Pair> pairs;
  std::vector<std::vector<int>> incident;  // per cube: indices into pairs

  int mismatches(const OrientationBits& bits) const;
};

// One entry per face class: does the gluing change vertex parity.
MismatchModel mismatch_model(const IdealCubulation& c);

struct OptimizeOptions {
  int exhaustive_max = 20;
  std::uint64_t seed = 0;
  int restarts = 8;
  int threads = 1;
};

struct OrientationChoice {
  OrientationBits bits;
  int mismatches = 0;
  bool exhaustive = false;
};

// Exact minimum over all 2^k assignments; ties go to the lexicographically
// smallest bit vector.
OrientationChoice exhaustive_orientations(const MismatchModel& m, int threads = 1);
// Greedy start plus single-flip descent, then seeded random restarts.
OrientationChoice local_search_orientations(const MismatchModel& m, std::uint64_t seed,
                                            int restarts);
OrientationChoice optimize_orientations(const IdealCubulation& c, const OptimizeOptions& opts = {});

}  // namespace dehn

#endif  // DEHN_CONVERSIONS_HPP_
