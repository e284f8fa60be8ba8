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


// Dehn loops on compact surfaces as ribbon graphs.
//
// A diagram has `crossings` 4-valent vertices whose slots 0..3 are in
// cyclic order, slots s and s+2 lying on the same strand. Edges join two
// slots and carry a twist bit; a crossing-free loop is a free circle with
// its own twist bit. A missing twist leaves the diagram a bare loop, which
// does not determine a surface.
//
// Text form, statements separated by ';' or newlines, '#' comments:
//   crossings=<c>
//   edge <x>.<s> <y>.<t> [twist=<0|1>]
//   loop [twist=<0|1>]
//
// The dual square complex has one square per crossing; side s of square x
// is glued to side t of square y for every edge x.s -- y.t, reversing the
// orientation-compatible identification when the edge is twisted.
//   squares=<k>
//   side <x>.<s> <y>.<t> flip=<0|1>

#ifndef DEHN_SURFACE2D_HPP_
#define DEHN_SURFACE2D_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dehn/surface.hpp"

namespace dehn {

struct LoopSlot {
  int crossing = 0;
  int slot = 0;
  friend auto operator<=>(const LoopSlot&, const LoopSlot&) = default;
};

struct LoopEdge {
  LoopSlot a, b;
  std::optional<int> twist;
  friend bool operator==(const LoopEdge&, const LoopEdge&) = default;
};

struct DehnLoopDiagram {
  int crossings = 0;
  std::vector<LoopEdge> edges;
  std::vector<std::optional<int>> free_loops;  // twist of each free circle

  // True when every edge and free loop carries a twist bit.
  bool has_ribbon() const;
  friend bool operator==(const DehnLoopDiagram&, const DehnLoopDiagram&) = default;
};

// Empty when every slot is used exactly once and the diagram is connected
// and nonempty.
std::vector<std::string> diagram_problems(const DehnLoopDiagram& d);

// Number of immersed circles; independent of the ribbon data.
int strand_count(const DehnLoopDiagram& d);

// Throws std::invalid_argument for a malformed diagram or a bare loop.
SurfaceDescriptor thicken(const DehnLoopDiagram& d);

// Reverses the cyclic order at every crossing.
DehnLoopDiagram mirror(const DehnLoopDiagram& d);

// Throws std::invalid_argument for an inconsistent descriptor.
int loop_complexity(const SurfaceDescriptor& s);

bool is_quasi_filling(const DehnLoopDiagram& d, const SurfaceDescriptor& target);
bool is_filling(const DehnLoopDiagram& d);

// Isomorphism-invariant code of a ribbon diagram: minimum over crossing
// relabellings and dihedral frames, where reflecting a crossing toggles
// the twist of every edge at it.
std::string canonical_code(const DehnLoopDiagram& d);

// One representative per isomorphism class of connected ribbon diagrams
// with exactly `crossings` crossings, sorted by canonical code.
std::vector<DehnLoopDiagram> enumerate_loop_diagrams(int crossings);

struct LcSearch {
  std::optional<int> crossings;      // minimum found
  std::optional<DehnLoopDiagram> witness;
  std::vector<long> classes;         // per crossing count examined
};

LcSearch brute_force_lc(const SurfaceDescriptor& target, int max_crossings);

struct SquarePairing {
  int square = 0;
  int side = 0;
  bool flip = false;
  friend bool operator==(const SquarePairing&, const SquarePairing&) = default;
};

struct SquareCubulation2D {
  int squares = 0;
  std::vector<std::optional<SquarePairing>> pairing;  // square*4 + side

  explicit SquareCubulation2D(int k = 0) : squares(k), pairing(4 * k) {}
  void glue(int a, int s, int b, int t, bool flip);
  friend bool operator==(const SquareCubulation2D&, const SquareCubulation2D&) = default;
};

// Empty when total, involutive (no side glued to itself) and connected.
std::vector<std::string> cubulation_problems(const SquareCubulation2D& q);
// Closed surface of a valid square complex.
SurfaceDescriptor square_surface(const SquareCubulation2D& q);

// Throws std::invalid_argument for a bare loop (either square gluing fits
// each edge), a diagram without crossings, or a malformed diagram.
SquareCubulation2D loop_to_squares(const DehnLoopDiagram& d);
// Throws std::invalid_argument unless q is valid.
DehnLoopDiagram squares_to_loop(const SquareCubulation2D& q);

// Both throw std::invalid_argument with the statement number on bad input.
DehnLoopDiagram parse_loop_diagram(const std::string& text);
SquareCubulation2D parse_square_cubulation(const std::string& text);
std::string to_text(const DehnLoopDiagram& d);
std::string to_text(const SquareCubulation2D& q);
DehnLoopDiagram read_loop_diagram_file(const std::string& path);

}  // namespace dehn

#endif  // DEHN_SURFACE2D_HPP_
