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


#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "dehn/surface2d.hpp"
#include "test_support.hpp"

namespace dehn {
namespace {

namespace s = surfaces;

DehnLoopDiagram figure_eight() { return read_loop_diagram_file(testing::fixture("figure_eight.dl")); }

DehnLoopDiagram free_loop(int twist) {
  DehnLoopDiagram d;
  d.free_loops = {twist};
  return d;
}

// Boundary walk on the signed rotation system: a state is (crossing, slot
// just arrived at, direction); every boundary circle is traced once in
// each direction. Orientability from the parity of twists around cycles.
SurfaceDescriptor walk_oracle(const DehnLoopDiagram& d) {
  if (d.crossings == 0) return *d.free_loops[0] ? s::kMobius : s::kAnnulus;
  int c = d.crossings;
  std::vector<int> partner(4 * c), twist(4 * c);
  for (const auto& e : d.edges) {
    int a = e.a.crossing * 4 + e.a.slot, b = e.b.crossing * 4 + e.b.slot;
    partner[a] = b;
    partner[b] = a;
    twist[a] = twist[b] = *e.twist;
  }
  auto index = [](int v, int slot, int dir) { return (v * 4 + slot) * 2 + (dir > 0); };
  std::vector<int> seen(8 * c, 0);
  int orbits = 0;
  for (int v = 0; v < c; ++v)
    for (int slot = 0; slot < 4; ++slot)
      for (int dir : {1, -1}) {
        if (seen[index(v, slot, dir)]) continue;
        ++orbits;
        int x = v, y = slot, z = dir;
        while (!seen[index(x, y, z)]) {
          seen[index(x, y, z)] = 1;
          int out = (y + z + 4) % 4;
          int p = partner[x * 4 + out];
          z = twist[x * 4 + out] ? -z : z;
          x = p / 4;
          y = p % 4;
        }
      }
  std::vector<int> sign(c, -1);
  bool orientable = true;
  sign[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int slot = 0; slot < 4; ++slot) {
      int p = partner[v * 4 + slot];
      int want = sign[v] ^ twist[v * 4 + slot];
      if (sign[p / 4] < 0) {
        sign[p / 4] = want;
        stack.push_back(p / 4);
      } else if (sign[p / 4] != want) {
        orientable = false;
      }
    }
  }
  return {orientable, c - static_cast<int>(d.edges.size()), orbits / 2};
}

// All ribbon diagrams with c crossings, connected or not, without dedup.
std::vector<DehnLoopDiagram> all_raw(int c) {
  std::vector<DehnLoopDiagram> out;
  std::vector<int> partner(4 * c, -1);
  std::function<void()> rec = [&]() {
    int a = 0;
    while (a < 4 * c && partner[a] >= 0) ++a;
    if (a == 4 * c) {
      for (int mask = 0; mask < (1 << (2 * c)); ++mask) {
        DehnLoopDiagram d;
        d.crossings = c;
        int k = 0;
        for (int x = 0; x < 4 * c; ++x)
          if (partner[x] > x) d.edges.push_back({{x / 4, x % 4}, {partner[x] / 4, partner[x] % 4}, (mask >> k++) & 1});
        out.push_back(d);
      }
      return;
    }
    for (int b = a + 1; b < 4 * c; ++b) {
      if (partner[b] >= 0) continue;
      partner[a] = b;
      partner[b] = a;
      rec();
      partner[a] = partner[b] = -1;
    }
  };
  rec();
  return out;
}

// Applies the crossing permutation `perm` and per-crossing frames
// (rotation, reflection); reflections toggle incident twists.
DehnLoopDiagram act(const DehnLoopDiagram& d, const std::vector<int>& perm, const std::vector<int>& rot,
                    const std::vector<int>& refl) {
  DehnLoopDiagram out = d;
  auto map_slot = [&](LoopSlot x) {
    int v = x.crossing;
    int slot = refl[v] ? (rot[v] - x.slot + 8) % 4 : (x.slot + rot[v]) % 4;
    return LoopSlot{perm[v], slot};
  };
  for (auto& e : out.edges) {
    int t = *e.twist ^ refl[e.a.crossing] ^ refl[e.b.crossing];
    e = LoopEdge{map_slot(e.a), map_slot(e.b), t};
  }
  return out;
}

// Canonical key for orbit counting: sorted edge list.
std::string edge_key(const DehnLoopDiagram& d) {
  std::vector<std::tuple<int, int, int, int, int>> es;
  for (const auto& e : d.edges) {
    auto a = std::make_pair(e.a.crossing, e.a.slot), b = std::make_pair(e.b.crossing, e.b.slot);
    if (b < a) std::swap(a, b);
    es.emplace_back(a.first, a.second, b.first, b.second, *e.twist);
  }
  std::sort(es.begin(), es.end());
  std::ostringstream os;
  for (const auto& [p, q, r, t, u] : es) os << p << q << r << t << u << ';';
  return os.str();
}

// Number of isomorphism classes of connected ribbon diagrams with c
// crossings, by explicit orbits of the full symmetry group.
std::size_t orbit_count(int c) {
  std::set<std::string> done;
  std::size_t orbits = 0;
  for (const auto& d : all_raw(c)) {
    if (!diagram_problems(d).empty()) continue;
    if (done.count(edge_key(d))) continue;
    ++orbits;
    std::vector<int> perm(c);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int frames = 0; frames < (1 << (3 * c)); ++frames) {
        std::vector<int> rot(c), refl(c);
        for (int v = 0; v < c; ++v) {
          rot[v] = (frames >> (3 * v)) & 3;
          refl[v] = (frames >> (3 * v + 2)) & 1;
        }
        done.insert(edge_key(act(d, perm, rot, refl)));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return orbits;
}

TEST(Surface2dTest, ThickenExamples) {
  EXPECT_EQ(thicken(free_loop(0)), s::kAnnulus);
  EXPECT_EQ(thicken(free_loop(1)), s::kMobius);
  auto f = figure_eight();
  EXPECT_EQ(thicken(f), (SurfaceDescriptor{true, -1, 1}));
  EXPECT_EQ(strand_count(f), 2);
}

TEST(Surface2dTest, ThickenMatchesBoundaryWalk) {
  for (int c = 1; c <= 2; ++c)
    for (const auto& d : all_raw(c)) {
      if (!diagram_problems(d).empty()) continue;
      auto t = thicken(d);
      EXPECT_EQ(t, walk_oracle(d)) << to_text(d);
      EXPECT_EQ(t.chi, d.crossings - static_cast<int>(d.edges.size()));
    }
  for (const auto& d : enumerate_loop_diagrams(3)) EXPECT_EQ(thicken(d), walk_oracle(d)) << to_text(d);
}

TEST(Surface2dTest, MirrorIsHomeomorphic) {
  for (int c = 0; c <= 2; ++c)
    for (const auto& d : enumerate_loop_diagrams(c)) {
      EXPECT_EQ(thicken(mirror(d)), thicken(d)) << to_text(d);
      EXPECT_EQ(canonical_code(mirror(d)), canonical_code(d)) << to_text(d);
    }
}

TEST(Surface2dTest, StrandCountIgnoresRibbonData) {
  std::mt19937_64 rng(3);
  for (const auto& d : enumerate_loop_diagrams(2)) {
    auto e = d;
    for (auto& edge : e.edges) edge.twist = static_cast<int>(rng() & 1);
    EXPECT_EQ(strand_count(e), strand_count(d));
    EXPECT_EQ(strand_count(mirror(d)), strand_count(d));
    for (auto& edge : e.edges) edge.twist.reset();
    EXPECT_EQ(strand_count(e), strand_count(d));
  }
}

TEST(Surface2dTest, ClassCountsMatchOrbitEnumeration) {
  for (int c = 1; c <= 2; ++c) EXPECT_EQ(enumerate_loop_diagrams(c).size(), orbit_count(c)) << c;
  EXPECT_EQ(enumerate_loop_diagrams(0).size(), 2u);
}

TEST(Surface2dTest, CanonicalCodeIsInvariant) {
  std::mt19937_64 rng(11);
  for (const auto& d : enumerate_loop_diagrams(3)) {
    if (rng() % 8) continue;
    std::vector<int> perm{0, 1, 2}, rot(3), refl(3);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int v = 0; v < 3; ++v) {
      rot[v] = static_cast<int>(rng() % 4);
      refl[v] = static_cast<int>(rng() % 2);
    }
    auto e = act(d, perm, rot, refl);
    EXPECT_EQ(canonical_code(e), canonical_code(d));
    EXPECT_EQ(thicken(e), thicken(d));
  }
}

TEST(Surface2dTest, LoopComplexityFormula) {
  EXPECT_EQ(loop_complexity(s::kSphere), 0);
  EXPECT_EQ(loop_complexity(s::kKleinBottle), 1);
  EXPECT_EQ(loop_complexity(s::kDisc), 0);
  EXPECT_EQ(loop_complexity(*parse_surface_name("S_g2")), 3);
  EXPECT_EQ(loop_complexity(s::kTorus), 1);
  EXPECT_EQ(loop_complexity(s::kProjectivePlane), 0);
  EXPECT_EQ(loop_complexity(s::kAnnulus), 0);
  EXPECT_EQ(loop_complexity(s::kMobius), 0);
  EXPECT_THROW(loop_complexity(SurfaceDescriptor{true, 1, 0}), std::invalid_argument);
  EXPECT_THROW(loop_complexity(SurfaceDescriptor{false, 2, 0}), std::invalid_argument);
  // Not additive under connected sum.
  EXPECT_GT(loop_complexity(s::kKleinBottle),
            loop_complexity(s::kProjectivePlane) + loop_complexity(s::kProjectivePlane));
}

TEST(Surface2dTest, QuasiFillingExamples) {
  EXPECT_TRUE(is_quasi_filling(free_loop(0), s::kSphere));
  EXPECT_TRUE(is_quasi_filling(free_loop(0), s::kDisc));
  EXPECT_TRUE(is_quasi_filling(free_loop(0), s::kAnnulus));
  EXPECT_FALSE(is_quasi_filling(free_loop(0), s::kTorus));
  EXPECT_TRUE(is_quasi_filling(free_loop(1), s::kProjectivePlane));
  EXPECT_TRUE(is_quasi_filling(free_loop(1), s::kMobius));
  EXPECT_FALSE(is_quasi_filling(free_loop(1), s::kSphere));
  EXPECT_TRUE(is_quasi_filling(figure_eight(), s::kTorus));
  EXPECT_TRUE(is_quasi_filling(figure_eight(), SurfaceDescriptor{true, -1, 1}));
  EXPECT_FALSE(is_quasi_filling(figure_eight(), s::kKleinBottle));
  EXPECT_FALSE(is_filling(free_loop(0)));
  EXPECT_TRUE(is_filling(figure_eight()));
}

TEST(Surface2dTest, BruteForceMatchesFormula) {
  for (const auto& target : {s::kSphere, s::kProjectivePlane, s::kDisc, s::kAnnulus, s::kMobius, s::kTorus,
                             s::kKleinBottle}) {
    auto r = brute_force_lc(target, 2);
    ASSERT_TRUE(r.crossings) << surface_name(target);
    EXPECT_EQ(*r.crossings, loop_complexity(target)) << surface_name(target);
    EXPECT_TRUE(is_quasi_filling(*r.witness, target));
  }
  EXPECT_EQ(*brute_force_lc(s::kProjectivePlane, 1).crossings, 0);
}

TEST(Surface2dTest, BruteForceGenusTwoAtThree) {
  for (const char* name : {"S_g2", "S_g2_b1", "N_h3", "N_h4", "N_h3_b1", "S_g1_b2", "S_g0_b4", "N_h2_b2"}) {
    auto target = *parse_surface_name(name);
    int lc = loop_complexity(target);
    ASSERT_LE(lc, 3) << name;
    auto r = brute_force_lc(target, 3);
    ASSERT_TRUE(r.crossings) << name;
    EXPECT_EQ(*r.crossings, lc) << name;
  }
  EXPECT_FALSE(brute_force_lc(*parse_surface_name("S_g3"), 3).crossings);
}

TEST(Surface2dTest, OnlyFiveSurfacesHaveNonFillingLoops) {
  std::set<std::string> found;
  for (int chi = -3; chi <= 2; ++chi)
    for (int b = 0; b <= 4; ++b)
      for (bool o : {true, false}) {
        SurfaceDescriptor t{o, chi, b};
        if (!t.consistent()) continue;
        for (const auto& d : enumerate_loop_diagrams(0))
          if (is_quasi_filling(d, t)) found.insert(surface_name(t));
      }
  EXPECT_EQ(found, (std::set<std::string>{"S2", "B2", "A", "RP2", "M"}));
}

TEST(Surface2dTest, BareBouquetIsAmbiguous) {
  DehnLoopDiagram bare = parse_loop_diagram("crossings=1; edge 0.0 0.2; edge 0.1 0.3");
  EXPECT_FALSE(bare.has_ribbon());
  EXPECT_THROW(thicken(bare), std::invalid_argument);
  try {
    loop_to_squares(bare);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("two ways"), std::string::npos);
  }
  std::set<SurfaceDescriptor> options;
  for (int t0 : {0, 1})
    for (int t1 : {0, 1}) {
      auto d = bare;
      d.edges[0].twist = t0;
      d.edges[1].twist = t1;
      options.insert(thicken(d));
    }
  // Same abstract graph, other cyclic orders at the vertex.
  for (const char* text : {"crossings=1; edge 0.0 0.1 twist=0; edge 0.2 0.3 twist=0",
                           "crossings=1; edge 0.0 0.1 twist=1; edge 0.2 0.3 twist=0",
                           "crossings=1; edge 0.0 0.1 twist=1; edge 0.2 0.3 twist=1"})
    options.insert(thicken(parse_loop_diagram(text)));
  EXPECT_TRUE(options.count(SurfaceDescriptor{true, -1, 1}));
  EXPECT_TRUE(options.count(SurfaceDescriptor{true, -1, 3}));
  EXPECT_TRUE(options.count(SurfaceDescriptor{false, -1, 1}));
  EXPECT_TRUE(options.count(SurfaceDescriptor{false, -1, 2}));
}

TEST(Surface2dTest, DualSquaresOfFigureEight) {
  auto q = loop_to_squares(figure_eight());
  EXPECT_EQ(q.squares, 1);
  EXPECT_TRUE(cubulation_problems(q).empty());
  EXPECT_EQ(square_surface(q), s::kTorus);
  EXPECT_EQ(squares_to_loop(q), figure_eight());
  EXPECT_THROW(loop_to_squares(free_loop(0)), std::invalid_argument);
}

TEST(Surface2dTest, DualityOnAllTwoSquareComplexes) {
  int valid = 0;
  for (const auto& d : all_raw(2)) {
    SquareCubulation2D q(2);
    for (const auto& e : d.edges) q.glue(e.a.crossing, e.a.slot, e.b.crossing, e.b.slot, *e.twist);
    if (!cubulation_problems(q).empty()) continue;
    ++valid;
    auto loop = squares_to_loop(q);
    EXPECT_EQ(loop_to_squares(loop), q);
    EXPECT_EQ(loop.crossings, 2);
    auto thick = thicken(loop);
    EXPECT_EQ(square_surface(q), (SurfaceDescriptor{thick.orientable, thick.chi + thick.boundary, 0}));
    EXPECT_EQ(parse_square_cubulation(to_text(q)), q);
  }
  EXPECT_GT(valid, 0);
}

TEST(Surface2dTest, TextRoundTripAndErrors) {
  for (int c = 0; c <= 2; ++c)
    for (const auto& d : enumerate_loop_diagrams(c)) EXPECT_EQ(parse_loop_diagram(to_text(d)), d);
  EXPECT_THROW(parse_loop_diagram(""), std::invalid_argument);
  EXPECT_THROW(parse_loop_diagram("edge 0.0 0.1"), std::invalid_argument);
  EXPECT_THROW(parse_loop_diagram("crossings=1; edge 0.0 0.4"), std::invalid_argument);
  EXPECT_THROW(parse_loop_diagram("crossings=1; edge 0.0 1.1"), std::invalid_argument);
  EXPECT_THROW(parse_loop_diagram("crossings=1; edge 0.0 0.1 twist=2"), std::invalid_argument);
  auto d = parse_loop_diagram("crossings=1; edge 0.0 0.1 twist=0");
  EXPECT_FALSE(diagram_problems(d).empty());
  EXPECT_THROW(thicken(d), std::invalid_argument);
  EXPECT_THROW(parse_square_cubulation("squares=1; side 0.0 0.1 flip=0; side 0.1 0.2 flip=0"),
               std::invalid_argument);
}

}  // namespace
}  // namespace dehn
