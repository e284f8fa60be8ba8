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


// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dehn/bounds.hpp"
#include "dehn/census.hpp"
#include "dehn/conversions.hpp"
#include "dehn/dual_surface.hpp"
#include "dehn/quasi_filling.hpp"
#include "dehn/signature.hpp"
#include "dehn/surface2d.hpp"
#include "test_support.hpp"

namespace dehn {
namespace {

using testing::fixture;
using Clock = std::chrono::steady_clock;

// Collects failures; the first few are printed under the criterion line.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++count_;
  }
  template <typename A, typename B>
  void equal(const A& a, const B& b, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << a << ", want " << b;
    expect(a == b, os.str());
  }
  bool ok() const { return count_ == 0; }
  long count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
  long count_ = 0;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

// Sorted descriptors of the non-sphere links.
std::vector<SurfaceDescriptor> ideal_links(const std::vector<VertexLink>& links) {
  std::vector<SurfaceDescriptor> out;
  for (const auto& l : links)
    if (l.ideal()) out.push_back(l.link);
  std::sort(out.begin(), out.end());
  return out;
}

// Faces of cube i glued to another cube.
int foreign_faces(const IdealCubulation& c, std::size_t i) {
  int n = 0;
  for (int f = 0; f < kCubeFaces; ++f)
    if (c.record(i, f)->cube != i) ++n;
  return n;
}

// Every valid input of the conversion corpus.
struct Corpus {
  std::vector<std::string> cubulations;     // signatures
  std::vector<std::string> triangulations;  // signatures
  std::vector<IdealCubulation> cubulation_files;
  std::vector<IdealTriangulation> triangulation_files;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    for (int k = 1; k <= kMaxCensusCubes; ++k) {
      auto sigs = enumerate_cubulation_signatures({k, 0, 1});
      out.cubulations.insert(out.cubulations.end(), sigs.begin(), sigs.end());
    }
    for (const char* f : {"census/triangulations_n1.txt", "census/triangulations_n2.txt"}) {
      auto sigs = read_lines(fixture(f));
      out.triangulations.insert(out.triangulations.end(), sigs.begin(), sigs.end());
    }
    out.cubulation_files.push_back(testing::coordinate_planes());
    out.cubulation_files.push_back(testing::two_cube_torus());
    out.triangulation_files.push_back(testing::two_tet_sphere());
    out.triangulation_files.push_back(read_triangulation_file(fixture("cusped_torus_n2.tri")));
    return out;
  }();
  return c;
}

void coordinate_planes(Check& ck) {
  auto c = testing::coordinate_planes();
  auto report = validate(c);
  ck.expect(report.ok(), "fixture validates");
  if (!report.ok()) return;
  ck.expect(euler_identity_check(c), "chi identity");
  auto s = dual_surface_stats(c);
  ck.equal(s.triple_points, 2, "triple points");
  ck.equal(s.sheets.size(), std::size_t{3}, "sheet count");
  for (const auto& sheet : s.sheets) ck.equal(surface_name(sheet), "S2", "sheet");
  ck.equal(s.singular_edges, 3 * static_cast<int>(c.size()), "singular edges");
}

void two_cube_torus(Check& ck) {
  auto c = testing::two_cube_torus();
  auto report = validate(c);
  ck.expect(report.ok(), "fixture validates");
  if (!report.ok()) return;
  const auto& o = *report.orbits;
  ck.equal(o.vertices, 2, "V");
  ck.equal(o.edges, 6, "E");
  ck.equal(o.faces, 6, "F");
  ck.equal(o.euler_characteristic(), 0, "chi");
  ck.equal(dual_surface_stats(c).triple_points, 2, "triple points");
  for (const auto& l : vertex_links(c)) ck.equal(surface_name(l.link), "S2", "link");
}

void check_splitting(Check& ck, const IdealCubulation& c, const std::string& tag) {
  auto choice = optimize_orientations(c);
  auto s = cubulation_to_triangulation(c, choice.bits);
  int k = static_cast<int>(c.size());
  int n = static_cast<int>(s.triangulation.size());
  ck.expect(n == 5 * k + s.insertions, tag + ": n != 5k + m");
  ck.expect(s.insertions <= 3 * k, tag + ": m > 3k");
  ck.expect(n <= 8 * k, tag + ": n > 8k");
  auto r = validate(s.triangulation);
  ck.expect(r.ok(), tag + ": triangulation invalid");
  if (r.ok())
    ck.expect(euler_identity_check(*r.orbits, vertex_links(s.triangulation, *r.orbits)),
              tag + ": triangulation chi identity");
}

void check_cubing(Check& ck, const IdealTriangulation& t, const std::string& tag) {
  auto c = triangulation_to_cubulation(t);
  ck.expect(c.size() == 4 * t.size(), tag + ": k != 4n");
  auto r = validate(c);
  ck.expect(r.ok(), tag + ": cubulation invalid");
  if (r.ok())
    ck.expect(euler_identity_check(*r.orbits, vertex_links(c, *r.orbits)),
              tag + ": cubulation chi identity");
}

void conversion_bounds(Check& ck) {
  const Corpus& k = corpus();
  for (const auto& sig : k.cubulations) check_splitting(ck, cubulation_from_signature(sig), sig);
  for (const auto& c : k.cubulation_files) check_splitting(ck, c, "fixture cubulation");
  for (const auto& sig : k.triangulations) check_cubing(ck, triangulation_from_signature(sig), sig);
  for (const auto& t : k.triangulation_files) check_cubing(ck, t, "fixture triangulation");
}

void round_trip(Check& ck) {
  for (const auto& sig : corpus().triangulations) {
    auto t = triangulation_from_signature(sig);
    auto c = triangulation_to_cubulation(t);
    auto t2 = cubulation_to_triangulation(c, optimize_orientations(c).bits).triangulation;
    auto r1 = validate(t);
    auto r2 = validate(t2);
    ck.expect(r1.ok() && r2.ok(), sig + ": invalid");
    if (!r1.ok() || !r2.ok()) continue;
    ck.equal(r2.orbits->euler_characteristic(), r1.orbits->euler_characteristic(), sig + ": chi");
    ck.expect(ideal_links(vertex_links(t2)) == ideal_links(vertex_links(t)), sig + ": ideal links");
  }
}

void orientation_optimization(Check& ck) {
  for (const auto& sig : corpus().cubulations) {
    auto c = cubulation_from_signature(sig);
    auto m = mismatch_model(c);
    // Full sweep over every bit vector, counting the insertions actually built.
    int best = 1 << 30;
    OrientationBits bits(c.size(), 0);
    for (unsigned mask = 0; mask < (1u << c.size()); ++mask) {
      for (std::size_t i = 0; i < c.size(); ++i) bits[i] = (mask >> i) & 1;
      best = std::min(best, cubulation_to_triangulation(c, bits).insertions);
    }
    ck.equal(exhaustive_orientations(m).mismatches, best, sig + ": exhaustive");
    ck.equal(local_search_orientations(m, 0, 8).mismatches, best, sig + ": local search");
  }

  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    auto c = testing::random_valid_cubulation(static_cast<std::size_t>(size(rng)), rng);
    auto m = mismatch_model(c);
    OrientationBits bits(c.size());
    for (auto& b : bits) b = rng() & 1;
    std::string tag = "trial " + std::to_string(trial);
    int base = cubulation_to_triangulation(c, bits).insertions;
    ck.equal(base, m.mismatches(bits), tag + ": insertions vs model");
    for (std::size_t i = 0; i < c.size(); ++i) {
      int incident = 0;
      int delta = 0;
      for (int p : m.incident[i]) {
        const auto& pair = m.pairs[p];
        if (pair.a == pair.b) continue;
        ++incident;
        delta += (bits[pair.a] ^ bits[pair.b] ^ pair.flip) ? -1 : 1;
      }
      ck.equal(incident, foreign_faces(c, i), tag + ": foreign faces");
      auto flipped = bits;
      flipped[i] ^= 1;
      ck.equal(cubulation_to_triangulation(c, flipped).insertions - base, delta,
               tag + ": flip " + std::to_string(i));
    }
  }
}

int sheet_chi(const IdealCubulation& c) {
  int chi = 0;
  for (const auto& s : trace_sheets(c)) chi += s.chi;
  return chi;
}

int sphere_links(const IdealCubulation& c) {
  int n = 0;
  for (const auto& l : vertex_links(c)) n += l.link.is_sphere();
  return n;
}

void bubble_ledger(Check& ck) {
  // Oracle values for each base come straight from its sheets and links.
  std::vector<std::pair<std::string, QuasiFillingSurface>> cases;
  for (const auto& c : corpus().cubulation_files) cases.push_back({"fixture", filling_base(c, "fixture")});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto& sigs = corpus().cubulations;
    const auto& sig = sigs[rng() % sigs.size()];
    cases.push_back({sig, filling_base(cubulation_from_signature(sig), "sig:" + sig)});
  }
  for (const auto& [tag, q] : cases) {
    const auto& c = q.node().cubulation;
    int balls = sphere_links(c);
    int chi = sheet_chi(c);
    auto before = stats(q);
    ck.equal(before.complement_balls.value_or(-1), balls, tag + ": base balls");
    ck.equal(before.chi_abstract.value_or(-1), chi, tag + ": base chi");
    ck.expect(before.filling, tag + ": base is filling");
    auto b = bubble_move(q, 0);
    auto after = stats(b);
    ck.equal(after.triple_points, before.triple_points, tag + ": triple points");
    ck.equal(after.complement_balls.value_or(-1), balls + 2, tag + ": balls + 2");
    ck.equal(after.chi_abstract.value_or(-1), chi + 2, tag + ": chi + 2");
    ck.expect(!after.filling, tag + ": bubble is not filling");
    ck.expect(inverse_bubble_move(b) == q, tag + ": inverse restores");
    ck.expect(to_string(inverse_bubble_move(b)) == to_string(q), tag + ": inverse text");
  }
  for (const auto& row : exceptional_catalog()) {
    ExceptionalSurface e;
    e.kind = row.kind;
    auto q = exceptional(e);
    auto b = bubble_move(q, 0);
    auto s0 = stats(q);
    auto s1 = stats(b);
    std::string tag = row.name;
    ck.equal(s1.triple_points, s0.triple_points, tag + ": triple points");
    ck.equal(s1.complement_balls.value_or(-1), s0.complement_balls.value_or(-1) + 2, tag + ": balls + 2");
    ck.equal(s1.chi_abstract.value_or(-1), s0.chi_abstract.value_or(-1) + 2, tag + ": chi + 2");
    ck.expect(inverse_bubble_move(b) == q, tag + ": inverse restores");
  }
}

std::optional<int> value(const BoundLedger& l, const std::string& name, Quantity q) {
  if (!l.has(name) || !l.at(name).get(q)) return std::nullopt;
  return l.at(name).get(q)->value;
}

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "none"; }

void expect_value(Check& ck, const BoundLedger& l, const std::string& name, Quantity q,
                  std::optional<int> want) {
  ck.equal(show(value(l, name, q)), show(want), name + " " + quantity_name(q));
}

void bounds_ledger(Check& ck) {
  using Q = Quantity;
  BoundLedger l;
  for (const char* m : {"S3", "B3", "RP3", "L(3,1)", "L(4,1)"}) ck.expect(apply_catalog(l, m), m);
  for (const char* m : {"S3", "B3", "RP3", "L(4,1)"}) {
    expect_value(ck, l, m, Q::kScLower, 0);
    expect_value(ck, l, m, Q::kScUpper, 0);
  }
  for (const char* m : {"S3", "B3", "RP3", "L(3,1)"}) {
    expect_value(ck, l, m, Q::kCLower, 0);
    expect_value(ck, l, m, Q::kCUpper, 0);
  }
  expect_value(ck, l, "L(3,1)", Q::kScLower, 1);
  expect_value(ck, l, "L(4,1)", Q::kCLower, 1);
  for (const char* m : {"L(3,1)", "L(4,1)"}) {
    bool refused = false;
    try {
      apply_matveev_relations(l, m);
    } catch (const std::invalid_argument&) {
      refused = true;
    }
    ck.expect(refused, std::string(m) + ": relations refused");
  }

  // Subadditivity from two triangulation bounds.
  apply_triangulation_bound(l, "M1", 1);
  apply_triangulation_bound(l, "M2", 2);
  auto sum = apply_subadditivity(l, "M1", "M2", false);
  expect_value(ck, l, sum, Q::kScUpper, 4 * 1 + 4 * 2);
  auto bsum = apply_subadditivity(l, "M1", "S3", true);
  expect_value(ck, l, bsum, Q::kScUpper, 4);
  expect_value(ck, l, sum, Q::kScLower, std::nullopt);

  // sc <= 4c and c <= 8sc, both directions.
  l.declare("N", true);
  apply_triangulation_bound(l, "N", 2);
  apply_matveev_relations(l, "N");
  expect_value(ck, l, "N", Q::kScUpper, 8);
  expect_value(ck, l, "N", Q::kCUpper, 64);
  apply_assertion(l, "N", false, Relation::kAtMost, 1);
  apply_matveev_relations(l, "N");
  expect_value(ck, l, "N", Q::kScUpper, 4);
  apply_assertion(l, "N", false, Relation::kAtLeast, 1);
  apply_matveev_relations(l, "N");
  expect_value(ck, l, "N", Q::kScLower, 1);
  l.declare("P", true);
  apply_assertion(l, "P", true, Relation::kAtLeast, 9);
  apply_matveev_relations(l, "P");
  expect_value(ck, l, "P", Q::kCLower, 3);
  apply_assertion(l, "P", false, Relation::kAtMost, 5);
  apply_matveev_relations(l, "P");
  expect_value(ck, l, "P", Q::kScUpper, 20);

  // Contradiction guard.
  BoundLedger before = l;
  bool fired = false;
  try {
    l.tighten("S3", Q::kScLower, 1, "assert");
  } catch (const ContradictionError& e) {
    fired = std::string(e.what()).find("catalog") != std::string::npos;
  }
  ck.expect(fired, "contradiction on S3 sc_lo=1");
  ck.expect(l == before, "ledger unchanged after contradiction");
  ck.expect(replay(l.events()) == l, "replay");
}

void loop_complexity_formula(Check& ck) {
  namespace s = surfaces;
  const std::vector<std::pair<SurfaceDescriptor, int>> cases = {
      {s::kSphere, 0}, {s::kProjectivePlane, 0}, {s::kDisc, 0},       {s::kAnnulus, 0},
      {s::kMobius, 0}, {s::kTorus, 1},           {s::kKleinBottle, 1},
  };
  for (const auto& [target, lc] : cases) {
    std::string name = surface_name(target);
    auto r = brute_force_lc(target, 2);
    ck.expect(r.crossings.has_value(), name + ": no diagram up to 2 crossings");
    if (!r.crossings) continue;
    ck.equal(*r.crossings, loop_complexity(target), name + ": brute force vs formula");
    ck.equal(*r.crossings, lc, name + ": value");
    ck.expect(is_quasi_filling(*r.witness, target), name + ": witness");
  }
  int k = loop_complexity(s::kKleinBottle);
  int p = loop_complexity(s::kProjectivePlane);
  ck.expect(k > p + p, "lc(K) > lc(RP2) + lc(RP2)");
}

void census_determinism(Check& ck) {
  auto reference = enumerate_cubulation_signatures({1, 0, 1});
  ck.expect(!reference.empty(), "nonempty census");
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    ck.expect(enumerate_cubulation_signatures({1, seed, 1}) == reference,
              "shuffled run " + std::to_string(seed));
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    auto c = testing::random_relabel(testing::random_valid_cubulation(1, rng), rng);
    auto sig = isomorphism_signature(c);
    ck.expect(std::binary_search(reference.begin(), reference.end(), sig), "missing " + sig);
  }
}

struct Criterion {
  const char* id;
  const char* description;
  double limit;  // seconds, 0 for none
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace dehn

int main() {
  using namespace dehn;
  std::vector<Criterion> criteria = {
      {"AC1", "coordinate-plane fixture", 1, coordinate_planes},
      {"AC2", "two-cube T3 fixture", 1, two_cube_torus},
      {"AC3", "conversion bounds over the corpus", 10, conversion_bounds},
      {"AC4", "round trip t -> c -> t' on n <= 2", 0, round_trip},
      {"AC5", "orientation optimization", 30, orientation_optimization},
      {"AC6", "bubble-move ledger", 0, bubble_ledger},
      {"AC7", "bounds ledger", 0, bounds_ledger},
      {"AC8", "loop complexity vs brute force", 60, loop_complexity_formula},
      {"AC9", "census determinism", 60, census_determinism},
  };

  auto t0 = Clock::now();
  const Corpus& k = corpus();
  double setup = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("[INFO] corpus: %zu cubulations, %zu triangulations, %zu fixture files (%.2f s)\n",
              k.cubulations.size(), k.triangulations.size(),
              k.cubulation_files.size() + k.triangulation_files.size(), setup);

  int failed = 0;
  for (const auto& c : criteria) {
    Check ck;
    auto start = Clock::now();
    try {
      c.run(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_time = c.limit == 0 || secs < c.limit;
    bool pass = ck.ok() && in_time;
    failed += !pass;
    if (c.limit > 0) {
      std::printf("[%s] %s %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.description,
                  secs, c.limit);
    } else {
      std::printf("[%s] %s %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.id, c.description, secs);
    }
    for (const auto& f : ck.failures()) std::printf("    %s\n", f.c_str());
    if (ck.count() > static_cast<long>(ck.failures().size()))
      std::printf("    ... %ld failures in total\n", ck.count());
    if (!in_time) std::printf("    over the time limit\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
