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

#include "dehn/census.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cube_table.hpp"
#include "dehn/signature.hpp"
#include "union_find.hpp"

namespace dehn {

namespace {

struct EdgeStep {
  std::uint8_t edge;
  std::uint8_t target_edge;
  std::uint8_t parity;
};

// Cube edge through v and w, and whether (v, w) runs against its
// canonical direction.
std::pair<int, int> oriented_edge(int v, int w) {
  for (int e = 0; e < 12; ++e) {
    auto [lo, hi] = cube_edge_vertices(e);
    if (lo == v && hi == w) return {e, 0};
    if (lo == w && hi == v) return {e, 1};
  }
  return {-1, 0};
}

struct EdgeSteps {
  // [face][target face][dihedral][side of the face]
  EdgeStep step[6][6][8][4];
};

const EdgeSteps& edge_steps() {
  static const EdgeSteps table = [] {
    EdgeSteps out{};
    constexpr int kCycle[4] = {0, 1, 3, 2};
    for (int f = 0; f < 6; ++f)
      for (int g = 0; g < 6; ++g)
        for (int d = 0; d < 8; ++d)
          for (int s = 0; s < 4; ++s) {
            int p = kCycle[s];
            int q = kCycle[(s + 1) % 4];
            const auto& m = dihedral_maps()[d];
            auto [e, pe] = oriented_edge(face_corner(f, p), face_corner(f, q));
            auto [e2, pe2] = oriented_edge(face_corner(g, m[p]), face_corner(g, m[q]));
            out.step[f][g][d][s] = {static_cast<std::uint8_t>(e), static_cast<std::uint8_t>(e2),
                                    static_cast<std::uint8_t>(pe ^ pe2)};
          }
    return out;
  }();
  return table;
}

class CubeGenerator {
 public:
  CubeGenerator(int k, std::uint64_t seed)
      : k_(k), table_(k), edges_(static_cast<std::size_t>(12 * k)), rng_(seed), shuffle_(seed != 0) {}

  // Runs the search below the first decision restricted to option indices
  // with index % stride == offset.
  void run(int offset, int stride, std::vector<std::string>* out) {
    out_ = out;
    offset_ = offset;
    stride_ = stride;
    placed_ = 1;
    recurse(0, 0, true);
  }

 private:
  struct Option {
    int target;
    int dihedral;
  };

  bool assign(int pos, int q, int d) {
    const auto& steps = edge_steps().step;
    table_.partner[pos] = q;
    table_.dihedral[pos] = static_cast<std::uint8_t>(d);
    table_.partner[q] = pos;
    table_.dihedral[q] = static_cast<std::uint8_t>(dihedral_inverse(d));
    int a = pos / 6;
    int b = q / 6;
    for (const auto& st : steps[pos % 6][q % 6][d]) {
      auto r = edges_.unite(a * 12 + st.edge, b * 12 + st.target_edge, st.parity);
      if (r == detail::ParityUnionFind::Result::kContradiction) return false;
    }
    return true;
  }

  void unassign(int pos, int q) {
    table_.partner[pos] = -1;
    table_.partner[q] = -1;
  }

  void recurse(int pos, int checked, bool top) {
    const int n = 6 * k_;
    while (pos < n && table_.partner[pos] >= 0) ++pos;
    if (pos == n) {
      if (placed_ == k_ && detail::is_canonical(table_)) emit();
      return;
    }
    if (pos / 6 >= placed_) return;  // cube never reached: disconnected
    int complete = pos / 6;
    if (complete > checked) {
      if (!detail::is_canonical_prefix(table_, complete)) return;
      checked = complete;
    }
    Option options[6 * kMaxCensusCubes * kDihedralCount + 1];
    int count = 0;
    for (int q = pos + 1; q < 6 * placed_; ++q)
      if (table_.partner[q] < 0)
        for (int d = 0; d < kDihedralCount; ++d) options[count++] = {q, d};
    if (placed_ < k_) options[count++] = {placed_ * 6 + opposite_face(pos % 6), 0};
    if (shuffle_) std::shuffle(options, options + count, rng_);
    for (int i = 0; i < count; ++i) {
      if (top && i % stride_ != offset_) continue;
      const auto& o = options[i];
      bool fresh = o.target / 6 == placed_;
      auto mark = edges_.checkpoint();
      if (fresh) ++placed_;
      if (assign(pos, o.target, o.dihedral)) recurse(pos + 1, checked, false);
      edges_.rollback(mark);
      unassign(pos, o.target);
      if (fresh) --placed_;
    }
  }

  void emit() {
    std::vector<int> tokens(6 * k_);
    for (int i = 0; i < 6 * k_; ++i)
      tokens[i] = (table_.partner[i] / 6) * 48 + (table_.partner[i] % 6) * 8 + table_.dihedral[i];
    out_->push_back(detail::encode_cube_tokens(k_, tokens));
  }

  int k_;
  detail::CubeTable table_;
  detail::ParityUnionFind edges_;
  std::mt19937_64 rng_;
  bool shuffle_;
  int placed_ = 1;
  int offset_ = 0;
  int stride_ = 1;
  std::vector<std::string>* out_ = nullptr;
};

std::string multiset(std::vector<SurfaceDescriptor> s) {
  std::sort(s.begin(), s.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (i > 0) os << ',';
    os << surface_name(s[i]);
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

}  // namespace

std::vector<std::string> enumerate_cubulation_signatures(const CensusOptions& opts) {
  if (opts.cubes < 1 || opts.cubes > kMaxCensusCubes)
    throw std::invalid_argument("census supports 1.." + std::to_string(kMaxCensusCubes) + " cubes");
  int workers = std::max(1, opts.threads);
  std::vector<std::vector<std::string>> parts(workers);
  auto work = [&](int w) {
    // Workers share the seed so that they agree on the shuffled top-level
    // option order and split it by index.
    CubeGenerator gen(opts.cubes, opts.shuffle_seed);
    gen.run(w, workers, &parts[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<std::string> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

CensusFilter parse_census_filter(const std::string& spec) {
  CensusFilter f;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    if (name == "sheets-all-spheres") {
      f.sheets_all_spheres = true;
    } else if (name == "finite-vertices") {
      f.all_links_spheres = true;
    } else if (name == "ideal-vertex") {
      f.has_ideal_vertex = true;
    } else if (name == "orientable-sheets") {
      f.orientable_sheets = true;
    } else {
      throw std::invalid_argument("unknown census filter '" + name + "'");
    }
  }
  return f;
}

std::string CensusEntry::link_profile() const {
  std::vector<SurfaceDescriptor> s;
  for (const auto& l : links) s.push_back(l.link);
  return multiset(s);
}

std::string CensusEntry::sheet_profile() const { return multiset(dual.sheets); }

CensusEntry census_entry(const std::string& signature) {
  CensusEntry e;
  e.signature = signature;
  e.cubulation = cubulation_from_signature(signature);
  auto report = validate(e.cubulation);
  if (!report.ok()) throw std::invalid_argument("signature of an invalid cubulation");
  e.orbits = std::move(*report.orbits);
  e.links = vertex_links(e.cubulation, e.orbits);
  e.euler_identity = euler_identity_check(e.orbits, e.links);
  e.dual = dual_surface_stats(e.cubulation, e.orbits, e.links);
  return e;
}

std::vector<CensusEntry> enumerate_cubulations(const CensusOptions& opts, const CensusFilter& filter) {
  std::vector<CensusEntry> out;
  for (const auto& sig : enumerate_cubulation_signatures(opts)) {
    if (filter.sheets_all_spheres || filter.orientable_sheets) {
      // Sheets alone decide these filters; skip the full report early.
      bool keep = true;
      for (const auto& s : trace_sheets_unchecked(cubulation_from_signature(sig))) {
        if (filter.sheets_all_spheres) keep &= s.is_sphere();
        if (filter.orientable_sheets) keep &= s.orientable;
      }
      if (!keep) continue;
    }
    auto e = census_entry(sig);
    bool keep = true;
    if (filter.all_links_spheres)
      for (const auto& l : e.links) keep &= !l.ideal();
    if (filter.has_ideal_vertex) {
      bool any = false;
      for (const auto& l : e.links) any |= l.ideal();
      keep &= any;
    }
    if (keep) out.push_back(std::move(e));
  }
  return out;
}

std::vector<CensusRow> census_report(const std::vector<CensusEntry>& entries) {
  std::map<std::pair<std::string, std::string>, int> groups;
  for (const auto& e : entries) ++groups[{e.link_profile(), e.sheet_profile()}];
  std::vector<CensusRow> rows;
  for (const auto& [key, n] : groups) rows.push_back({key.first, key.second, n});
  return rows;
}

std::string render_census_table(const std::vector<CensusRow>& rows) {
  std::size_t wl = std::string("links").size();
  std::size_t ws = std::string("sheets").size();
  for (const auto& r : rows) {
    wl = std::max(wl, r.link_profile.size());
    ws = std::max(ws, r.sheet_profile.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(wl)) << "links" << "  " << std::setw(static_cast<int>(ws))
     << "sheets" << "  count\n";
  for (const auto& r : rows)
    os << std::setw(static_cast<int>(wl)) << r.link_profile << "  " << std::setw(static_cast<int>(ws))
       << r.sheet_profile << "  " << r.count << '\n';
  return os.str();
}

std::vector<std::string> enumerate_triangulation_signatures(int n) {
  if (n < 1 || n > kMaxCensusTetrahedra)
    throw std::invalid_argument("triangulation census supports 1.." +
                                std::to_string(kMaxCensusTetrahedra) + " tetrahedra");
  std::set<std::string> found;
  const int faces = 4 * n;
  std::vector<int> partner(faces, -1);
  IdealTriangulation t(static_cast<std::size_t>(n));
  // Perfect matchings of the faces, then every permutation per pair.
  std::vector<std::pair<int, int>> pairs;
  auto assign_perms = [&](auto&& self, std::size_t i) -> void {
    if (i == pairs.size()) {
      if (validate(t).ok()) found.insert(isomorphism_signature(t));
      return;
    }
    auto [x, y] = pairs[i];
    int f = x % 4;
    int g = y % 4;
    for (const auto& p : all_perm4()) {
      if (p[f] != g) continue;
      t.glue(x / 4, f, y / 4, p);
      self(self, i + 1);
      t.set_record(x / 4, f, std::nullopt);
      t.set_record(y / 4, g, std::nullopt);
    }
  };
  auto match = [&](auto&& self) -> void {
    int x = 0;
    while (x < faces && partner[x] >= 0) ++x;
    if (x == faces) {
      assign_perms(assign_perms, 0);
      return;
    }
    for (int y = x + 1; y < faces; ++y) {
      if (partner[y] >= 0) continue;
      partner[x] = y;
      partner[y] = x;
      pairs.emplace_back(x, y);
      self(self);
      pairs.pop_back();
      partner[x] = partner[y] = -1;
    }
  };
  match(match);
  return {found.begin(), found.end()};
}

}  // namespace dehn
