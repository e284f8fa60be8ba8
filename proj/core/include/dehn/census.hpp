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

// Census of small ideal cubulations and triangulations up to isomorphism.
//
// Cubulations are generated directly in breadth-first normal form: the
// lowest unassigned face is glued either to a free face of an already
// reached cube (any corner map) or to the opposite face of the next new
// cube (identity corner map). Partial tables whose edge orbits close
// reversed are cut immediately, and a complete table is kept only if it is
// its own canonical form, so every class is produced exactly once.

#ifndef DEHN_CENSUS_HPP_
#define DEHN_CENSUS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehn/cubulation.hpp"
#include "dehn/dual_surface.hpp"
#include "dehn/triangulation.hpp"
#include "dehn/validation.hpp"

namespace dehn {

inline constexpr int kMaxCensusCubes = 2;
inline constexpr int kMaxCensusTetrahedra = 2;

struct CensusOptions {
  int cubes = 1;
  // Nonzero: shuffle the order in which gluing options are tried.
  std::uint64_t shuffle_seed = 0;
  int threads = 1;
};

// Sorted signatures of all valid cubulations with `cubes` cubes. Throws
// std::invalid_argument outside 1..kMaxCensusCubes.
std::vector<std::string> enumerate_cubulation_signatures(const CensusOptions& opts);

struct CensusFilter {
  bool sheets_all_spheres = false;
  bool all_links_spheres = false;
  bool has_ideal_vertex = false;
  bool orientable_sheets = false;
};

// Parses a comma-separated list of filter names; throws
// std::invalid_argument on unknown names.
CensusFilter parse_census_filter(const std::string& spec);

struct CensusEntry {
  std::string signature;
  IdealCubulation cubulation;
  OrbitReport orbits;
  std::vector<VertexLink> links;
  bool euler_identity = false;
  DehnSurfaceStats dual;

  std::string link_profile() const;   // e.g. "S2^6,T2"
  std::string sheet_profile() const;  // e.g. "S2^3"
};

CensusEntry census_entry(const std::string& signature);
std::vector<CensusEntry> enumerate_cubulations(const CensusOptions& opts,
                                               const CensusFilter& filter = {});

struct CensusRow {
  std::string link_profile;
  std::string sheet_profile;
  int count = 0;
};

// Counts grouped by (link profile, sheet profile), sorted by key.
std::vector<CensusRow> census_report(const std::vector<CensusEntry>& entries);
std::string render_census_table(const std::vector<CensusRow>& rows);

// Sorted signatures of all valid triangulations with n tetrahedra, by
// brute force over every gluing table. Throws outside 1..kMaxCensusTetrahedra.
std::vector<std::string> enumerate_triangulation_signatures(int n);

}  // namespace dehn

#endif  // DEHN_CENSUS_HPP_
