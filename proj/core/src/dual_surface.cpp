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

#include "dehn/dual_surface.hpp"

#include <stdexcept>

namespace dehn {

namespace {

constexpr int kCornerRest[4] = {0, 1, 3, 2};

// (other axis, side) -> side index of Q_axis lying on that face.
int mid_square_side(int axis, int face) {
  int a = face_axis(face);
  int s = face_side(face);
  int j = axis == 0 ? 1 : 0;
  if (a == j) return s == 0 ? 0 : 2;
  return s == 1 ? 1 : 3;
}

// Cube edge -> (axis, corner of Q_axis).
std::pair<int, int> edge_to_corner(int edge) {
  int rest = edge % 4;
  for (int t = 0; t < 4; ++t)
    if (kCornerRest[t] == rest) return {edge / 4, t};
  return {-1, -1};
}

int edge_between(int v, int w) {
  int diff = v ^ w;
  int axis = diff == 4 ? 0 : diff == 2 ? 1 : 2;
  int lo = v & w;
  int rest = 0;
  for (int i = 0; i < 3; ++i)
    if (i != axis) rest = rest * 2 + cube_bit(lo, i);
  return axis * 4 + rest;
}

void require_valid(const IdealCubulation& c) {
  auto r = validate(c);
  if (!r.ok()) throw std::invalid_argument("invalid cubulation: " + r.violations.front().message);
}

}  // namespace

int mid_square_corner_edge(int axis, int corner) { return axis * 4 + kCornerRest[corner]; }

int DehnSurfaceStats::complement_balls() const {
  int n = 0;
  for (const auto& x : complement) n += x.ball();
  return n;
}

int DehnSurfaceStats::sheet_chi_sum() const {
  int n = 0;
  for (const auto& s : sheets) n += s.chi;
  return n;
}

std::vector<SurfaceDescriptor> trace_sheets(const IdealCubulation& c) {
  require_valid(c);
  return trace_sheets_unchecked(c);
}

std::vector<SurfaceDescriptor> trace_sheets_unchecked(const IdealCubulation& c) {
  PolygonComplex pc;
  for (std::size_t q = 0; q < 3 * c.size(); ++q) pc.add_polygon(4);
  for (std::size_t cube = 0; cube < c.size(); ++cube) {
    for (int f = 0; f < kCubeFaces; ++f) {
      const auto& r = *c.record(cube, f);
      if (std::make_pair(std::size_t{r.cube}, int(r.face)) < std::make_pair(cube, f)) continue;
      for (int axis = 0; axis < 3; ++axis) {
        if (axis == face_axis(f)) continue;
        int side = mid_square_side(axis, f);
        // Corner edges lie in f; carry them across by the vertex map.
        auto image = [&](int corner) {
          auto [v, w] = cube_edge_vertices(mid_square_corner_edge(axis, corner));
          return edge_to_corner(edge_between(c.glued_vertex(cube, f, v), c.glued_vertex(cube, f, w)));
        };
        auto [ax, start] = image(side);
        int target_side = mid_square_side(ax, r.face);
        bool same = start == target_side;
        pc.glue(3 * cube + axis, side, 3 * r.cube + ax, target_side, same);
      }
    }
  }
  return pc.analyze().components;
}

DehnSurfaceStats dual_surface_stats(const IdealCubulation& c, const OrbitReport& orbits,
                                    const std::vector<VertexLink>& links) {
  DehnSurfaceStats s;
  s.triple_points = static_cast<int>(c.size());
  s.singular_edges = orbits.faces;
  s.regions = orbits.edges;
  s.sheets = trace_sheets_unchecked(c);
  for (const auto& l : links) s.complement.push_back({l.vertex_class, l.link});
  return s;
}

DehnSurfaceStats dual_surface_stats(const IdealCubulation& c) {
  auto report = validate(c);
  if (!report.ok())
    throw std::invalid_argument("invalid cubulation: " + report.violations.front().message);
  return dual_surface_stats(c, *report.orbits, vertex_links(c, *report.orbits));
}

}  // namespace dehn
