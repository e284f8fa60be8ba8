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

// The Dehn surface dual to an ideal cubulation: one triple point per cube,
// one singular edge per face pair, one region per edge class and one
// complement component per vertex class.
//
// The abstract surface is assembled from three mid-squares per cube. The
// mid-square Q_i (perpendicular to axis i) has its corners on the four cube
// edges parallel to axis i, in the cyclic order (b_j, b_k) = (0,0), (0,1),
// (1,1), (1,0) for j < k the other two axes; side t joins corners t and t+1
// and lies on the face (j,0), (k,1), (j,1), (k,0) for t = 0..3.

#ifndef DEHN_DUAL_SURFACE_HPP_
#define DEHN_DUAL_SURFACE_HPP_

#include <vector>

#include "dehn/cubulation.hpp"
#include "dehn/surface.hpp"
#include "dehn/validation.hpp"

namespace dehn {

struct ComplementComponent {
  int vertex_class = 0;
  SurfaceDescriptor boundary;  // the vertex link
  bool ball() const { return boundary.is_sphere(); }
};

struct DehnSurfaceStats {
  int triple_points = 0;
  int singular_edges = 0;
  int regions = 0;
  std::vector<SurfaceDescriptor> sheets;
  std::vector<ComplementComponent> complement;

  int chi_singular_set() const { return triple_points - singular_edges + regions; }
  int chi_abstract() const { return 3 * triple_points - 2 * singular_edges + regions; }
  int complement_balls() const;
  int sheet_chi_sum() const;
};

// Both throw std::invalid_argument if c does not validate.
DehnSurfaceStats dual_surface_stats(const IdealCubulation& c);
std::vector<SurfaceDescriptor> trace_sheets(const IdealCubulation& c);

// For callers that already validated c: no checks.
DehnSurfaceStats dual_surface_stats(const IdealCubulation& c, const OrbitReport& orbits,
                                    const std::vector<VertexLink>& links);
std::vector<SurfaceDescriptor> trace_sheets_unchecked(const IdealCubulation& c);

// Cube edge (as in cube_edge_vertices) at corner `corner` of Q_axis.
int mid_square_corner_edge(int axis, int corner);

}  // namespace dehn

#endif  // DEHN_DUAL_SURFACE_HPP_
