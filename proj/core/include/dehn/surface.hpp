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

#ifndef DEHN_SURFACE_HPP_
#define DEHN_SURFACE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dehn {

// A compact connected surface up to homeomorphism.
struct SurfaceDescriptor {
  bool orientable = true;
  int chi = 2;
  int boundary = 0;

  bool closed() const { return boundary == 0; }
  // True when some compact connected surface has these invariants.
  bool consistent() const;
  // Genus for orientable surfaces, number of cross-caps otherwise.
  int genus() const;
  bool is_sphere() const { return orientable && chi == 2 && boundary == 0; }

  friend auto operator<=>(const SurfaceDescriptor&, const SurfaceDescriptor&) = default;
};

// Short names: S2, RP2, T2, K, B2, A, M, and "orientable genus g, b
// boundary" style names (e.g. "S_g2" or "N_h3_b1") otherwise.
std::string surface_name(const SurfaceDescriptor& s);
// Inverse of surface_name for the short names plus the S_g<g>[_b<b>] and
// N_h<h>[_b<b>] forms.
std::optional<SurfaceDescriptor> parse_surface_name(const std::string& name);

namespace surfaces {
inline constexpr SurfaceDescriptor kSphere{true, 2, 0};
inline constexpr SurfaceDescriptor kProjectivePlane{false, 1, 0};
inline constexpr SurfaceDescriptor kTorus{true, 0, 0};
inline constexpr SurfaceDescriptor kKleinBottle{false, 0, 0};
inline constexpr SurfaceDescriptor kDisc{true, 1, 1};
inline constexpr SurfaceDescriptor kAnnulus{true, 0, 2};
inline constexpr SurfaceDescriptor kMobius{false, 0, 1};
}  // namespace surfaces

// A finite 2-dimensional cell complex built from polygons whose sides are
// glued in pairs. Side i of a polygon runs from corner i to corner i+1.
// `same_direction` glues corner i to corner j (and i+1 to j+1); otherwise
// the sides are glued head to tail, which is the orientation-compatible
// gluing when both polygons carry their corner order as orientation.
class PolygonComplex {
 public:
  std::size_t add_polygon(int sides);
  void glue(std::size_t polygon, int side, std::size_t other, int other_side,
            bool same_direction);

  std::size_t polygon_count() const { return sides_.size(); }
  bool side_glued(std::size_t polygon, int side) const;

  struct Analysis {
    std::vector<SurfaceDescriptor> components;
    std::vector<int> component_of;  // per polygon
    int vertex_classes = 0;
    std::vector<int> vertex_class_of_corner;  // flattened (polygon, corner)
    std::vector<std::size_t> corner_offset;   // per polygon
  };
  Analysis analyze() const;

 private:
  struct Link {
    std::size_t polygon = 0;
    int side = -1;
    bool same_direction = false;
  };
  std::vector<int> sides_;
  std::vector<std::size_t> offset_;
  std::vector<Link> links_;  // flattened (polygon, side)
};

}  // namespace dehn

#endif  // DEHN_SURFACE_HPP_
