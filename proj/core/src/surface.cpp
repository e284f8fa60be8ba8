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

#include "dehn/surface.hpp"

#include <deque>
#include <regex>
#include <stdexcept>

#include "union_find.hpp"

namespace dehn {

bool SurfaceDescriptor::consistent() const {
  if (boundary < 0) return false;
  int deficit = 2 - boundary - chi;  // 2g (orientable) or h (non-orientable)
  if (orientable) return deficit >= 0 && deficit % 2 == 0;
  return deficit >= 1;
}

int SurfaceDescriptor::genus() const {
  int deficit = 2 - boundary - chi;
  return orientable ? deficit / 2 : deficit;
}

std::string surface_name(const SurfaceDescriptor& s) {
  if (!s.consistent()) {
    return "invalid(chi=" + std::to_string(s.chi) + ",b=" + std::to_string(s.boundary) + ")";
  }
  if (s == surfaces::kSphere) return "S2";
  if (s == surfaces::kProjectivePlane) return "RP2";
  if (s == surfaces::kTorus) return "T2";
  if (s == surfaces::kKleinBottle) return "K";
  if (s == surfaces::kDisc) return "B2";
  if (s == surfaces::kAnnulus) return "A";
  if (s == surfaces::kMobius) return "M";
  std::string out = s.orientable ? "S_g" : "N_h";
  out += std::to_string(s.genus());
  if (s.boundary > 0) out += "_b" + std::to_string(s.boundary);
  return out;
}

std::optional<SurfaceDescriptor> parse_surface_name(const std::string& name) {
  static const std::pair<const char*, SurfaceDescriptor> kShort[] = {
      {"S2", surfaces::kSphere},       {"RP2", surfaces::kProjectivePlane},
      {"T2", surfaces::kTorus},        {"T", surfaces::kTorus},
      {"K", surfaces::kKleinBottle},   {"B2", surfaces::kDisc},
      {"A", surfaces::kAnnulus},       {"M", surfaces::kMobius},
  };
  for (const auto& [n, s] : kShort)
    if (name == n) return s;
  static const std::regex kLong(R"(([SN])_[gh](\d+)(?:_b(\d+))?)");
  std::smatch m;
  if (!std::regex_match(name, m, kLong)) return std::nullopt;
  SurfaceDescriptor s;
  s.orientable = m[1] == "S";
  int g = std::stoi(m[2]);
  s.boundary = m[3].matched ? std::stoi(m[3]) : 0;
  s.chi = 2 - s.boundary - (s.orientable ? 2 * g : g);
  if (!s.consistent()) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------

std::size_t PolygonComplex::add_polygon(int sides) {
  if (sides < 1) throw std::invalid_argument("polygon needs at least one side");
  std::size_t id = sides_.size();
  offset_.push_back(links_.size());
  sides_.push_back(sides);
  links_.resize(links_.size() + static_cast<std::size_t>(sides));
  return id;
}

bool PolygonComplex::side_glued(std::size_t polygon, int side) const {
  return links_[offset_[polygon] + static_cast<std::size_t>(side)].side >= 0;
}

void PolygonComplex::glue(std::size_t polygon, int side, std::size_t other, int other_side,
                          bool same_direction) {
  if (polygon == other && side == other_side)
    throw std::invalid_argument("cannot glue a polygon side to itself");
  if (side_glued(polygon, side) || side_glued(other, other_side))
    throw std::invalid_argument("polygon side glued twice");
  links_[offset_[polygon] + side] = {other, other_side, same_direction};
  links_[offset_[other] + other_side] = {polygon, side, same_direction};
}

PolygonComplex::Analysis PolygonComplex::analyze() const {
  const std::size_t n = sides_.size();
  const std::size_t corners = links_.size();
  auto corner = [&](std::size_t p, int i) {
    return offset_[p] + static_cast<std::size_t>(i % sides_[p]);
  };

  detail::UnionFind corner_uf(corners);
  detail::UnionFind poly_uf(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (int i = 0; i < sides_[p]; ++i) {
      const Link& l = links_[offset_[p] + i];
      if (l.side < 0) continue;
      std::size_t self = offset_[p] + i;
      std::size_t partner = offset_[l.polygon] + l.side;
      if (partner < self) continue;
      poly_uf.unite(p, l.polygon);
      if (l.same_direction) {
        corner_uf.unite(corner(p, i), corner(l.polygon, l.side));
        corner_uf.unite(corner(p, i + 1), corner(l.polygon, l.side + 1));
      } else {
        corner_uf.unite(corner(p, i), corner(l.polygon, l.side + 1));
        corner_uf.unite(corner(p, i + 1), corner(l.polygon, l.side));
      }
    }
  }

  Analysis out;
  int component_count = 0;
  out.component_of = poly_uf.labels(&component_count);
  out.vertex_class_of_corner = corner_uf.labels(&out.vertex_classes);
  out.corner_offset = offset_;
  out.components.assign(static_cast<std::size_t>(component_count), SurfaceDescriptor{true, 0, 0});

  // Orientation: 2-colour the polygons.
  std::vector<int> sign(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t p = queue.front();
      queue.pop_front();
      for (int i = 0; i < sides_[p]; ++i) {
        const Link& l = links_[offset_[p] + i];
        if (l.side < 0) continue;
        int want = l.same_direction ? -sign[p] : sign[p];
        if (sign[l.polygon] == 0) {
          sign[l.polygon] = want;
          queue.push_back(l.polygon);
        } else if (sign[l.polygon] != want) {
          out.components[out.component_of[p]].orientable = false;
        }
      }
    }
  }

  // Euler characteristic per component.
  std::vector<int> vertex_component(static_cast<std::size_t>(out.vertex_classes), -1);
  std::vector<int> boundary_sides;
  for (std::size_t p = 0; p < n; ++p) {
    auto& comp = out.components[out.component_of[p]];
    comp.chi += 1;
    for (int i = 0; i < sides_[p]; ++i) {
      const Link& l = links_[offset_[p] + i];
      if (l.side < 0) {
        comp.chi -= 1;
        boundary_sides.push_back(static_cast<int>(offset_[p] + i));
      } else if (offset_[l.polygon] + l.side > offset_[p] + i) {
        comp.chi -= 1;
      }
      int v = out.vertex_class_of_corner[offset_[p] + i];
      if (vertex_component[v] < 0) {
        vertex_component[v] = out.component_of[p];
        comp.chi += 1;
      }
    }
  }

  // Boundary circles: unglued sides linked through shared vertices.
  if (!boundary_sides.empty()) {
    std::vector<std::size_t> owner(corners);
    for (std::size_t p = 0; p < n; ++p)
      for (int i = 0; i < sides_[p]; ++i) owner[offset_[p] + i] = p;
    detail::UnionFind side_uf(boundary_sides.size());
    std::vector<int> first_side_at_vertex(static_cast<std::size_t>(out.vertex_classes), -1);
    for (std::size_t b = 0; b < boundary_sides.size(); ++b) {
      std::size_t flat = static_cast<std::size_t>(boundary_sides[b]);
      std::size_t p = owner[flat];
      int i = static_cast<int>(flat - offset_[p]);
      for (int end = 0; end < 2; ++end) {
        int v = out.vertex_class_of_corner[corner(p, i + end)];
        if (first_side_at_vertex[v] < 0) {
          first_side_at_vertex[v] = static_cast<int>(b);
        } else {
          side_uf.unite(b, static_cast<std::size_t>(first_side_at_vertex[v]));
        }
      }
    }
    std::vector<char> counted(boundary_sides.size(), 0);
    for (std::size_t b = 0; b < boundary_sides.size(); ++b) {
      std::size_t r = side_uf.find(b);
      if (counted[r]) continue;
      counted[r] = 1;
      std::size_t p = owner[static_cast<std::size_t>(boundary_sides[b])];
      out.components[out.component_of[p]].boundary += 1;
    }
  }
  return out;
}

}  // namespace dehn
