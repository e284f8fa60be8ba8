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

#include "dehn/validation.hpp"

#include <algorithm>
#include <stdexcept>

#include "union_find.hpp"

namespace dehn {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnglued: return "non-total gluing";
    case ViolationKind::kOutOfRange: return "out of range";
    case ViolationKind::kBadMap: return "invalid map";
    case ViolationKind::kSelfGluedFace: return "face glued to itself";
    case ViolationKind::kNonInvolutive: return "non-involutive";
    case ViolationKind::kReversedEdge: return "reversed edge";
    case ViolationKind::kDisconnected: return "disconnected";
  }
  return "unknown";
}

std::pair<int, int> tet_edge_vertices(int edge) {
  static constexpr std::pair<int, int> kEdges[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return kEdges[edge];
}

std::pair<int, int> cube_edge_vertices(int edge) {
  int axis = edge / 4;
  int rest = edge % 4;
  // Spread the two remaining bits over the other two axes, high axis first.
  int others[2];
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != axis) others[k++] = i;
  int v = 0;
  if (rest & 2) v |= axis_mask(others[0]);
  if (rest & 1) v |= axis_mask(others[1]);
  return {v, v | axis_mask(axis)};
}

namespace {

// Cell shape shared by tetrahedra and cubes.
struct Shape {
  int vertex_count;
  int face_count;
  std::vector<std::vector<int>> face_vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> edge_index;  // [a][b] -> edge or -1
  // For each vertex: its three neighbours, sorted.
  std::vector<std::array<int, 3>> neighbours;
  // For each vertex and link side s (neighbours s, s+1): the face.
  std::vector<std::array<int, 3>> link_side_face;

  bool on_face(int f, int v) const {
    const auto& fv = face_vertices[f];
    return std::find(fv.begin(), fv.end(), v) != fv.end();
  }

  void finish() {
    edge_index.assign(vertex_count, std::vector<int>(vertex_count, -1));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      edge_index[edges[e].first][edges[e].second] = static_cast<int>(e);
      edge_index[edges[e].second][edges[e].first] = static_cast<int>(e);
    }
    neighbours.resize(vertex_count);
    link_side_face.resize(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
      int k = 0;
      for (int w = 0; w < vertex_count; ++w)
        if (edge_index[v][w] >= 0) neighbours[v][k++] = w;
      for (int s = 0; s < 3; ++s) {
        int a = neighbours[v][s];
        int b = neighbours[v][(s + 1) % 3];
        for (int f = 0; f < face_count; ++f)
          if (on_face(f, v) && on_face(f, a) && on_face(f, b)) link_side_face[v][s] = f;
      }
    }
  }
};

const Shape& tet_shape() {
  static const Shape shape = [] {
    Shape s{4, 4, {}, {}, {}, {}, {}};
    for (int f = 0; f < 4; ++f) {
      std::vector<int> fv;
      for (int v = 0; v < 4; ++v)
        if (v != f) fv.push_back(v);
      s.face_vertices.push_back(fv);
    }
    for (int e = 0; e < 6; ++e) s.edges.push_back(tet_edge_vertices(e));
    s.finish();
    return s;
  }();
  return shape;
}

const Shape& cube_shape() {
  static const Shape shape = [] {
    Shape s{8, 6, {}, {}, {}, {}, {}};
    for (int f = 0; f < 6; ++f) {
      std::vector<int> fv;
      for (int p = 0; p < 4; ++p) fv.push_back(face_corner(f, p));
      s.face_vertices.push_back(fv);
    }
    for (int e = 0; e < 12; ++e) s.edges.push_back(cube_edge_vertices(e));
    s.finish();
    return s;
  }();
  return shape;
}

// Normalised record: vertex map defined on the face's vertices.
struct Record {
  bool present = false;
  bool in_range = false;
  bool good_map = false;
  std::size_t cell = 0;
  int face = 0;
  std::array<int, 8> vmap{};
};

struct Table {
  const Shape* shape;
  std::size_t cells;
  std::vector<Record> records;  // flattened cell * face_count + face

  const Record& at(std::size_t c, int f) const {
    return records[c * static_cast<std::size_t>(shape->face_count) + static_cast<std::size_t>(f)];
  }
};

Table make_table(const IdealTriangulation& t) {
  Table table{&tet_shape(), t.size(), {}};
  table.records.resize(t.size() * 4);
  for (std::size_t c = 0; c < t.size(); ++c) {
    for (int f = 0; f < 4; ++f) {
      Record& r = table.records[c * 4 + f];
      const auto& src = t.record(c, f);
      if (!src) continue;
      r.present = true;
      r.cell = src->tet;
      r.good_map = is_permutation(src->perm);
      r.face = r.good_map ? src->perm[f] : 0;
      r.in_range = src->tet < t.size();
      if (r.good_map)
        for (int v = 0; v < 4; ++v) r.vmap[v] = src->perm[v];
    }
  }
  return table;
}

Table make_table(const IdealCubulation& cub) {
  Table table{&cube_shape(), cub.size(), {}};
  table.records.resize(cub.size() * 6);
  for (std::size_t c = 0; c < cub.size(); ++c) {
    for (int f = 0; f < 6; ++f) {
      Record& r = table.records[c * 6 + f];
      const auto& src = cub.record(c, f);
      if (!src) continue;
      r.present = true;
      r.cell = src->cube;
      r.face = src->face;
      r.in_range = src->cube < cub.size() && src->face < kCubeFaces;
      r.good_map = dihedral_index(src->corners).has_value();
      if (r.good_map && r.in_range) {
        r.vmap.fill(-1);
        for (int p = 0; p < 4; ++p) r.vmap[face_corner(f, p)] = face_corner(r.face, src->corners[p]);
      }
    }
  }
  return table;
}

std::string where(std::size_t cell, int face) {
  return "(" + std::to_string(cell) + ", " + std::to_string(face) + ")";
}

ValidationReport validate_table(const Table& t, const char* face_word) {
  ValidationReport report;
  const Shape& s = *t.shape;
  auto add = [&](ViolationKind k, std::size_t cell, int label, std::string msg) {
    report.violations.push_back({k, cell, label, std::move(msg)});
  };
  if (t.cells == 0) {
    add(ViolationKind::kDisconnected, 0, -1, "empty complex");
    return report;
  }

  for (std::size_t c = 0; c < t.cells; ++c) {
    for (int f = 0; f < s.face_count; ++f) {
      const Record& r = t.at(c, f);
      auto here = [&] { return std::string(face_word) + " " + where(c, f); };
      if (!r.present) {
        add(ViolationKind::kUnglued, c, f, here() + " is not glued");
      } else if (!r.in_range) {
        add(ViolationKind::kOutOfRange, c, f, here() + " names a missing target");
      } else if (!r.good_map) {
        add(ViolationKind::kBadMap, c, f, here() + " carries an invalid map");
      } else if (r.cell == c && r.face == f) {
        add(ViolationKind::kSelfGluedFace, c, f, here() + " is glued to itself");
      } else {
        const Record& back = t.at(r.cell, r.face);
        bool ok = back.present && back.in_range && back.good_map && back.cell == c && back.face == f;
        if (ok) {
          for (int v : s.face_vertices[f])
            if (back.vmap[r.vmap[v]] != v) ok = false;
        }
        if (!ok) {
          add(ViolationKind::kNonInvolutive, c, f,
              here() + " -> " + where(r.cell, r.face) + " is not inverted by its partner");
        }
      }
    }
  }
  if (!report.ok()) return report;

  detail::UnionFind cells(t.cells);
  detail::UnionFind vertices(t.cells * s.vertex_count);
  const std::size_t ne = s.edges.size();
  detail::ParityUnionFind edges(t.cells * ne);
  std::vector<char> reversed(t.cells * ne, 0);
  std::vector<std::size_t> reversed_at;

  for (std::size_t c = 0; c < t.cells; ++c) {
    for (int f = 0; f < s.face_count; ++f) {
      const Record& r = t.at(c, f);
      cells.unite(c, r.cell);
      const auto& fv = s.face_vertices[f];
      for (int v : fv) vertices.unite(c * s.vertex_count + v, r.cell * s.vertex_count + r.vmap[v]);
      for (std::size_t i = 0; i < fv.size(); ++i) {
        for (std::size_t j = i + 1; j < fv.size(); ++j) {
          int e = s.edge_index[fv[i]][fv[j]];
          if (e < 0) continue;
          auto [a, b] = s.edges[e];
          int ia = r.vmap[a];
          int ib = r.vmap[b];
          int e2 = s.edge_index[ia][ib];
          int parity = (s.edges[e2].first == ia) ? 0 : 1;
          auto res = edges.unite(c * ne + e, r.cell * ne + e2, parity);
          if (res == detail::ParityUnionFind::Result::kContradiction) {
            std::size_t root = edges.find(c * ne + e).first;
            if (!reversed[root]) {
              reversed[root] = 1;
              reversed_at.push_back(c * ne + e);
            }
          }
        }
      }
    }
  }

  int cell_classes = 0;
  cells.labels(&cell_classes);
  if (cell_classes > 1) {
    add(ViolationKind::kDisconnected, 0, -1,
        "complex has " + std::to_string(cell_classes) + " connected components");
  }
  for (std::size_t flat : reversed_at) {
    std::size_t c = flat / ne;
    int e = static_cast<int>(flat % ne);
    auto [a, b] = s.edges[e];
    add(ViolationKind::kReversedEdge, c, e,
        "edge " + std::to_string(e) + " {" + std::to_string(a) + "," + std::to_string(b) +
            "} of cell " + std::to_string(c) + " is identified with itself reversed");
  }
  if (!report.ok()) return report;

  OrbitReport orbits;
  orbits.cells = static_cast<int>(t.cells);
  auto vertex_labels = vertices.labels(&orbits.vertices);
  orbits.vertex_class.assign(t.cells, std::vector<int>(s.vertex_count));
  orbits.vertex_reps.resize(orbits.vertices);
  std::vector<char> seen(orbits.vertices, 0);
  for (std::size_t c = 0; c < t.cells; ++c) {
    for (int v = 0; v < s.vertex_count; ++v) {
      int id = vertex_labels[c * s.vertex_count + v];
      orbits.vertex_class[c][v] = id;
      if (!seen[id]) {
        seen[id] = 1;
        orbits.vertex_reps[id] = {c, v};
      }
    }
  }

  orbits.edge_class.assign(t.cells, std::vector<int>(ne));
  std::vector<int> root_id(t.cells * ne, -1);
  for (std::size_t c = 0; c < t.cells; ++c) {
    for (std::size_t e = 0; e < ne; ++e) {
      std::size_t root = edges.find(c * ne + e).first;
      if (root_id[root] < 0) {
        root_id[root] = orbits.edges++;
        orbits.edge_reps.push_back({c, static_cast<int>(e)});
      }
      orbits.edge_class[c][e] = root_id[root];
    }
  }

  for (std::size_t c = 0; c < t.cells; ++c) {
    for (int f = 0; f < s.face_count; ++f) {
      const Record& r = t.at(c, f);
      if (std::make_pair(c, f) < std::make_pair(r.cell, r.face)) {
        orbits.faces++;
        orbits.face_reps.push_back({c, f});
      }
    }
  }
  report.orbits = std::move(orbits);
  return report;
}

std::vector<VertexLink> links_of(const Table& t, const OrbitReport& orbits) {
  const Shape& s = *t.shape;
  PolygonComplex complex;
  auto poly = [&](std::size_t c, int v) { return c * s.vertex_count + static_cast<std::size_t>(v); };
  for (std::size_t i = 0; i < t.cells * s.vertex_count; ++i) complex.add_polygon(3);

  for (std::size_t c = 0; c < t.cells; ++c) {
    for (int v = 0; v < s.vertex_count; ++v) {
      for (int side = 0; side < 3; ++side) {
        int f = s.link_side_face[v][side];
        const Record& r = t.at(c, f);
        int tv = r.vmap[v];
        int target_side = -1;
        for (int q = 0; q < 3; ++q)
          if (s.link_side_face[tv][q] == r.face) target_side = q;
        std::size_t here = poly(c, v) * 3 + side;
        std::size_t there = poly(r.cell, tv) * 3 + target_side;
        if (there <= here) continue;
        int start_image = r.vmap[s.neighbours[v][side]];
        bool same = s.neighbours[tv][target_side] == start_image;
        complex.glue(poly(c, v), side, poly(r.cell, tv), target_side, same);
      }
    }
  }

  auto analysis = complex.analyze();
  std::vector<VertexLink> out;
  for (int id = 0; id < orbits.vertices; ++id) {
    const CellLabel& rep = orbits.vertex_reps[id];
    int comp = analysis.component_of[poly(rep.cell, rep.label)];
    out.push_back({id, rep, analysis.components[comp]});
  }
  if (static_cast<int>(analysis.components.size()) != orbits.vertices)
    throw std::logic_error("vertex links do not match vertex classes");
  return out;
}

}  // namespace

ValidationReport validate(const IdealTriangulation& t) {
  return validate_table(make_table(t), "face");
}

ValidationReport validate(const IdealCubulation& c) {
  return validate_table(make_table(c), "face");
}

std::vector<VertexLink> vertex_links(const IdealTriangulation& t) {
  auto table = make_table(t);
  auto report = validate_table(table, "face");
  if (!report.ok()) throw std::invalid_argument("vertex_links requires a valid triangulation");
  return links_of(table, *report.orbits);
}

std::vector<VertexLink> vertex_links(const IdealCubulation& c) {
  auto table = make_table(c);
  auto report = validate_table(table, "face");
  if (!report.ok()) throw std::invalid_argument("vertex_links requires a valid cubulation");
  return links_of(table, *report.orbits);
}

std::vector<VertexLink> vertex_links(const IdealTriangulation& t, const OrbitReport& orbits) {
  return links_of(make_table(t), orbits);
}

std::vector<VertexLink> vertex_links(const IdealCubulation& c, const OrbitReport& orbits) {
  return links_of(make_table(c), orbits);
}

bool euler_identity_check(const OrbitReport& orbits, const std::vector<VertexLink>& links) {
  int sum = 0;
  for (const auto& l : links) sum += l.link.chi;
  if (sum % 2 != 0) return false;
  return orbits.euler_characteristic() == euler_from_links(orbits.vertices, links);
}

int euler_from_links(int vertex_classes, const std::vector<VertexLink>& links) {
  int sum = 0;
  for (const auto& l : links) sum += l.link.chi;
  return vertex_classes - sum / 2;
}

namespace {
template <typename Complex>
bool euler_identity(const Complex& x) {
  auto report = validate(x);
  if (!report.ok()) return false;
  return euler_identity_check(*report.orbits, vertex_links(x));
}
}  // namespace

bool euler_identity_check(const IdealTriangulation& t) { return euler_identity(t); }
bool euler_identity_check(const IdealCubulation& c) { return euler_identity(c); }

}  // namespace dehn
