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

#include "dehn/surface2d.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "union_find.hpp"

namespace dehn {

using detail::UnionFind;

namespace {

// Slot-indexed view of a ribbon diagram with crossings: slot x*4+s.
struct Flat {
  int crossings = 0;
  std::vector<int> partner;
  std::vector<std::uint8_t> twist;
};

Flat flatten(const DehnLoopDiagram& d) {
  Flat f{d.crossings, std::vector<int>(4 * d.crossings, -1), std::vector<std::uint8_t>(4 * d.crossings, 0)};
  for (const auto& e : d.edges) {
    int a = e.a.crossing * 4 + e.a.slot;
    int b = e.b.crossing * 4 + e.b.slot;
    f.partner[a] = b;
    f.partner[b] = a;
    f.twist[a] = f.twist[b] = static_cast<std::uint8_t>(e.twist.value_or(0));
  }
  return f;
}

DehnLoopDiagram unflatten(const Flat& f) {
  DehnLoopDiagram d;
  d.crossings = f.crossings;
  for (int a = 0; a < 4 * f.crossings; ++a) {
    int b = f.partner[a];
    if (b < a) continue;
    d.edges.push_back({{a / 4, a % 4}, {b / 4, b % 4}, f.twist[a]});
  }
  return d;
}

void require_ribbon(const DehnLoopDiagram& d) {
  auto problems = diagram_problems(d);
  if (!problems.empty()) throw std::invalid_argument("malformed diagram: " + problems.front());
  if (!d.has_ribbon())
    throw std::invalid_argument(
        "bare loop: an edge has no twist bit, and either of the two ways of gluing the "
        "adjacent squares fits it");
}

bool flat_connected(const Flat& f) {
  UnionFind uf(f.crossings);
  for (int a = 0; a < 4 * f.crossings; ++a) uf.unite(a / 4, f.partner[a] / 4);
  for (int x = 1; x < f.crossings; ++x)
    if (uf.find(x) != uf.find(0)) return false;
  return true;
}

int mod4(int x) { return ((x % 4) + 4) % 4; }

// Token sequence of the breadth-first relabelling from `start` in frame
// (rot, refl); tokens are label*8 + slot*2 + twist.
void bfs_code(const Flat& f, int start, int rot0, int refl0, std::vector<int>& label,
              std::vector<int>& rot, std::vector<int>& refl, std::vector<int>& order,
              std::vector<int>& out) {
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  out.clear();
  label[start] = 0;
  rot[start] = rot0;
  refl[start] = refl0;
  order.push_back(start);
  for (std::size_t li = 0; li < order.size(); ++li) {
    int v = order[li];
    for (int i = 0; i < 4; ++i) {
      int o = refl[v] ? mod4(rot[v] - i) : mod4(rot[v] + i);
      int p = f.partner[v * 4 + o];
      int w = p / 4;
      int t = p % 4;
      int tw = f.twist[v * 4 + o];
      if (label[w] < 0) {
        label[w] = static_cast<int>(order.size());
        rot[w] = t;
        refl[w] = tw ^ refl[v];
        order.push_back(w);
      }
      int ns = refl[w] ? mod4(rot[w] - t) : mod4(t - rot[w]);
      out.push_back(label[w] * 8 + ns * 2 + (tw ^ refl[v] ^ refl[w]));
    }
  }
}

std::vector<int> canonical_tokens(const Flat& f) {
  int c = f.crossings;
  std::vector<int> label(c), rot(c), refl(c), order, cur, best;
  for (int v = 0; v < c; ++v)
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 2; ++s) {
        bfs_code(f, v, r, s, label, rot, refl, order, cur);
        if (best.empty() || cur < best) best = cur;
      }
  return best;
}

std::string encode(int crossings, const std::vector<int>& tokens) {
  std::string out = "c" + std::to_string(crossings) + ":";
  for (std::size_t i = 0; i < tokens.size(); ++i) out += (i ? "," : "") + std::to_string(tokens[i]);
  return out;
}

PolygonComplex thickening_complex(const DehnLoopDiagram& d) {
  PolygonComplex pc;
  for (int x = 0; x < d.crossings; ++x) pc.add_polygon(8);
  for (const auto& e : d.edges)
    pc.glue(e.a.crossing, 2 * e.a.slot, e.b.crossing, 2 * e.b.slot, *e.twist != 0);
  for (const auto& t : d.free_loops) {
    auto p = pc.add_polygon(4);
    pc.glue(p, 0, p, 2, *t != 0);
  }
  return pc;
}

}  // namespace

bool DehnLoopDiagram::has_ribbon() const {
  for (const auto& e : edges)
    if (!e.twist) return false;
  for (const auto& t : free_loops)
    if (!t) return false;
  return true;
}

std::vector<std::string> diagram_problems(const DehnLoopDiagram& d) {
  std::vector<std::string> out;
  if (d.crossings < 0) return {"negative crossing count"};
  std::vector<int> used(4 * d.crossings, 0);
  for (const auto& e : d.edges) {
    for (const auto& s : {e.a, e.b}) {
      if (s.crossing < 0 || s.crossing >= d.crossings || s.slot < 0 || s.slot > 3) {
        out.push_back("slot " + std::to_string(s.crossing) + "." + std::to_string(s.slot) + " out of range");
        continue;
      }
      ++used[s.crossing * 4 + s.slot];
    }
    if (e.a == e.b) out.push_back("edge joins slot " + std::to_string(e.a.crossing) + "." +
                                  std::to_string(e.a.slot) + " to itself");
  }
  if (!out.empty()) return out;
  for (int a = 0; a < 4 * d.crossings; ++a) {
    std::string name = std::to_string(a / 4) + "." + std::to_string(a % 4);
    if (used[a] == 0) out.push_back("slot " + name + " unused");
    if (used[a] > 1) out.push_back("slot " + name + " used " + std::to_string(used[a]) + " times");
  }
  if (!out.empty()) return out;
  if (d.crossings == 0 && d.free_loops.empty()) out.push_back("empty diagram");
  if (d.crossings > 0 && !d.free_loops.empty()) out.push_back("disconnected: free loop beside crossings");
  if (d.free_loops.size() > 1) out.push_back("disconnected: several free loops");
  if (d.crossings > 0 && !flat_connected(flatten(d))) out.push_back("disconnected");
  return out;
}

int strand_count(const DehnLoopDiagram& d) {
  auto problems = diagram_problems(d);
  if (!problems.empty()) throw std::invalid_argument("malformed diagram: " + problems.front());
  UnionFind uf(4 * d.crossings);
  for (int x = 0; x < d.crossings; ++x) {
    uf.unite(4 * x, 4 * x + 2);
    uf.unite(4 * x + 1, 4 * x + 3);
  }
  for (const auto& e : d.edges) uf.unite(e.a.crossing * 4 + e.a.slot, e.b.crossing * 4 + e.b.slot);
  int roots = 0;
  for (int a = 0; a < 4 * d.crossings; ++a) roots += uf.find(a) == static_cast<std::size_t>(a);
  return roots + static_cast<int>(d.free_loops.size());
}

SurfaceDescriptor thicken(const DehnLoopDiagram& d) {
  require_ribbon(d);
  return thickening_complex(d).analyze().components.at(0);
}

DehnLoopDiagram mirror(const DehnLoopDiagram& d) {
  DehnLoopDiagram out = d;
  for (auto& e : out.edges) {
    e.a.slot = mod4(-e.a.slot);
    e.b.slot = mod4(-e.b.slot);
  }
  return out;
}

int loop_complexity(const SurfaceDescriptor& s) {
  if (!s.consistent())
    throw std::invalid_argument("no compact surface has chi=" + std::to_string(s.chi) + ", " +
                                std::to_string(s.boundary) + " boundary components and " +
                                (s.orientable ? "is orientable" : "is non-orientable"));
  if (s.boundary > 0) return s == surfaces::kDisc ? 0 : -s.chi;
  return s == surfaces::kSphere ? 0 : 1 - s.chi;
}

bool is_quasi_filling(const DehnLoopDiagram& d, const SurfaceDescriptor& target) {
  if (!diagram_problems(d).empty() || !d.has_ribbon() || !target.consistent()) return false;
  auto thick = thicken(d);
  int punctures = thick.boundary - target.boundary;
  if (punctures < 0 || (target.closed() && punctures == 0)) return false;
  return thick.orientable == target.orientable && thick.chi == target.chi - punctures;
}

bool is_filling(const DehnLoopDiagram& d) { return d.crossings > 0 && diagram_problems(d).empty(); }

std::string canonical_code(const DehnLoopDiagram& d) {
  require_ribbon(d);
  if (d.crossings == 0) return "c0:" + std::to_string(*d.free_loops[0]);
  return encode(d.crossings, canonical_tokens(flatten(d)));
}

namespace {

void enumerate_matchings(Flat& f, std::map<std::string, Flat>& classes) {
  int n = 4 * f.crossings;
  int a = 0;
  while (a < n && f.partner[a] >= 0) ++a;
  if (a == n) {
    if (!flat_connected(f)) return;
    // Reflections can clear the twist on every edge of a spanning tree, so
    // only the remaining edges need both values.
    std::vector<int> free_edges;
    std::vector<int> seen(f.crossings, 0), queue{0};
    std::vector<int> tree(n, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int s = 0; s < 4; ++s) {
        int p = f.partner[queue[i] * 4 + s];
        if (!seen[p / 4]) {
          seen[p / 4] = 1;
          tree[queue[i] * 4 + s] = tree[p] = 1;
          queue.push_back(p / 4);
        }
      }
    for (int x = 0; x < n; ++x)
      if (f.partner[x] > x && !tree[x]) free_edges.push_back(x);
    for (int mask = 0; mask < (1 << free_edges.size()); ++mask) {
      std::fill(f.twist.begin(), f.twist.end(), 0);
      for (std::size_t i = 0; i < free_edges.size(); ++i) {
        int x = free_edges[i];
        f.twist[x] = f.twist[f.partner[x]] = (mask >> i) & 1;
      }
      classes.try_emplace(encode(f.crossings, canonical_tokens(f)), f);
    }
    return;
  }
  for (int b = a + 1; b < n; ++b) {
    if (f.partner[b] >= 0) continue;
    f.partner[a] = b;
    f.partner[b] = a;
    enumerate_matchings(f, classes);
    f.partner[a] = f.partner[b] = -1;
  }
}

}  // namespace

std::vector<DehnLoopDiagram> enumerate_loop_diagrams(int crossings) {
  if (crossings < 0) throw std::invalid_argument("negative crossing count");
  if (crossings == 0) {
    DehnLoopDiagram plain, twisted;
    plain.free_loops = {0};
    twisted.free_loops = {1};
    return {plain, twisted};
  }
  Flat f{crossings, std::vector<int>(4 * crossings, -1), std::vector<std::uint8_t>(4 * crossings, 0)};
  std::map<std::string, Flat> classes;
  enumerate_matchings(f, classes);
  std::vector<DehnLoopDiagram> out;
  out.reserve(classes.size());
  for (const auto& [code, rep] : classes) out.push_back(unflatten(rep));
  return out;
}

namespace {

const std::vector<SurfaceDescriptor>& thickenings(int crossings, std::vector<DehnLoopDiagram>** reps) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<DehnLoopDiagram>, std::vector<SurfaceDescriptor>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(crossings);
  if (it == cache.end()) {
    auto diagrams = enumerate_loop_diagrams(crossings);
    std::vector<SurfaceDescriptor> surfaces;
    surfaces.reserve(diagrams.size());
    for (const auto& d : diagrams) surfaces.push_back(thicken(d));
    it = cache.emplace(crossings, std::make_pair(std::move(diagrams), std::move(surfaces))).first;
  }
  *reps = &it->second.first;
  return it->second.second;
}

}  // namespace

LcSearch brute_force_lc(const SurfaceDescriptor& target, int max_crossings) {
  LcSearch out;
  for (int c = 0; c <= max_crossings; ++c) {
    std::vector<DehnLoopDiagram>* reps = nullptr;
    const auto& thick = thickenings(c, &reps);
    out.classes.push_back(static_cast<long>(thick.size()));
    for (std::size_t i = 0; i < thick.size(); ++i) {
      int punctures = thick[i].boundary - target.boundary;
      if (punctures < 0 || (target.closed() && punctures == 0)) continue;
      if (thick[i].orientable != target.orientable || thick[i].chi != target.chi - punctures) continue;
      out.crossings = c;
      out.witness = (*reps)[i];
      return out;
    }
  }
  return out;
}

void SquareCubulation2D::glue(int a, int s, int b, int t, bool flip) {
  pairing.at(a * 4 + s) = SquarePairing{b, t, flip};
  pairing.at(b * 4 + t) = SquarePairing{a, s, flip};
}

std::vector<std::string> cubulation_problems(const SquareCubulation2D& q) {
  std::vector<std::string> out;
  if (q.squares < 1) return {"no squares"};
  if (static_cast<int>(q.pairing.size()) != 4 * q.squares) return {"pairing table has the wrong size"};
  for (int a = 0; a < 4 * q.squares; ++a) {
    std::string name = std::to_string(a / 4) + "." + std::to_string(a % 4);
    const auto& p = q.pairing[a];
    if (!p) {
      out.push_back("side " + name + " unglued");
      continue;
    }
    if (p->square < 0 || p->square >= q.squares || p->side < 0 || p->side > 3) {
      out.push_back("side " + name + " glued out of range");
      continue;
    }
    int b = p->square * 4 + p->side;
    if (b == a) {
      out.push_back("side " + name + " glued to itself");
      continue;
    }
    const auto& back = q.pairing[b];
    if (!back || back->square * 4 + back->side != a || back->flip != p->flip)
      out.push_back("side " + name + " not involutive");
  }
  if (!out.empty()) return out;
  UnionFind uf(q.squares);
  for (int a = 0; a < 4 * q.squares; ++a) uf.unite(a / 4, q.pairing[a]->square);
  for (int x = 1; x < q.squares; ++x)
    if (uf.find(x) != uf.find(0)) return {"disconnected"};
  return out;
}

SurfaceDescriptor square_surface(const SquareCubulation2D& q) {
  auto problems = cubulation_problems(q);
  if (!problems.empty()) throw std::invalid_argument("invalid square complex: " + problems.front());
  PolygonComplex pc;
  for (int x = 0; x < q.squares; ++x) pc.add_polygon(4);
  for (int a = 0; a < 4 * q.squares; ++a) {
    const auto& p = *q.pairing[a];
    if (p.square * 4 + p.side < a) continue;
    pc.glue(a / 4, a % 4, p.square, p.side, p.flip);
  }
  return pc.analyze().components.at(0);
}

SquareCubulation2D loop_to_squares(const DehnLoopDiagram& d) {
  require_ribbon(d);
  if (d.crossings == 0) throw std::invalid_argument("a diagram without crossings has no dual squares");
  SquareCubulation2D q(d.crossings);
  for (const auto& e : d.edges) q.glue(e.a.crossing, e.a.slot, e.b.crossing, e.b.slot, *e.twist != 0);
  return q;
}

DehnLoopDiagram squares_to_loop(const SquareCubulation2D& q) {
  auto problems = cubulation_problems(q);
  if (!problems.empty()) throw std::invalid_argument("invalid square complex: " + problems.front());
  DehnLoopDiagram d;
  d.crossings = q.squares;
  for (int a = 0; a < 4 * q.squares; ++a) {
    const auto& p = *q.pairing[a];
    if (p.square * 4 + p.side < a) continue;
    d.edges.push_back({{a / 4, a % 4}, {p.square, p.side}, p.flip ? 1 : 0});
  }
  return d;
}

namespace {

std::vector<std::string> statements(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream parts(line);
    std::string st;
    while (std::getline(parts, st, ';')) {
      auto b = st.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      auto e = st.find_last_not_of(" \t\r");
      out.push_back(st.substr(b, e - b + 1));
    }
  }
  return out;
}

[[noreturn]] void statement_error(std::size_t i, const std::string& what) {
  throw std::invalid_argument("statement " + std::to_string(i + 1) + ": " + what);
}

}  // namespace

DehnLoopDiagram parse_loop_diagram(const std::string& text) {
  static const std::regex kHeader(R"(crossings\s*=\s*(\d+))");
  static const std::regex kEdge(R"(edge\s+(\d+)\.(\d+)\s+(\d+)\.(\d+)(?:\s+twist\s*=\s*([01]))?)");
  static const std::regex kLoop(R"(loop(?:\s+twist\s*=\s*([01]))?)");
  auto st = statements(text);
  if (st.empty()) throw std::invalid_argument("empty diagram text");
  DehnLoopDiagram d;
  std::smatch m;
  if (!std::regex_match(st[0], m, kHeader)) statement_error(0, "expected 'crossings=<c>'");
  d.crossings = std::stoi(m[1]);
  for (std::size_t i = 1; i < st.size(); ++i) {
    if (std::regex_match(st[i], m, kEdge)) {
      LoopEdge e{{std::stoi(m[1]), std::stoi(m[2])}, {std::stoi(m[3]), std::stoi(m[4])}, std::nullopt};
      for (const auto& s : {e.a, e.b})
        if (s.crossing >= d.crossings || s.slot > 3) statement_error(i, "slot out of range");
      if (m[5].matched) e.twist = std::stoi(m[5]);
      d.edges.push_back(e);
    } else if (std::regex_match(st[i], m, kLoop)) {
      d.free_loops.push_back(m[1].matched ? std::optional<int>(std::stoi(m[1])) : std::nullopt);
    } else {
      statement_error(i, "cannot parse '" + st[i] + "'");
    }
  }
  return d;
}

SquareCubulation2D parse_square_cubulation(const std::string& text) {
  static const std::regex kHeader(R"(squares\s*=\s*(\d+))");
  static const std::regex kSide(R"(side\s+(\d+)\.(\d+)\s+(\d+)\.(\d+)\s+flip\s*=\s*([01]))");
  auto st = statements(text);
  if (st.empty()) throw std::invalid_argument("empty square complex text");
  std::smatch m;
  if (!std::regex_match(st[0], m, kHeader)) statement_error(0, "expected 'squares=<k>'");
  SquareCubulation2D q(std::stoi(m[1]));
  for (std::size_t i = 1; i < st.size(); ++i) {
    if (!std::regex_match(st[i], m, kSide)) statement_error(i, "cannot parse '" + st[i] + "'");
    int a = std::stoi(m[1]), s = std::stoi(m[2]), b = std::stoi(m[3]), t = std::stoi(m[4]);
    if (a >= q.squares || b >= q.squares || s > 3 || t > 3) statement_error(i, "side out of range");
    if (q.pairing[a * 4 + s] || q.pairing[b * 4 + t]) statement_error(i, "side glued twice");
    q.glue(a, s, b, t, m[5] == "1");
  }
  return q;
}

std::string to_text(const DehnLoopDiagram& d) {
  std::ostringstream os;
  os << "crossings=" << d.crossings << ";";
  for (const auto& e : d.edges) {
    os << " edge " << e.a.crossing << '.' << e.a.slot << ' ' << e.b.crossing << '.' << e.b.slot;
    if (e.twist) os << " twist=" << *e.twist;
    os << ';';
  }
  for (const auto& t : d.free_loops) {
    os << " loop";
    if (t) os << " twist=" << *t;
    os << ';';
  }
  return os.str();
}

std::string to_text(const SquareCubulation2D& q) {
  std::ostringstream os;
  os << "squares=" << q.squares << ";";
  for (int a = 0; a < static_cast<int>(q.pairing.size()); ++a) {
    const auto& p = q.pairing[a];
    if (!p || p->square * 4 + p->side < a) continue;
    os << " side " << a / 4 << '.' << a % 4 << ' ' << p->square << '.' << p->side << " flip=" << p->flip
       << ';';
  }
  return os.str();
}

DehnLoopDiagram read_loop_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_loop_diagram(ss.str());
}

}  // namespace dehn
