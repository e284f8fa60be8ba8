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

#include "dehn/signature.hpp"

#include <cctype>
#include <stdexcept>

#include "cube_table.hpp"
#include "dehn/validation.hpp"

namespace dehn {
namespace detail {

namespace {

constexpr char kAlphabet[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUV";

// Everything the relabelling walk looks up, in one flat block.
struct WalkTables {
  std::uint8_t compose[kDihedralCount][kDihedralCount];
  std::uint8_t dihedral_inverse[kDihedralCount];
  std::uint8_t sym_inverse[kCubeSymCount];
  std::uint8_t sym_face[kCubeSymCount][kCubeFaces];
  std::uint8_t induced[kCubeSymCount][kCubeFaces];
  std::uint8_t from_face_map[kCubeFaces][kCubeFaces][kDihedralCount];
};

const WalkTables& walk_tables() {
  static const WalkTables t = [] {
    WalkTables out{};
    const auto& maps = dihedral_maps();
    for (int a = 0; a < kDihedralCount; ++a) {
      out.dihedral_inverse[a] = static_cast<std::uint8_t>(dehn::dihedral_inverse(a));
      for (int b = 0; b < kDihedralCount; ++b)
        out.compose[a][b] = static_cast<std::uint8_t>(*dihedral_index(compose(maps[a], maps[b])));
    }
    for (int s = 0; s < kCubeSymCount; ++s) {
      out.sym_inverse[s] = static_cast<std::uint8_t>(cube_sym_inverse(s));
      for (int f = 0; f < kCubeFaces; ++f) {
        out.sym_face[s][f] = static_cast<std::uint8_t>(cube_syms()[s].apply_face(f));
        out.induced[s][f] = static_cast<std::uint8_t>(induced_dihedral(s, f));
      }
    }
    for (int f = 0; f < kCubeFaces; ++f)
      for (int g = 0; g < kCubeFaces; ++g)
        for (int d = 0; d < kDihedralCount; ++d)
          out.from_face_map[f][g][d] = static_cast<std::uint8_t>(cube_sym_from_face_map(f, g, d));
    return out;
  }();
  return t;
}

// Breadth-first relabelling producing one token at a time. Only the first
// `limit` cubes of the walk are expanded, and only while they lie below
// `complete` in the table. Returns false as soon as `sink` returns false,
// when the table is disconnected or when the walk leaves the complete part.
template <typename Sink>
bool walk(const WalkTables& T, const CubeTable& t, int start, int sym, int complete, Sink&& sink) {
  int label[64];
  int frame[64];
  int order[64];
  std::vector<int> big_label;
  std::vector<int> big_frame;
  std::vector<int> big_order;
  int* lab = label;
  int* frm = frame;
  int* ord = order;
  if (t.cubes > 64) {
    big_label.assign(t.cubes, -1);
    big_frame.assign(t.cubes, 0);
    big_order.assign(t.cubes, 0);
    lab = big_label.data();
    frm = big_frame.data();
    ord = big_order.data();
  } else {
    for (int i = 0; i < t.cubes; ++i) lab[i] = -1;
  }
  int placed = 1;
  lab[start] = 0;
  frm[start] = sym;
  ord[0] = start;
  for (int L = 0; L < complete; ++L) {
    if (L >= placed) return false;
    int a = ord[L];
    if (a >= complete) return false;
    int g = frm[a];
    int ginv = T.sym_inverse[g];
    for (int F = 0; F < kCubeFaces; ++F) {
      int f = T.sym_face[ginv][F];
      int flat = a * 6 + f;
      int pflat = t.partner[flat];
      int b = pflat / 6;
      int fp = pflat % 6;
      int m = t.dihedral[flat];
      int dg = T.induced[g][f];
      if (lab[b] < 0) {
        int d = T.compose[dg][T.dihedral_inverse[m]];
        lab[b] = placed;
        frm[b] = T.from_face_map[fp][opposite_face(F)][d];
        ord[placed++] = b;
      }
      int h = frm[b];
      int face_new = T.sym_face[h][fp];
      int dh = T.induced[h][fp];
      int mm = T.compose[dh][T.compose[m][T.dihedral_inverse[dg]]];
      if (!sink(lab[b] * 48 + face_new * 8 + mm)) return false;
    }
  }
  return true;
}

// -1: walk < ref, 0: equal, +1: walk > ref (or disconnected).
int compare_walk(const WalkTables& T, const CubeTable& t, int start, int sym, int complete,
                 const int* ref) {
  std::size_t i = 0;
  int result = 0;
  bool done = walk(T, t, start, sym, complete, [&](int token) {
    if (token != ref[i]) {
      result = token < ref[i] ? -1 : 1;
      return false;
    }
    ++i;
    return true;
  });
  if (!done && result == 0) return 1;
  return result;
}

}  // namespace

int dihedral_compose(int a, int b) { return walk_tables().compose[a][b]; }

CubeTable to_table(const IdealCubulation& c) {
  CubeTable t(static_cast<int>(c.size()));
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (int f = 0; f < 6; ++f) {
      const auto& r = c.record(a, f);
      t.partner[a * 6 + f] = static_cast<int>(r->cube) * 6 + r->face;
      t.dihedral[a * 6 + f] = static_cast<std::uint8_t>(*dihedral_index(r->corners));
    }
  }
  return t;
}

IdealCubulation from_table(const CubeTable& t) {
  IdealCubulation c(static_cast<std::size_t>(t.cubes));
  const auto& maps = dihedral_maps();
  for (int i = 0; i < t.cubes * 6; ++i) {
    c.set_record(static_cast<std::size_t>(i / 6), i % 6,
                 CubeGluing{static_cast<std::uint32_t>(t.partner[i] / 6),
                            static_cast<std::uint8_t>(t.partner[i] % 6), maps[t.dihedral[i]]});
  }
  return c;
}

bool bfs_tokens(const CubeTable& t, int start, int sym, std::vector<int>* tokens) {
  tokens->clear();
  tokens->reserve(static_cast<std::size_t>(t.cubes) * 6);
  return walk(walk_tables(), t, start, sym, t.cubes, [&](int token) {
    tokens->push_back(token);
    return true;
  });
}

std::vector<int> canonical_tokens(const CubeTable& t) {
  std::vector<int> best;
  if (!bfs_tokens(t, 0, 0, &best)) throw std::invalid_argument("cubulation is disconnected");
  std::vector<int> scratch;
  const auto& T = walk_tables();
  for (int s = 0; s < t.cubes; ++s) {
    for (int g = 0; g < kCubeSymCount; ++g) {
      if (s == 0 && g == 0) continue;
      if (compare_walk(T, t, s, g, t.cubes, best.data()) < 0) {
        bfs_tokens(t, s, g, &scratch);
        best.swap(scratch);
      }
    }
  }
  return best;
}

bool is_canonical(const CubeTable& t) { return is_canonical_prefix(t, t.cubes); }

bool is_canonical_prefix(const CubeTable& t, int complete) {
  const auto& T = walk_tables();
  int small[6 * 64];
  std::vector<int> big;
  int* self = small;
  if (t.cubes > 64) {
    big.resize(static_cast<std::size_t>(t.cubes) * 6);
    self = big.data();
  }
  for (int i = 0; i < complete * 6; ++i)
    self[i] = (t.partner[i] / 6) * 48 + (t.partner[i] % 6) * 8 + t.dihedral[i];
  for (int s = 0; s < complete; ++s)
    for (int g = 0; g < kCubeSymCount; ++g)
      if (compare_walk(T, t, s, g, complete, self) < 0) return false;
  return true;
}

std::string encode_cube_tokens(int cubes, const std::vector<int>& tokens) {
  std::string out = "c" + std::to_string(cubes) + ":";
  for (int tok : tokens) {
    out += std::to_string(tok / 48);
    out += kAlphabet[tok % 48];
  }
  return out;
}

}  // namespace detail

namespace {

int letter_value(char ch, int limit) {
  const char* alpha = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUV";
  for (int i = 0; i < limit; ++i)
    if (alpha[i] == ch) return i;
  return -1;
}

// Splits "<prefix><count>:<tokens>" into (count, label/letter pairs).
std::pair<std::size_t, std::vector<std::pair<std::size_t, int>>> decode(const std::string& sig,
                                                                        char prefix, int limit) {
  if (sig.size() < 3 || sig[0] != prefix) throw std::invalid_argument("bad signature prefix");
  auto colon = sig.find(':');
  if (colon == std::string::npos || colon == 1) throw std::invalid_argument("bad signature header");
  for (std::size_t i = 1; i < colon; ++i)
    if (!std::isdigit(static_cast<unsigned char>(sig[i])))
      throw std::invalid_argument("bad signature header");
  std::size_t count = std::stoul(sig.substr(1, colon - 1));
  std::vector<std::pair<std::size_t, int>> tokens;
  std::size_t i = colon + 1;
  while (i < sig.size()) {
    std::size_t j = i;
    while (j < sig.size() && std::isdigit(static_cast<unsigned char>(sig[j]))) ++j;
    if (j == i || j >= sig.size()) throw std::invalid_argument("truncated signature token");
    int v = letter_value(sig[j], limit);
    if (v < 0) throw std::invalid_argument("bad signature letter");
    std::size_t label = std::stoul(sig.substr(i, j - i));
    if (label >= count) throw std::invalid_argument("signature label out of range");
    tokens.emplace_back(label, v);
    i = j + 1;
  }
  return {count, tokens};
}

struct TetTokens {
  std::vector<int> tokens;
  bool connected = true;
};

TetTokens tet_walk(const IdealTriangulation& t, std::size_t start, const Perm4& frame0) {
  const std::size_t n = t.size();
  std::vector<long> label(n, -1);
  std::vector<Perm4> frame(n);
  std::vector<std::size_t> order{start};
  label[start] = 0;
  frame[start] = frame0;
  TetTokens out;
  for (std::size_t L = 0; L < n; ++L) {
    if (L >= order.size()) {
      out.connected = false;
      return out;
    }
    std::size_t a = order[L];
    const Perm4& g = frame[a];
    Perm4 ginv = inverse(g);
    for (int F = 0; F < 4; ++F) {
      int f = ginv[F];
      const auto& r = *t.record(a, f);
      std::size_t b = r.tet;
      if (label[b] < 0) {
        label[b] = static_cast<long>(order.size());
        frame[b] = compose(g, inverse(r.perm));
        order.push_back(b);
      }
      Perm4 p = compose(frame[b], compose(r.perm, ginv));
      out.tokens.push_back(static_cast<int>(label[b]) * 24 + perm4_index(p));
    }
  }
  return out;
}

}  // namespace

std::string isomorphism_signature(const IdealCubulation& c) {
  if (c.size() == 0) throw std::invalid_argument("empty cubulation");
  for (std::size_t a = 0; a < c.size(); ++a)
    for (int f = 0; f < 6; ++f) {
      const auto& r = c.record(a, f);
      if (!r || r->cube >= c.size() || r->face >= 6 || !dihedral_index(r->corners))
        throw std::invalid_argument("signature requires a total dihedral gluing table");
      const auto& back = c.record(r->cube, r->face);
      if (!back || back->cube != a || back->face != f)
        throw std::invalid_argument("signature requires an involutive gluing table");
    }
  auto table = detail::to_table(c);
  return detail::encode_cube_tokens(table.cubes, detail::canonical_tokens(table));
}

std::string isomorphism_signature(const IdealTriangulation& t) {
  if (t.size() == 0) throw std::invalid_argument("empty triangulation");
  for (std::size_t a = 0; a < t.size(); ++a)
    for (int f = 0; f < 4; ++f) {
      const auto& r = t.record(a, f);
      if (!r || r->tet >= t.size() || !is_permutation(r->perm))
        throw std::invalid_argument("signature requires a total gluing table");
    }
  std::vector<int> best;
  for (std::size_t s = 0; s < t.size(); ++s) {
    for (const Perm4& g : all_perm4()) {
      auto w = tet_walk(t, s, g);
      if (!w.connected) throw std::invalid_argument("triangulation is disconnected");
      if (best.empty() || w.tokens < best) best = std::move(w.tokens);
    }
  }
  std::string out = "t" + std::to_string(t.size()) + ":";
  for (int tok : best) {
    out += std::to_string(tok / 24);
    out += "abcdefghijklmnopqrstuvwx"[tok % 24];
  }
  return out;
}

IdealCubulation cubulation_from_signature(const std::string& sig) {
  auto [k, tokens] = decode(sig, 'c', 48);
  if (tokens.size() != 6 * k) throw std::invalid_argument("signature has the wrong length");
  IdealCubulation c(k);
  const auto& maps = dihedral_maps();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto [label, v] = tokens[i];
    c.set_record(i / 6, static_cast<int>(i % 6),
                 CubeGluing{static_cast<std::uint32_t>(label), static_cast<std::uint8_t>(v / 8),
                            maps[v % 8]});
  }
  auto report = validate(c);
  for (const auto& v : report.violations)
    if (v.kind != ViolationKind::kReversedEdge)
      throw std::invalid_argument("signature does not describe a gluing table: " + v.message);
  return c;
}

IdealTriangulation triangulation_from_signature(const std::string& sig) {
  auto [n, tokens] = decode(sig, 't', 24);
  if (tokens.size() != 4 * n) throw std::invalid_argument("signature has the wrong length");
  IdealTriangulation t(n);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto [label, v] = tokens[i];
    t.set_record(i / 4, static_cast<int>(i % 4),
                 TetGluing{static_cast<std::uint32_t>(label), all_perm4()[v]});
  }
  auto report = validate(t);
  for (const auto& v : report.violations)
    if (v.kind != ViolationKind::kReversedEdge)
      throw std::invalid_argument("signature does not describe a gluing table: " + v.message);
  return t;
}

}  // namespace dehn
