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

#include "dehn/quasi_filling.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dehn/dual_surface.hpp"
#include "dehn/gluing_io.hpp"
#include "dehn/signature.hpp"
#include "dehn/validation.hpp"

namespace dehn {

using Node = QuasiFillingSurface::Node;

const std::vector<CatalogRow>& exceptional_catalog() {
  static const std::vector<CatalogRow> rows = {
      {ExceptionalKind::kSphere, "sphere", 2, 2, 1, 1},
      {ExceptionalKind::kProjectivePlane, "projective-plane", 1, 1, 1, 0},
      {ExceptionalKind::kSurfaceBundle, "surface-bundle", 0, 0, 1, 0},
      {ExceptionalKind::kDoubleProjectivePlane, "double-projective-plane", 2, 2, 2, 2},
      {ExceptionalKind::kFourHat, "four-hat", 1, 1, 1, 1},
      {ExceptionalKind::kTwoSpheresAlongCircle, "two-spheres", 4, 4, 4, 1},
      {ExceptionalKind::kSphereTorusLoop, "sphere-torus", 2, 2, 3, 2},
      {ExceptionalKind::kSphereKleinLoop, "sphere-klein", 2, 2, 3, 2},
      {ExceptionalKind::kSelfIntersectingSphere, "self-intersecting-sphere", 2, 2, 3, 2},
  };
  return rows;
}

const CatalogRow& catalog_row(ExceptionalKind kind) {
  for (const auto& r : exceptional_catalog())
    if (r.kind == kind) return r;
  throw std::invalid_argument("unknown exceptional kind");
}

std::string exceptional_manifold(const ExceptionalSurface& e) {
  std::string tag;
  switch (e.kind) {
    case ExceptionalKind::kSphere:
    case ExceptionalKind::kTwoSpheresAlongCircle:
      return e.punctures == 0 ? "S3" : "B3";
    case ExceptionalKind::kProjectivePlane:
      return "RP3";
    case ExceptionalKind::kSurfaceBundle:
      return "I-bundle(" + surface_name(e.base) + ")";
    case ExceptionalKind::kDoubleProjectivePlane: tag = "RP3"; break;
    case ExceptionalKind::kFourHat: tag = "L(4,1)"; break;
    case ExceptionalKind::kSphereTorusLoop: tag = "S2xS1"; break;
    case ExceptionalKind::kSphereKleinLoop: tag = "S2~xS1"; break;
    case ExceptionalKind::kSelfIntersectingSphere:
      tag = e.twisted ? "solid-Klein-bottle" : "solid-torus";
      break;
  }
  if (e.punctures > 0) tag += "-" + std::to_string(e.punctures) + "B";
  return tag;
}

namespace {

bool equal_nodes(const Node& a, const Node& b) {
  if (a.type != b.type || a.children.size() != b.children.size()) return false;
  switch (a.type) {
    case Node::Type::kFillingBase:
      if (a.signature != b.signature || a.manifold != b.manifold) return false;
      break;
    case Node::Type::kExceptional:
      if (!(a.exceptional == b.exceptional)) return false;
      break;
    case Node::Type::kBubble:
      if (a.region != b.region) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!(a.children[i] == b.children[i])) return false;
  return true;
}

QuasiFillingSurface make(Node n) {
  return QuasiFillingSurface(std::make_shared<const Node>(std::move(n)));
}

}  // namespace

bool operator==(const QuasiFillingSurface& a, const QuasiFillingSurface& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return equal_nodes(*a.node_, *b.node_);
}

QuasiFillingSurface filling_base(const IdealCubulation& c, std::string label, std::string manifold) {
  auto report = validate(c);
  if (!report.ok())
    throw std::invalid_argument("filling base must be a valid cubulation: " +
                                report.violations.front().message);
  auto dual = dual_surface_stats(c, *report.orbits, vertex_links(c, *report.orbits));
  Node n{Node::Type::kFillingBase, c, isomorphism_signature(c), std::move(label), std::move(manifold),
         dual.complement_balls(), dual.chi_abstract(), dual.regions, {}, 0, {}};
  if (n.label.empty()) n.label = "sig:" + n.signature;
  return make(std::move(n));
}

QuasiFillingSurface exceptional(const ExceptionalSurface& e) {
  const auto& row = catalog_row(e.kind);
  if (e.punctures < 0 || e.punctures > row.max_punctures)
    throw std::invalid_argument(std::string(row.name) + " allows at most " +
                                std::to_string(row.max_punctures) + " removed balls");
  if (e.kind == ExceptionalKind::kSurfaceBundle && (!e.base.closed() || !e.base.consistent()))
    throw std::invalid_argument("surface bundle needs a closed base surface");
  Node n{Node::Type::kExceptional, {}, {}, {}, {}, 0, 0, 0, e, 0, {}};
  return make(std::move(n));
}

QfsStats stats(const QuasiFillingSurface& q) {
  const Node& n = q.node();
  QfsStats s;
  switch (n.type) {
    case Node::Type::kFillingBase:
      s.triple_points = static_cast<int>(n.cubulation.size());
      s.complement_balls = n.base_balls;
      s.chi_abstract = n.base_chi;
      s.regions = n.base_regions;
      s.filling = true;
      s.manifold = n.manifold.empty() ? "M[" + n.label + "]" : n.manifold;
      break;
    case Node::Type::kExceptional: {
      const auto& row = catalog_row(n.exceptional.kind);
      s.complement_balls = row.balls - n.exceptional.punctures;
      s.chi_abstract = n.exceptional.kind == ExceptionalKind::kSurfaceBundle ? n.exceptional.base.chi
                                                                             : row.chi_abstract;
      s.regions = row.regions;
      s.manifold = exceptional_manifold(n.exceptional);
      break;
    }
    case Node::Type::kBubble: {
      s = stats(n.children[0]);
      // A small sphere through one region: two new half-balls, one new
      // sphere sheet, the region split in two plus the two sphere discs.
      *s.complement_balls += 2;
      *s.chi_abstract += 2;
      *s.regions += 3;
      s.filling = false;
      break;
    }
    case Node::Type::kConnSum:
    case Node::Type::kBoundaryConnSum: {
      auto a = stats(n.children[0]);
      auto b = stats(n.children[1]);
      s.triple_points = a.triple_points + b.triple_points;
      s.manifold = "(" + a.manifold + (n.type == Node::Type::kConnSum ? " # " : " #d ") + b.manifold + ")";
      break;
    }
  }
  return s;
}

QuasiFillingSurface bubble_move(const QuasiFillingSurface& q, int region) {
  auto s = stats(q);
  if (!s.regions)
    throw std::invalid_argument("regions are not tracked beneath a connected sum; bubble a summand instead");
  if (region < 0 || region >= *s.regions)
    throw std::invalid_argument("unknown region " + std::to_string(region) + " (surface has " +
                                std::to_string(*s.regions) + ")");
  Node n{Node::Type::kBubble, {}, {}, {}, {}, 0, 0, 0, {}, region, {q}};
  return make(std::move(n));
}

QuasiFillingSurface inverse_bubble_move(const QuasiFillingSurface& q) {
  if (q.node().type != Node::Type::kBubble)
    throw std::invalid_argument(
        "inverse bubble move needs the sphere to bound a ball containing two balls of the "
        "complement; that is certified only when the root is a bubble move");
  return q.node().children[0];
}

namespace {

QuasiFillingSurface with_ball(const QuasiFillingSurface& q) {
  auto s = stats(q);
  if (s.complement_balls && *s.complement_balls == 0) return bubble_move(q, 0);
  return q;
}

}  // namespace

QuasiFillingSurface connected_sum(const QuasiFillingSurface& a, const QuasiFillingSurface& b) {
  Node n{Node::Type::kConnSum, {}, {}, {}, {}, 0, 0, 0, {}, 0, {with_ball(a), with_ball(b)}};
  return make(std::move(n));
}

QuasiFillingSurface boundary_connected_sum(const QuasiFillingSurface& a, const QuasiFillingSurface& b) {
  Node n{Node::Type::kBoundaryConnSum, {}, {}, {}, {}, 0, 0, 0, {}, 0, {a, b}};
  return make(std::move(n));
}

std::string to_string(const QuasiFillingSurface& q) {
  const Node& n = q.node();
  switch (n.type) {
    case Node::Type::kFillingBase:
      return "base(" + n.label + (n.manifold.empty() ? "" : ", name=" + n.manifold) + ")";
    case Node::Type::kExceptional: {
      const auto& e = n.exceptional;
      std::string out = std::string("exc(") + catalog_row(e.kind).name;
      if (e.punctures) out += ", punctures=" + std::to_string(e.punctures);
      if (e.kind == ExceptionalKind::kSurfaceBundle) out += ", base=" + surface_name(e.base);
      if (e.kind == ExceptionalKind::kSelfIntersectingSphere && e.twisted) out += ", twisted=1";
      return out + ")";
    }
    case Node::Type::kBubble:
      return "bubble(region=" + std::to_string(n.region) + ", " + to_string(n.children[0]) + ")";
    case Node::Type::kConnSum:
      return "csum(" + to_string(n.children[0]) + ", " + to_string(n.children[1]) + ")";
    case Node::Type::kBoundaryConnSum:
      return "bcsum(" + to_string(n.children[0]) + ", " + to_string(n.children[1]) + ")";
  }
  return "";
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::string base_dir, int depth)
      : text_(text), dir_(std::move(base_dir)), depth_(depth) {}

  QuasiFillingSurface parse_all() {
    auto q = term();
    skip();
    if (i_ != text_.size()) fail("trailing text");
    return q;
  }

 private:
  struct Arg {
    std::string key;  // empty for positional
    std::string value;
    std::optional<QuasiFillingSurface> term;
  };

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression, offset " + std::to_string(i_) + ": " + what);
  }

  void skip() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < text_.size() && text_[i_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::string atom() {
    skip();
    std::size_t b = i_;
    while (i_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[i_])) &&
           text_[i_] != ',' && text_[i_] != '(' && text_[i_] != ')' && text_[i_] != '=')
      ++i_;
    if (b == i_) fail("expected a name");
    return text_.substr(b, i_ - b);
  }

  std::string path(const std::string& p) const {
    std::filesystem::path fp(p);
    if (fp.is_relative()) fp = std::filesystem::path(dir_) / fp;
    return fp.string();
  }

  std::vector<Arg> args() {
    std::vector<Arg> out;
    expect('(');
    if (peek(')')) {
      ++i_;
      return out;
    }
    for (;;) {
      std::size_t save = i_;
      std::string head = atom();
      Arg a;
      if (peek('=')) {
        ++i_;
        a.key = head;
        a.value = atom();
      } else {
        i_ = save;
        if (head == "base" || head == "exc" || head == "bubble" || head == "csum" || head == "bcsum" ||
            (head.size() > 4 && head.substr(head.size() - 4) == ".qfs")) {
          a.term = term();
        } else {
          a.value = atom();
        }
      }
      out.push_back(std::move(a));
      if (peek(',')) {
        ++i_;
        continue;
      }
      expect(')');
      return out;
    }
  }

  static int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
  }

  QuasiFillingSurface child(const Arg& a) {
    if (!a.term) fail("expected a sub-expression");
    return *a.term;
  }

  QuasiFillingSurface term() {
    std::string head = atom();
    if (!peek('(')) {
      if (head.size() > 4 && head.substr(head.size() - 4) == ".qfs") {
        if (depth_ > 32) fail("expression files nest too deeply");
        std::string p = path(head);
        std::ifstream in(p);
        if (!in) throw std::invalid_argument("cannot read " + p);
        std::stringstream ss;
        ss << in.rdbuf();
        Parser sub(ss.str(), std::filesystem::path(p).parent_path().string(), depth_ + 1);
        return sub.parse_all();
      }
      fail("unknown term '" + head + "'");
    }
    auto as = args();
    if (head == "base") {
      if (as.empty() || !as[0].key.empty() || as[0].term) fail("base needs a file or sig:<signature>");
      std::string name;
      for (std::size_t k = 1; k < as.size(); ++k) {
        if (as[k].key != "name") fail("base accepts only name=");
        name = as[k].value;
      }
      const std::string& src = as[0].value;
      if (src.rfind("sig:", 0) == 0) return filling_base(cubulation_from_signature(src.substr(4)), src, name);
      return filling_base(read_cubulation_file(path(src)), src, name);
    }
    if (head == "exc") {
      if (as.empty() || !as[0].key.empty()) fail("exc needs a kind");
      ExceptionalSurface e;
      bool known = false;
      for (const auto& row : exceptional_catalog())
        if (as[0].value == row.name) {
          e.kind = row.kind;
          known = true;
        }
      if (!known) fail("unknown exceptional kind '" + as[0].value + "'");
      bool have_base = false;
      for (std::size_t k = 1; k < as.size(); ++k) {
        const auto& a = as[k];
        if (a.key == "punctures") {
          e.punctures = to_int(a.value);
        } else if (a.key == "twisted") {
          e.twisted = to_int(a.value) != 0;
        } else if (a.key == "base") {
          auto s = parse_surface_name(a.value);
          if (!s) fail("unknown surface '" + a.value + "'");
          e.base = *s;
          have_base = true;
        } else {
          fail("unknown exc argument '" + a.key + "'");
        }
      }
      if (e.kind == ExceptionalKind::kSurfaceBundle && !have_base) fail("surface-bundle needs base=");
      return exceptional(e);
    }
    if (head == "bubble") {
      if (as.size() != 2 || as[0].key != "region") fail("bubble(region=<r>, <expr>)");
      return bubble_move(child(as[1]), to_int(as[0].value));
    }
    if (head == "csum" || head == "bcsum") {
      if (as.size() != 2) fail(head + " takes two expressions");
      auto a = child(as[0]);
      auto b = child(as[1]);
      return head == "csum" ? connected_sum(a, b) : boundary_connected_sum(a, b);
    }
    fail("unknown term '" + head + "'");
  }

  std::string text_;
  std::string dir_;
  int depth_;
  std::size_t i_ = 0;
};

}  // namespace

QuasiFillingSurface parse_qfs(const std::string& text, const std::string& base_dir) {
  return Parser(text, base_dir, 0).parse_all();
}

QuasiFillingSurface read_qfs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_qfs(ss.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace dehn
