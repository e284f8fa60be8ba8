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

// Quasi-filling Dehn surfaces as derivation expressions: a filling base
// (an ideal cubulation) or a catalogued surface without triple points,
// modified by bubble moves and combined by (boundary) connected sums.
//
// Text form, nested prefix terms:
//   base(<file.cub> | sig:<signature> [, name=<manifold>])
//   exc(<kind> [, punctures=<j>] [, base=<surface>] [, twisted=<0|1>])
//   bubble(region=<r>, <expr>)
//   csum(<expr>, <expr>)      bcsum(<expr>, <expr>)
//   <file.qfs>                (another expression file)

#ifndef DEHN_QUASI_FILLING_HPP_
#define DEHN_QUASI_FILLING_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dehn/cubulation.hpp"
#include "dehn/surface.hpp"

namespace dehn {

enum class ExceptionalKind {
  kSphere,
  kProjectivePlane,
  kSurfaceBundle,
  kDoubleProjectivePlane,
  kFourHat,
  kTwoSpheresAlongCircle,
  kSphereTorusLoop,
  kSphereKleinLoop,
  kSelfIntersectingSphere,
};

struct ExceptionalSurface {
  ExceptionalKind kind = ExceptionalKind::kSphere;
  int punctures = 0;             // balls removed from the closed model
  SurfaceDescriptor base;        // kSurfaceBundle only
  bool twisted = false;          // kSelfIntersectingSphere: solid Klein bottle

  friend bool operator==(const ExceptionalSurface&, const ExceptionalSurface&) = default;
};

struct CatalogRow {
  ExceptionalKind kind;
  const char* name;      // text-form keyword
  int chi_abstract;      // of the surface S
  int balls;             // complement balls with no puncture
  int regions;
  int max_punctures;
};

const std::vector<CatalogRow>& exceptional_catalog();
const CatalogRow& catalog_row(ExceptionalKind kind);

// Manifold presented by the item, e.g. "RP3", "L(4,1)-1B".
std::string exceptional_manifold(const ExceptionalSurface& e);

class QuasiFillingSurface {
 public:
  struct Node;

  QuasiFillingSurface() = default;
  explicit QuasiFillingSurface(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& node() const { return *node_; }
  bool empty() const { return !node_; }

  // Structural equality.
  friend bool operator==(const QuasiFillingSurface& a, const QuasiFillingSurface& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct QuasiFillingSurface::Node {
  enum class Type { kFillingBase, kExceptional, kBubble, kConnSum, kBoundaryConnSum };
  Type type;
  // kFillingBase
  IdealCubulation cubulation;
  std::string signature;
  std::string label;     // how the base was given (path or sig:...)
  std::string manifold;  // optional caller-supplied name
  int base_balls = 0;
  int base_chi = 0;
  int base_regions = 0;
  // kExceptional
  ExceptionalSurface exceptional;
  // kBubble
  int region = 0;
  // kBubble: children[0]; sums: children[0], children[1]
  std::vector<QuasiFillingSurface> children;
};

// Throws std::invalid_argument if c does not validate.
QuasiFillingSurface filling_base(const IdealCubulation& c, std::string label,
                                 std::string manifold = "");
// Throws std::invalid_argument on a puncture count outside the catalog.
QuasiFillingSurface exceptional(const ExceptionalSurface& e);

// Throws std::invalid_argument for an unknown region or when q's region
// bookkeeping is not tracked (beneath a sum).
QuasiFillingSurface bubble_move(const QuasiFillingSurface& q, int region);
// Throws std::invalid_argument unless the root of q is a bubble.
QuasiFillingSurface inverse_bubble_move(const QuasiFillingSurface& q);
QuasiFillingSurface connected_sum(const QuasiFillingSurface& a, const QuasiFillingSurface& b);
QuasiFillingSurface boundary_connected_sum(const QuasiFillingSurface& a,
                                           const QuasiFillingSurface& b);

struct QfsStats {
  int triple_points = 0;
  // Empty beneath sum nodes.
  std::optional<int> complement_balls;
  std::optional<int> chi_abstract;
  std::optional<int> regions;
  bool filling = false;
  std::string manifold;
};

QfsStats stats(const QuasiFillingSurface& q);

std::string to_string(const QuasiFillingSurface& q);
// Relative file names resolve against base_dir. Throws std::invalid_argument
// on malformed text.
QuasiFillingSurface parse_qfs(const std::string& text, const std::string& base_dir = ".");
QuasiFillingSurface read_qfs_file(const std::string& path);

}  // namespace dehn

#endif  // DEHN_QUASI_FILLING_HPP_
