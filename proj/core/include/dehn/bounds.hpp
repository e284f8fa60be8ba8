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


// Interval bounds on surface-complexity sc and Matveev complexity c per
// named manifold. Every value carries the rule that produced it and the
// entries it was computed from; updates only ever tighten an interval.
//
// Script form (one command per line, '#' comments):
//   manifold <name> [hyp]       hyp: caller vouches for the hypotheses of
//                               the sc/c comparison theorem
//   catalog <name>
//   tri <name> <n>              M has an ideal triangulation with n tetrahedra
//   qfs <name> <file|expr>      quasi-filling surface of M
//   assert <name> <sc|c> <lo|hi|eq> <value>
//   sum <name> = <a> # <b>      (or #d for the boundary connected sum)
//   matveev <name>

#ifndef DEHN_BOUNDS_HPP_
#define DEHN_BOUNDS_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dehn/quasi_filling.hpp"

namespace dehn {

enum class Quantity { kScLower, kScUpper, kCLower, kCUpper };

// "sc_lo", "sc_hi", "c_lo", "c_hi".
const char* quantity_name(Quantity q);

struct BoundRef {
  std::string manifold;
  Quantity quantity;
  int value;
  friend bool operator==(const BoundRef&, const BoundRef&) = default;
};

struct BoundEntry {
  int value = 0;
  std::string rule;             // "catalog", "triangulation", "qfs", "matveev", ...
  std::string detail;           // rule parameters, e.g. "n=2"
  std::vector<BoundRef> inputs;
  std::string chain;            // rendered provenance, frozen when set
  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct ManifoldBounds {
  std::optional<BoundEntry> sc_lower, sc_upper, c_lower, c_upper;
  bool hypotheses = false;

  const std::optional<BoundEntry>& get(Quantity q) const;
  std::optional<BoundEntry>& get(Quantity q);
  friend bool operator==(const ManifoldBounds&, const ManifoldBounds&) = default;
};

// Raised when a lower bound would exceed an upper bound; the message names
// the provenance of both.
class ContradictionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Either a declaration (quantity empty) or an applied bound.
struct BoundEvent {
  std::string manifold;
  std::optional<Quantity> quantity;
  BoundEntry entry;
  bool hypotheses = false;
};

class BoundLedger {
 public:
  void declare(const std::string& name, bool hypotheses);
  bool has(const std::string& name) const { return entries_.count(name) > 0; }
  // Throws std::out_of_range for an unknown name.
  const ManifoldBounds& at(const std::string& name) const { return entries_.at(name); }
  const std::map<std::string, ManifoldBounds>& entries() const { return entries_; }
  // Events that changed the ledger, in order.
  const std::vector<BoundEvent>& events() const { return events_; }

  // Applies the bound if it is tighter than the current one. Returns true
  // on a change. Throws ContradictionError (leaving the ledger unchanged)
  // if the interval would become empty.
  bool tighten(const std::string& name, Quantity q, int value, const std::string& rule,
               const std::string& detail = "", std::vector<BoundRef> inputs = {});

  friend bool operator==(const BoundLedger& a, const BoundLedger& b) { return a.entries_ == b.entries_; }

 private:
  std::string chain_of(const BoundRef& r) const;

  std::map<std::string, ManifoldBounds> entries_;
  std::vector<BoundEvent> events_;
};

// Re-applies the events to an empty ledger.
BoundLedger replay(const std::vector<BoundEvent>& events);

// Interval intersection of two ledgers.
BoundLedger merge(const BoundLedger& a, const BoundLedger& b);

// Throws std::invalid_argument for n < 1.
int sc_upper_from_triangulation(int n);
void apply_triangulation_bound(BoundLedger& ledger, const std::string& name, int n);

struct CatalogValues {
  std::optional<int> sc;
  std::optional<int> c;
  std::optional<int> sc_lower;
  std::optional<int> c_lower;
  bool empty() const { return !sc && !c && !sc_lower && !c_lower; }
};
CatalogValues catalog_lookup(const std::string& tag);
// Returns false for a tag outside the catalog.
bool apply_catalog(BoundLedger& ledger, const std::string& name);

// sc <= 4c and c <= 8sc, iterated to a fixpoint. Throws
// std::invalid_argument unless the manifold was declared with hypotheses,
// and always for L(3,1) and L(4,1).
void apply_matveev_relations(BoundLedger& ledger, const std::string& name);

// sc(a # b) <= sc(a) + sc(b) (also for #d). Throws std::invalid_argument if
// an input has no upper bound. Returns the name of the sum entry.
std::string apply_subadditivity(BoundLedger& ledger, const std::string& a, const std::string& b,
                                bool boundary, std::string sum_name = "");

// sc(M) <= number of triple points of q; M defaults to q's manifold tag.
std::string apply_qfs(BoundLedger& ledger, const QuasiFillingSurface& q, std::string name = "");

enum class Relation { kAtLeast, kAtMost, kEqual };
void apply_assertion(BoundLedger& ledger, const std::string& name, bool sc, Relation rel, int value);

// Runs a script; relative qfs file names resolve against base_dir. Errors
// are std::invalid_argument with the line number, or ContradictionError.
BoundLedger run_bounds_script(const std::string& text, const std::string& base_dir = ".");

// Human-readable dump, one block per manifold.
std::string render_ledger(const BoundLedger& ledger);

}  // namespace dehn

#endif  // DEHN_BOUNDS_HPP_
