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

#include "dehn/bounds.hpp"

#include <filesystem>
#include <sstream>

namespace dehn {

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kScLower: return "sc_lo";
    case Quantity::kScUpper: return "sc_hi";
    case Quantity::kCLower: return "c_lo";
    case Quantity::kCUpper: return "c_hi";
  }
  return "?";
}

namespace {

bool is_lower(Quantity q) { return q == Quantity::kScLower || q == Quantity::kCLower; }

Quantity partner(Quantity q) {
  switch (q) {
    case Quantity::kScLower: return Quantity::kScUpper;
    case Quantity::kScUpper: return Quantity::kScLower;
    case Quantity::kCLower: return Quantity::kCUpper;
    case Quantity::kCUpper: return Quantity::kCLower;
  }
  return q;
}

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

}  // namespace

const std::optional<BoundEntry>& ManifoldBounds::get(Quantity q) const {
  switch (q) {
    case Quantity::kScLower: return sc_lower;
    case Quantity::kScUpper: return sc_upper;
    case Quantity::kCLower: return c_lower;
    case Quantity::kCUpper: return c_upper;
  }
  return sc_lower;
}

std::optional<BoundEntry>& ManifoldBounds::get(Quantity q) {
  return const_cast<std::optional<BoundEntry>&>(std::as_const(*this).get(q));
}

void BoundLedger::declare(const std::string& name, bool hypotheses) {
  auto it = entries_.find(name);
  if (it != entries_.end() && (it->second.hypotheses || !hypotheses)) return;
  entries_[name].hypotheses = hypotheses;
  events_.push_back({name, std::nullopt, {}, hypotheses});
}

std::string BoundLedger::chain_of(const BoundRef& r) const {
  auto it = entries_.find(r.manifold);
  if (it != entries_.end()) {
    const auto& e = it->second.get(r.quantity);
    if (e && e->value == r.value) return e->chain;
  }
  return std::string(quantity_name(r.quantity)) + "(" + r.manifold + ")=" + std::to_string(r.value);
}

bool BoundLedger::tighten(const std::string& name, Quantity q, int value, const std::string& rule,
                          const std::string& detail, std::vector<BoundRef> inputs) {
  if (is_lower(q) && value < 0) value = 0;
  ManifoldBounds scratch;
  auto found = entries_.find(name);
  const ManifoldBounds& slot = found == entries_.end() ? scratch : found->second;
  const auto& cur = slot.get(q);
  if (cur && (is_lower(q) ? value <= cur->value : value >= cur->value)) return false;

  BoundEntry e{value, rule, detail, std::move(inputs), ""};
  std::string chain =
      std::string(quantity_name(q)) + "(" + name + ")=" + std::to_string(value) + " by " + rule;
  if (!detail.empty()) chain += " " + detail;
  if (!e.inputs.empty()) {
    chain += " from {";
    for (std::size_t i = 0; i < e.inputs.size(); ++i) chain += (i ? "; " : "") + chain_of(e.inputs[i]);
    chain += "}";
  }
  e.chain = chain;

  const auto& other = slot.get(partner(q));
  if (other && (is_lower(q) ? value > other->value : value < other->value)) {
    const auto& lo = is_lower(q) ? e : *other;
    const auto& hi = is_lower(q) ? *other : e;
    throw ContradictionError("contradiction for " + name + ": " + lo.chain + " exceeds " + hi.chain);
  }
  if (!entries_.count(name)) events_.push_back({name, std::nullopt, {}, false});
  events_.push_back({name, q, e, false});
  entries_[name].get(q) = std::move(e);
  return true;
}

namespace {

void apply_event(BoundLedger& l, const BoundEvent& ev) {
  if (!ev.quantity) {
    l.declare(ev.manifold, ev.hypotheses);
  } else {
    l.tighten(ev.manifold, *ev.quantity, ev.entry.value, ev.entry.rule, ev.entry.detail, ev.entry.inputs);
  }
}

}  // namespace

BoundLedger replay(const std::vector<BoundEvent>& events) {
  BoundLedger out;
  for (const auto& ev : events) apply_event(out, ev);
  return out;
}

BoundLedger merge(const BoundLedger& a, const BoundLedger& b) {
  BoundLedger out;
  for (const auto* l : {&a, &b})
    for (const auto& ev : l->events()) apply_event(out, ev);
  return out;
}

int sc_upper_from_triangulation(int n) {
  if (n < 1) throw std::invalid_argument("a triangulation has at least one tetrahedron");
  return 4 * n;
}

void apply_triangulation_bound(BoundLedger& ledger, const std::string& name, int n) {
  ledger.tighten(name, Quantity::kScUpper, sc_upper_from_triangulation(n), "triangulation",
                 "n=" + std::to_string(n));
}

CatalogValues catalog_lookup(const std::string& tag) {
  CatalogValues v;
  if (tag == "S3" || tag == "B3" || tag == "RP3") {
    v.sc = 0;
    v.c = 0;
  } else if (tag == "L(4,1)") {
    v.sc = 0;
    v.c_lower = 1;
  } else if (tag == "L(3,1)") {
    v.c = 0;
    v.sc_lower = 1;
  }
  return v;
}

bool apply_catalog(BoundLedger& ledger, const std::string& name) {
  auto v = catalog_lookup(name);
  if (v.empty()) return false;
  ledger.declare(name, false);
  if (v.sc) {
    ledger.tighten(name, Quantity::kScLower, *v.sc, "catalog");
    ledger.tighten(name, Quantity::kScUpper, *v.sc, "catalog");
  }
  if (v.c) {
    ledger.tighten(name, Quantity::kCLower, *v.c, "catalog");
    ledger.tighten(name, Quantity::kCUpper, *v.c, "catalog");
  }
  if (v.sc_lower) ledger.tighten(name, Quantity::kScLower, *v.sc_lower, "catalog");
  if (v.c_lower) ledger.tighten(name, Quantity::kCLower, *v.c_lower, "catalog");
  return true;
}

void apply_matveev_relations(BoundLedger& ledger, const std::string& name) {
  if (name == "L(3,1)" || name == "L(4,1)")
    throw std::invalid_argument(name + " is an exception to sc <= 4c and c <= 8sc");
  if (!ledger.has(name) || !ledger.at(name).hypotheses)
    throw std::invalid_argument(name + " is not declared as satisfying the hypotheses of sc <= 4c <= 32sc");
  auto ref = [&](Quantity q) -> std::optional<BoundRef> {
    const auto& e = ledger.at(name).get(q);
    if (!e) return std::nullopt;
    return BoundRef{name, q, e->value};
  };
  for (bool changed = true; changed;) {
    changed = false;
    if (auto r = ref(Quantity::kCUpper))
      changed |= ledger.tighten(name, Quantity::kScUpper, 4 * r->value, "matveev", "sc<=4c", {*r});
    if (auto r = ref(Quantity::kCLower))
      changed |= ledger.tighten(name, Quantity::kScLower, ceil_div(r->value, 8), "matveev", "c<=8sc", {*r});
    if (auto r = ref(Quantity::kScUpper))
      changed |= ledger.tighten(name, Quantity::kCUpper, 8 * r->value, "matveev", "c<=8sc", {*r});
    if (auto r = ref(Quantity::kScLower))
      changed |= ledger.tighten(name, Quantity::kCLower, ceil_div(r->value, 4), "matveev", "sc<=4c", {*r});
  }
}

std::string apply_subadditivity(BoundLedger& ledger, const std::string& a, const std::string& b,
                                bool boundary, std::string sum_name) {
  std::vector<BoundRef> in;
  for (const auto& x : {a, b}) {
    if (!ledger.has(x) || !ledger.at(x).sc_upper)
      throw std::invalid_argument("no upper bound on sc(" + x + ")");
    in.push_back({x, Quantity::kScUpper, ledger.at(x).sc_upper->value});
  }
  if (sum_name.empty()) sum_name = "(" + a + (boundary ? " #d " : " # ") + b + ")";
  ledger.declare(sum_name, false);
  ledger.tighten(sum_name, Quantity::kScUpper, in[0].value + in[1].value, "subadditivity",
                 boundary ? "#d" : "#", in);
  return sum_name;
}

std::string apply_qfs(BoundLedger& ledger, const QuasiFillingSurface& q, std::string name) {
  auto s = stats(q);
  if (name.empty()) name = s.manifold;
  ledger.declare(name, false);
  ledger.tighten(name, Quantity::kScUpper, s.triple_points, "qfs", to_string(q));
  return name;
}

void apply_assertion(BoundLedger& ledger, const std::string& name, bool sc, Relation rel, int value) {
  ledger.declare(name, false);
  if (rel != Relation::kAtMost)
    ledger.tighten(name, sc ? Quantity::kScLower : Quantity::kCLower, value, "assert");
  if (rel != Relation::kAtLeast)
    ledger.tighten(name, sc ? Quantity::kScUpper : Quantity::kCUpper, value, "assert");
}

BoundLedger run_bounds_script(const std::string& text, const std::string& base_dir) {
  BoundLedger ledger;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
    };
    const std::string& line = raw;
    // '#' also spells a connected sum, so only whole-line comments exist.
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> w;
    for (std::string t; ls >> t;) w.push_back(t);
    auto to_int = [&](const std::string& s) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(s, &used);
      } catch (const std::exception&) {
        fail("not an integer: " + s);
      }
      if (used != s.size()) fail("not an integer: " + s);
      return v;
    };
    try {
      const std::string& cmd = w[0];
      if (cmd == "manifold" && (w.size() == 2 || (w.size() == 3 && w[2] == "hyp"))) {
        ledger.declare(w[1], w.size() == 3);
      } else if (cmd == "catalog" && w.size() == 2) {
        if (!apply_catalog(ledger, w[1])) fail(w[1] + " is not in the catalog");
      } else if (cmd == "tri" && w.size() == 3) {
        ledger.declare(w[1], false);
        apply_triangulation_bound(ledger, w[1], to_int(w[2]));
      } else if (cmd == "qfs" && w.size() >= 3) {
        std::istringstream rs(line);
        std::string skip, expr;
        rs >> skip >> skip;
        std::getline(rs, expr);
        expr = expr.substr(expr.find_first_not_of(" \t"));
        expr = expr.substr(0, expr.find_last_not_of(" \t\r") + 1);
        QuasiFillingSurface q;
        if (expr.find('(') == std::string::npos) {
          std::filesystem::path p(expr);
          if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
          q = read_qfs_file(p.string());
        } else {
          q = parse_qfs(expr, base_dir);
        }
        apply_qfs(ledger, q, w[1]);
      } else if (cmd == "assert" && w.size() == 5) {
        if (w[2] != "sc" && w[2] != "c") fail("expected sc or c");
        Relation rel = w[3] == "lo" ? Relation::kAtLeast : w[3] == "hi" ? Relation::kAtMost : Relation::kEqual;
        if (w[3] != "lo" && w[3] != "hi" && w[3] != "eq") fail("expected lo, hi or eq");
        apply_assertion(ledger, w[1], w[2] == "sc", rel, to_int(w[4]));
      } else if (cmd == "sum" && w.size() == 6 && w[2] == "=" && (w[4] == "#" || w[4] == "#d")) {
        apply_subadditivity(ledger, w[3], w[5], w[4] == "#d", w[1]);
      } else if (cmd == "matveev" && w.size() == 2) {
        apply_matveev_relations(ledger, w[1]);
      } else {
        fail("cannot parse '" + line.substr(first) + "'");
      }
    } catch (const ContradictionError& e) {
      throw ContradictionError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      fail(what);
    } catch (const std::runtime_error& e) {
      fail(e.what());
    }
  }
  return ledger;
}

std::string render_ledger(const BoundLedger& ledger) {
  std::ostringstream os;
  for (const auto& [name, m] : ledger.entries()) {
    auto show = [](const std::optional<BoundEntry>& e, const char* none) {
      return e ? std::to_string(e->value) : std::string(none);
    };
    os << name << ": sc in [" << show(m.sc_lower, "0") << ", " << show(m.sc_upper, "inf") << "]  c in ["
       << show(m.c_lower, "0") << ", " << show(m.c_upper, "inf") << "]"
       << (m.hypotheses ? "  (hyp)" : "") << '\n';
    for (Quantity q : {Quantity::kScLower, Quantity::kScUpper, Quantity::kCLower, Quantity::kCUpper})
      if (const auto& e = m.get(q)) os << "  " << e->chain << '\n';
  }
  return os.str();
}

}  // namespace dehn
