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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dehn/bounds.hpp"
#include "dehn/census.hpp"
#include "dehn/conversions.hpp"
#include "dehn/dual_surface.hpp"
#include "dehn/gluing_io.hpp"
#include "dehn/quasi_filling.hpp"
#include "dehn/signature.hpp"
#include "dehn/surface2d.hpp"
#include "dehn/validation.hpp"

namespace dehn::cli {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path if it names an existing file, the argument itself otherwise.
std::string file_or_text(const std::string& arg, std::string* base_dir) {
  if (std::filesystem::is_regular_file(arg)) {
    if (base_dir) *base_dir = std::filesystem::path(arg).parent_path().string();
    return read_text(arg);
  }
  if (base_dir) *base_dir = ".";
  return arg;
}

Json links_json(const std::vector<VertexLink>& links) {
  Json out = Json::array();
  for (const auto& l : links)
    out.push_back({{"vertex", l.vertex_class}, {"link", surface_name(l.link)},
                   {"kind", l.ideal() ? "ideal" : "finite"}});
  return out;
}

Json violations_json(const std::vector<Violation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs)
    out.push_back({{"kind", to_string(v.kind)}, {"cell", v.cell}, {"label", v.label}, {"message", v.message}});
  return out;
}

template <typename X>
std::string signature_or_empty(const X& x) {
  try {
    return isomorphism_signature(x);
  } catch (const std::exception&) {
    return "";
  }
}

template <typename X>
void complex_summary(const X& x, const ValidationReport& r, Json& report) {
  const auto& o = *r.orbits;
  report["V"] = o.vertices;
  report["E"] = o.edges;
  report["F"] = o.faces;
  report["chi"] = o.euler_characteristic();
  auto links = vertex_links(x);
  report["links"] = links_json(links);
  report["euler_identity"] = euler_identity_check(o, links);
  report["signature"] = isomorphism_signature(x);
}

Json dual_json(const IdealCubulation& c, Json& report) {
  auto d = dual_surface_stats(c);
  report["triple_points"] = d.triple_points;
  report["singular_edges"] = d.singular_edges;
  report["singular_edges_is_3k"] = d.singular_edges == 3 * static_cast<int>(c.size());
  report["regions"] = d.regions;
  report["chi_singular_set"] = d.chi_singular_set();
  report["chi_abstract"] = d.chi_abstract();
  Json sheets = Json::array();
  for (const auto& s : d.sheets) sheets.push_back(surface_name(s));
  report["sheets"] = sheets;
  report["sheet_chi_sum"] = d.sheet_chi_sum();
  Json comp = Json::array();
  for (const auto& k : d.complement)
    comp.push_back({{"vertex", k.vertex_class}, {"boundary", surface_name(k.boundary)}, {"ball", k.ball()}});
  report["complement"] = comp;
  report["complement_balls"] = d.complement_balls();
  return report;
}

std::string bits_string(const OrientationBits& bits) {
  std::string s;
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

// A gluing file, or an isomorphism signature such as "t2:..." / "c1:...".
Complex load_complex(const std::string& arg) {
  if (!std::filesystem::exists(arg) && arg.size() > 2 && arg.find(':') != std::string::npos) {
    if (arg[0] == 'c') return cubulation_from_signature(arg);
    if (arg[0] == 't') return triangulation_from_signature(arg);
  }
  return read_complex_file(arg);
}

}  // namespace

int run_validate(const std::string& path, bool table, Json& report) {
  auto x = load_complex(path);
  report["file"] = path;
  return std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        report["type"] = std::is_same_v<T, IdealCubulation> ? "cubulation" : "triangulation";
        report["cells"] = c.size();
        auto r = validate(c);
        report["valid"] = r.ok();
        if (!r.ok()) {
          report["violations"] = violations_json(r.violations);
          return 1;
        }
        complex_summary(c, r, report);
        if (table) report["table"] = to_text(c);
        return 0;
      },
      x);
}

int run_stats(const std::string& path, Json& report) {
  auto x = load_complex(path);
  report["file"] = path;
  IdealCubulation c;
  if (auto* t = std::get_if<IdealTriangulation>(&x)) {
    auto r = validate(*t);
    if (!r.ok()) {
      report["valid"] = false;
      report["violations"] = violations_json(r.violations);
      return 1;
    }
    c = triangulation_to_cubulation(*t);
    report["converted_from"] = "triangulation n=" + std::to_string(t->size());
  } else {
    c = std::get<IdealCubulation>(x);
  }
  auto r = validate(c);
  report["valid"] = r.ok();
  if (!r.ok()) {
    report["violations"] = violations_json(r.violations);
    return 1;
  }
  report["cubes"] = c.size();
  complex_summary(c, r, report);
  dual_json(c, report);
  return 0;
}

int run_convert(const ConvertOptions& opts, Json& report) {
  auto x = load_complex(opts.input);
  report["input"] = opts.input;
  std::string table;
  if (opts.direction == "tri2cub") {
    auto* t = std::get_if<IdealTriangulation>(&x);
    if (!t) throw UsageError("tri2cub needs a triangulation file");
    auto r = validate(*t);
    if (!r.ok()) {
      report["valid"] = false;
      report["violations"] = violations_json(r.violations);
      return 1;
    }
    auto c = triangulation_to_cubulation(*t);
    auto rc = validate(c);
    report["tetrahedra"] = t->size();
    report["cubes"] = c.size();
    report["cubes_is_4n"] = c.size() == 4 * t->size();
    report["valid"] = rc.ok();
    report["chi_before"] = r.orbits->euler_characteristic();
    report["chi_after"] = rc.ok() ? Json(rc.orbits->euler_characteristic()) : Json();
    report["euler_identity"] = euler_identity_check(c);
    table = to_text(c);
  } else if (opts.direction == "cub2tri") {
    auto* c = std::get_if<IdealCubulation>(&x);
    if (!c) throw UsageError("cub2tri needs a cubulation file");
    auto r = validate(*c);
    if (!r.ok()) {
      report["valid"] = false;
      report["violations"] = violations_json(r.violations);
      return 1;
    }
    OrientationBits bits;
    bool exhaustive = false;
    if (opts.bits == "auto") {
      OptimizeOptions o{opts.exhaustive_max, opts.seed, opts.restarts, opts.threads};
      auto choice = optimize_orientations(*c, o);
      bits = choice.bits;
      exhaustive = choice.exhaustive;
    } else {
      if (opts.bits.size() != c->size() || opts.bits.find_first_not_of("01") != std::string::npos)
        throw UsageError("--bits needs 'auto' or one 0/1 per cube (" + std::to_string(c->size()) + ")");
      for (char ch : opts.bits) bits.push_back(ch == '1');
    }
    auto split = cubulation_to_triangulation(*c, bits);
    auto rt = validate(split.triangulation);
    int k = static_cast<int>(c->size());
    report["cubes"] = k;
    report["bits"] = bits_string(bits);
    report["search"] = opts.bits != "auto" ? "given" : exhaustive ? "exhaustive" : "local";
    report["insertions"] = split.insertions;
    report["tetrahedra"] = split.triangulation.size();
    report["tetrahedra_is_5k_plus_m"] = static_cast<int>(split.triangulation.size()) == 5 * k + split.insertions;
    report["insertions_at_most_3k"] = split.insertions <= 3 * k;
    report["valid"] = rt.ok();
    report["chi_before"] = r.orbits->euler_characteristic();
    report["chi_after"] = rt.ok() ? Json(rt.orbits->euler_characteristic()) : Json();
    report["euler_identity"] = euler_identity_check(split.triangulation);
    table = to_text(split.triangulation);
  } else {
    throw UsageError("convert direction must be tri2cub or cub2tri");
  }
  if (!opts.out.empty()) {
    std::ofstream out(opts.out);
    if (!out) throw std::runtime_error("cannot write " + opts.out);
    out << table;
    report["out"] = opts.out;
  } else {
    report["table"] = table;
  }
  return report["valid"].get<bool>() ? 0 : 1;
}

int run_qfs(const QfsOptions& opts, Json& report) {
  std::string base;
  auto text = file_or_text(opts.input, &base);
  auto q = parse_qfs(text, base.empty() ? "." : base);
  for (int r : opts.bubbles) q = bubble_move(q, r);
  for (int i = 0; i < opts.inverse; ++i) q = inverse_bubble_move(q);
  auto s = stats(q);
  report["expression"] = to_string(q);
  report["triple_points"] = s.triple_points;
  auto tracked = [](const std::optional<int>& v) { return v ? Json(*v) : Json("untracked"); };
  report["complement_balls"] = tracked(s.complement_balls);
  report["chi_abstract"] = tracked(s.chi_abstract);
  report["regions"] = tracked(s.regions);
  report["filling"] = s.filling;
  report["manifold"] = s.manifold;
  return 0;
}

int run_bounds(const BoundsOptions& opts, Json& report) {
  BoundLedger ledger;
  if (!opts.script.empty()) {
    ledger = run_bounds_script(read_text(opts.script),
                               std::filesystem::path(opts.script).parent_path().string());
  }
  for (const auto& name : opts.catalog)
    if (!apply_catalog(ledger, name)) throw UsageError(name + " is not in the catalog");
  if (opts.tri_size) {
    ledger.declare(opts.name, false);
    apply_triangulation_bound(ledger, opts.name, *opts.tri_size);
  }
  if (!opts.qfs.empty()) {
    std::string base;
    auto text = file_or_text(opts.qfs, &base);
    apply_qfs(ledger, parse_qfs(text, base.empty() ? "." : base));
  }
  if (!opts.script.empty()) report["script"] = opts.script;
  Json entries = Json::array();
  Json summary = Json::array();
  for (const auto& [name, m] : ledger.entries()) {
    auto num = [](const std::optional<BoundEntry>& e) { return e ? Json(e->value) : Json(); };
    Json chains = Json::array();
    for (Quantity q : {Quantity::kScLower, Quantity::kScUpper, Quantity::kCLower, Quantity::kCUpper})
      if (const auto& e = m.get(q)) chains.push_back(e->chain);
    entries.push_back({{"manifold", name},
                       {"sc_lo", num(m.sc_lower)},
                       {"sc_hi", num(m.sc_upper)},
                       {"c_lo", num(m.c_lower)},
                       {"c_hi", num(m.c_upper)},
                       {"hypotheses", m.hypotheses},
                       {"provenance", chains}});
    for (auto [what, lo, hi] : {std::tuple{"sc", &m.sc_lower, &m.sc_upper}, std::tuple{"c", &m.c_lower, &m.c_upper}}) {
      std::string tag = std::string(what) + "(" + name + ")";
      if (*lo && *hi && (*lo)->value == (*hi)->value) {
        summary.push_back(tag + " = " + std::to_string((*hi)->value));
        continue;
      }
      if (*lo && (*lo)->value > 0) summary.push_back(tag + " >= " + std::to_string((*lo)->value));
      if (*hi) summary.push_back(tag + " <= " + std::to_string((*hi)->value));
    }
  }
  report["bounds"] = summary;
  report["ledger"] = entries;
  return 0;
}

int run_lc2d(const Lc2dOptions& opts, Json& report) {
  const auto& a = opts.action;
  if (a == "lc" || a == "search") {
    auto s = parse_surface_name(opts.input);
    if (!s) throw UsageError("unknown surface '" + opts.input + "' (try S2, RP2, T2, K, B2, A, M, S_g2, N_h3_b1)");
    report["surface"] = surface_name(*s);
    report["lc"] = loop_complexity(*s);
    if (a == "search") {
      auto r = brute_force_lc(*s, opts.max_crossings);
      report["max_crossings"] = opts.max_crossings;
      report["classes"] = r.classes;
      report["brute_force"] = r.crossings ? Json(*r.crossings) : Json("none found");
      report["agrees"] = r.crossings && *r.crossings == report["lc"].get<int>();
      if (r.witness) report["witness"] = to_text(*r.witness);
    }
    return 0;
  }
  if (a == "dual" && opts.from_squares) {
    auto q = parse_square_cubulation(file_or_text(opts.input, nullptr));
    auto problems = cubulation_problems(q);
    report["squares"] = to_text(q);
    report["valid"] = problems.empty();
    if (!problems.empty()) {
      report["problems"] = problems;
      return 1;
    }
    report["surface"] = surface_name(square_surface(q));
    report["diagram"] = to_text(squares_to_loop(q));
    return 0;
  }
  if (a != "thicken" && a != "dual") throw UsageError("lc2d action must be thicken, lc, search or dual");
  auto d = parse_loop_diagram(file_or_text(opts.input, nullptr));
  report["diagram"] = to_text(d);
  auto problems = diagram_problems(d);
  report["valid"] = problems.empty();
  if (!problems.empty()) {
    report["problems"] = problems;
    return 1;
  }
  report["crossings"] = d.crossings;
  report["strands"] = strand_count(d);
  report["ribbon"] = d.has_ribbon();
  if (a == "thicken") {
    auto t = thicken(d);
    report["edges"] = d.edges.size() + d.free_loops.size();
    report["surface"] = surface_name(t);
    report["orientable"] = t.orientable;
    report["chi"] = t.chi;
    report["boundary"] = t.boundary;
    report["filling"] = is_filling(d);
    report["canonical"] = canonical_code(d);
  } else {
    auto q = loop_to_squares(d);
    report["squares"] = to_text(q);
    report["surface"] = surface_name(square_surface(q));
  }
  return 0;
}

int run_census(const CensusCliOptions& opts, Json& report) {
  if ((opts.cubes > 0) == (opts.tetrahedra > 0)) throw UsageError("census needs exactly one of --cubes, --tetrahedra");
  std::vector<std::string> sigs;
  if (opts.cubes > 0) {
    CensusOptions o{opts.cubes, opts.seed, opts.threads};
    auto filter = parse_census_filter(opts.filter);
    report["cubes"] = opts.cubes;
    report["filter"] = opts.filter.empty() ? "none" : opts.filter;
    auto entries = enumerate_cubulations(o, filter);
    report["classes"] = entries.size();
    Json rows = Json::array();
    for (const auto& r : census_report(entries))
      rows.push_back({{"links", r.link_profile}, {"sheets", r.sheet_profile}, {"count", r.count}});
    report["table"] = rows;
    for (const auto& e : entries) sigs.push_back(e.signature);
  } else {
    if (!opts.filter.empty()) throw UsageError("--filter applies to cubulation censuses only");
    sigs = enumerate_triangulation_signatures(opts.tetrahedra);
    report["tetrahedra"] = opts.tetrahedra;
    report["classes"] = sigs.size();
  }
  if (opts.list) report["signatures"] = sigs;
  if (!opts.out.empty()) {
    std::filesystem::create_directories(opts.out);
    auto path = std::filesystem::path(opts.out) /
                (opts.cubes > 0 ? "cubulations_k" + std::to_string(opts.cubes) + ".txt"
                                : "triangulations_n" + std::to_string(opts.tetrahedra) + ".txt");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const auto& s : sigs) out << s << '\n';
    report["out"] = path.string();
  }
  return 0;
}

}  // namespace dehn::cli
