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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "dehn/bounds.hpp"
#include "dehn/census.hpp"
#include "dehn/gluing_io.hpp"

namespace {

using dehn::cli::Json;

int run(int argc, char** argv) {
  CLI::App app{"dehn: ideal triangulations, ideal cubulations and Dehn surfaces"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");
  app.fallthrough();

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check a gluing table and report V, E, F and vertex links");
  validate->add_option("file", path, "Gluing file (.cub or .tri) or signature")->required();
  bool table = false;
  validate->add_flag("--table", table, "Include the gluing table");

  auto* stats = app.add_subcommand("stats", "Dual Dehn surface of a cubulation (triangulations are converted)");
  stats->add_option("file", path, "Gluing file or signature")->required();

  dehn::cli::ConvertOptions conv;
  auto* convert = app.add_subcommand("convert", "Convert between triangulations and cubulations");
  convert->add_option("direction", conv.direction, "tri2cub or cub2tri")
      ->required()
      ->check(CLI::IsMember({"tri2cub", "cub2tri"}));
  convert->add_option("file", conv.input, "Input gluing file or signature")->required();
  convert->add_option("--bits", conv.bits, "Diagonal bits: auto, or one 0/1 per cube");
  convert->add_option("--exhaustive-max", conv.exhaustive_max, "Largest k searched exhaustively");
  convert->add_option("--seed", conv.seed, "Seed for heuristic restarts");
  convert->add_option("--restarts", conv.restarts, "Random restarts of the heuristic");
  convert->add_option("--threads", conv.threads, "Threads for the exhaustive search")->check(CLI::PositiveNumber);
  convert->add_option("--out", conv.out, "Write the converted table here instead of printing it");

  dehn::cli::QfsOptions qfs;
  auto* q = app.add_subcommand("qfs", "Evaluate a quasi-filling surface expression");
  q->add_option("expr", qfs.input, "Expression file (.qfs) or inline expression")->required();
  q->add_option("--bubble", qfs.bubbles, "Apply a bubble move on this region (repeatable)");
  q->add_flag("--inverse", qfs.inverse, "Undo the outermost bubble move (repeatable)");

  dehn::cli::BoundsOptions bnd;
  auto* bounds = app.add_subcommand("bounds", "Surface-complexity and Matveev complexity bounds with provenance");
  bounds->add_option("--tri-size", bnd.tri_size, "M has an ideal triangulation with this many tetrahedra");
  bounds->add_option("--name", bnd.name, "Manifold name used with --tri-size");
  bounds->add_option("--qfs", bnd.qfs, "Quasi-filling surface (file or expression)");
  bounds->add_option("--script", bnd.script, "Bounds script");
  bounds->add_option("--catalog", bnd.catalog, "Add catalog values for these manifolds (repeatable)");

  dehn::cli::Lc2dOptions lc;
  auto* lc2d = app.add_subcommand("lc2d", "Dehn loops on surfaces");
  lc2d->add_option("action", lc.action, "thicken, lc, search or dual")
      ->required()
      ->check(CLI::IsMember({"thicken", "lc", "search", "dual"}));
  lc2d->add_option("input", lc.input, "Diagram file or text; surface name for lc/search")->required();
  lc2d->add_option("--max-crossings", lc.max_crossings, "Search bound")->check(CLI::Range(0, 4));
  lc2d->add_flag("--squares", lc.from_squares, "dual: input is a square complex");

  dehn::cli::CensusCliOptions cen;
  auto* census = app.add_subcommand("census", "Enumerate small cubulations or triangulations up to isomorphism");
  census->add_option("--cubes", cen.cubes, "Number of cubes")->check(CLI::Range(1, dehn::kMaxCensusCubes));
  census->add_option("--tetrahedra", cen.tetrahedra, "Number of tetrahedra")
      ->check(CLI::Range(1, dehn::kMaxCensusTetrahedra));
  census->add_option("--filter", cen.filter,
                     "Comma list: sheets-all-spheres, orientable-sheets, finite-vertices, ideal-vertex");
  census->add_option("--out", cen.out, "Directory for the signature list");
  census->add_option("--seed", cen.seed, "Shuffle the generation order");
  census->add_option("--threads", cen.threads, "Worker threads")->check(CLI::PositiveNumber);
  census->add_flag("--list", cen.list, "Include every signature in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Json report;
  int code = 0;
  try {
    if (*validate) code = dehn::cli::run_validate(path, table, report);
    if (*stats) code = dehn::cli::run_stats(path, report);
    if (*convert) code = dehn::cli::run_convert(conv, report);
    if (*q) code = dehn::cli::run_qfs(qfs, report);
    if (*bounds) code = dehn::cli::run_bounds(bnd, report);
    if (*lc2d) code = dehn::cli::run_lc2d(lc, report);
    if (*census) code = dehn::cli::run_census(cen, report);
  } catch (const dehn::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const dehn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const dehn::ContradictionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  dehn::cli::print_report(std::cout, report, json);
  return code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
