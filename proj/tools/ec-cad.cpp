// Command-line front end: `ec-cad build` and `ec-cad bounds`.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "eccad/eccad.hpp"

using namespace eccad;

namespace {

enum Exit { Ok = 0, Usage = 1, NotWellOriented = 2, NonPrimitive = 3, Parse = 4, Resource = 5 };

struct BuildOptions {
  std::string file;
  std::string mode = "multi_ec";
  std::string source = "propagate";
  std::string designation = "auto";
  bool no_restriction = false;
  bool list_candidates = false;
  std::string dump, dump_projection;
  bool stats = false;
  bool strict = false;
  double max_seconds = 0;
  std::size_t max_cells = 0;
  std::size_t cap = 256;
};

struct BoundsOptions {
  int n = 0, m = 0, d = 0, l = 0;
  std::string flavor;
  bool table = false;
};

std::string join_counts(const std::vector<std::size_t>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "/" : "") + std::to_string(cs[i]);
  return s;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << "\n";
}

void print_candidates(const EcPreparation& prep, const std::vector<std::string>& names) {
  std::cout << "candidates (" << prep.pool.items().size() << "):\n";
  for (const auto& c : prep.pool.items()) {
    std::cout << "  " << c.id << "  [" << provenance_text(c.prov) << (c.primitive ? "" : ", non-primitive") << "]  "
              << to_string(c.poly, names);
    if (c.parent_a && c.parent_b) {
      auto* a = prep.pool.find(*c.parent_a);
      auto* b = prep.pool.find(*c.parent_b);
      if (a && b) std::cout << "  = res(" << a->id << ", " << b->id << ")";
    }
    std::cout << "\n";
  }
}

void print_report(const CadResult& R, bool stats) {
  for (const auto& w : R.warnings) std::cerr << "warning: " << w << "\n";
  int n = static_cast<int>(R.names.size());
  std::cout << "mode: " << mode_text(R.mode) << "\n";
  std::cout << "designation:";
  if (R.designation.count() == 0) std::cout << " none";
  for (int k = n - 1; k >= 0; --k) {
    if (!R.designation.has(k)) continue;
    std::cout << " " << R.names[k] << "=" << (R.designation.ids[k].empty() ? "-" : R.designation.ids[k]) << " ("
              << provenance_text(R.designation.prov[k]) << ": " << to_string(*R.designation.E[k], R.names) << ")";
  }
  std::cout << "\noperators:";
  for (int k = n - 1; k >= 1; --k) std::cout << " " << R.names[k] << ":" << op_text(R.layers.op[k]);
  std::cout << "\ncells: " << join_counts(R.level_counts()) << ", solutions: " << solution_cells(R.cad).size() << "\n";
  std::cout << "total cells: " << R.cad.size() << "\n";
  if (stats) {
    std::cout << "cells per level:";
    for (int k = 0; k < n; ++k)
      std::cout << " " << R.names[k] << "=" << R.cad.levels[k].size() << (R.cad.restricted[k] ? "(restricted)" : "");
    std::cout << "\ntime: preparation " << R.times.prep << "s, projection " << R.times.projection << "s, lifting "
              << R.times.lifting << "s, truth " << R.times.truth << "s\n";
  }
}

RunConfig make_config(const BuildOptions& o) {
  RunConfig cfg;
  static const std::map<std::string, Mode> modes{
      {"sign_invariant", Mode::SignInvariant}, {"single_ec", Mode::SingleEc}, {"multi_ec", Mode::MultiEc}};
  static const std::map<std::string, EcSource> sources{
      {"explicit", EcSource::Explicit}, {"propagate", EcSource::Propagate}, {"groebner", EcSource::Groebner}};
  cfg.mode = modes.at(o.mode);
  cfg.source = sources.at(o.source);
  if (o.designation != "auto" && o.designation != "exhaustive") cfg.designation_ids = split_ids(o.designation);
  cfg.cell_restriction = !o.no_restriction;
  cfg.strict = o.strict;
  cfg.budget.max_seconds = o.max_seconds;
  cfg.budget.max_cells = o.max_cells;
  return cfg;
}

int run_exhaustive(const Problem& p, const RunConfig& base, std::size_t cap) {
  int n = static_cast<int>(p.vars.size());
  auto prep = prepare_ecs(p.formula, n, base.source, p.vars);
  std::size_t space = designation_space(prep.pool);
  auto ds = enumerate_designations(prep.pool, cap);
  std::cout << "designations: " << ds.size() << " of " << space << "\n";
  std::map<std::size_t, int> finals;
  for (const auto& d : ds) {
    RunConfig cfg = base;
    cfg.designation = d;
    std::cout << d.label() << ": " << std::flush;
    try {
      auto R = build_cad(p.formula, p.vars, cfg);
      std::cout << join_counts(R.level_counts()) << "\n";
      ++finals[R.cad.size()];
    } catch (const WellOrientedFailure& e) {
      std::cout << "failed: " << e.what() << "\n";
    } catch (const ResourceLimit& e) {
      std::cout << "stopped: " << e.what() << "\n";
    }
  }
  std::cout << "final counts:";
  for (auto [c, k] : finals) std::cout << " " << c << "x" << k;
  std::cout << "\ndistinct final counts: {";
  bool first = true;
  for (auto [c, k] : finals) {
    std::cout << (first ? "" : ", ") << c;
    first = false;
  }
  std::cout << "}\n";
  return Ok;
}

int run_build(const BuildOptions& o) {
  std::ifstream in(o.file);
  if (!in) {
    std::cerr << "error: cannot read " << o.file << "\n";
    return Usage;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  Problem p = parse_problem(ss.str());
  RunConfig cfg = make_config(o);
  if (o.list_candidates) {
    auto prep = prepare_ecs(p.formula, static_cast<int>(p.vars.size()), cfg.source, p.vars);
    print_candidates(prep, p.vars);
    return Ok;
  }
  if (o.designation == "exhaustive") return run_exhaustive(p, cfg, o.cap);
  auto R = build_cad(p.formula, p.vars, cfg);
  print_report(R, o.stats);
  if (!o.dump.empty()) write_json(o.dump, cad_json(R));
  if (!o.dump_projection.empty()) write_json(o.dump_projection, projection_json(R));
  return Ok;
}

int run_bounds(const BoundsOptions& o) {
  Flavor flavor = o.l == 0 ? Flavor::P_only : Flavor::EC_then_P;
  if (!o.flavor.empty()) {
    static const std::map<std::string, Flavor> fl{
        {"P_only", Flavor::P_only}, {"EC_then_P", Flavor::EC_then_P}, {"GB_EC_then_P", Flavor::GB_EC_then_P}};
    flavor = fl.at(o.flavor);
  }
  detail::check_params(o.n, o.m, o.d, o.l, flavor != Flavor::P_only);
  if (o.table) {
    auto rows = growth_table(o.n, o.m, o.d, o.l, flavor);
    std::cout << "table " << flavor_text(flavor) << " (variables, number, degree"
              << (flavor == Flavor::GB_EC_then_P ? ", EC degree" : "") << "):\n";
    for (const auto& r : rows) {
      std::cout << "  " << r.level << "  " << r.count.get_str() << "  " << r.degree.get_str();
      if (flavor == Flavor::GB_EC_then_P) std::cout << "  " << r.ec_degree.get_str();
      std::cout << "\n";
    }
    if (flavor == Flavor::GB_EC_then_P)
      std::cout << "note: EC degree after s constrained projections is (s+1)^(s+1) d^(s+1)\n";
  }
  std::cout << "eq8: " << dominant_term(o.n, o.m, o.d, 0, DominantTerm::Eq8).get_str() << "\n";
  if (o.l >= 1) {
    std::cout << "eq10: " << dominant_term(o.n, o.m, o.d, o.l, DominantTerm::Eq10).get_str() << "\n";
    std::cout << "eq11: " << dominant_term(o.n, o.m, o.d, o.l, DominantTerm::Eq11).get_str() << "\n";
    if (o.l < o.n) std::cout << "gb degree exponent: " << gb_degree_exponent(o.n, o.l).get_str() << "\n";
  }
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truth-invariant cylindrical algebraic decomposition with multiple equational constraints"};
  app.require_subcommand(1);

  BuildOptions bo;
  auto* build = app.add_subcommand("build", "Build a CAD for a .qff problem");
  build->add_option("file", bo.file, "Problem file")->required();
  build->add_option("--mode", bo.mode, "sign_invariant | single_ec | multi_ec")
      ->check(CLI::IsMember({"sign_invariant", "single_ec", "multi_ec"}));
  build->add_option("--ec-source", bo.source, "explicit | propagate | groebner")
      ->check(CLI::IsMember({"explicit", "propagate", "groebner"}));
  build->add_option("--designation", bo.designation, "auto | exhaustive | comma-separated candidate ids");
  build->add_flag("--no-cell-restriction", bo.no_restriction, "Lift over every cell, not only sections");
  build->add_flag("--list-candidates", bo.list_candidates, "Print the constraint candidates and exit");
  build->add_option("--dump", bo.dump, "Write the CAD as JSON");
  build->add_option("--dump-projection", bo.dump_projection, "Write the projection layers as JSON");
  build->add_flag("--stats", bo.stats, "Print per-level counts and phase timings");
  build->add_flag("--strict", bo.strict, "Fail on a non-primitive constraint instead of skipping it");
  build->add_option("--max-seconds", bo.max_seconds, "Stop lifting after this many seconds (0: no limit)");
  build->add_option("--max-cells", bo.max_cells, "Stop when a level exceeds this many cells (0: no limit)");
  build->add_option("--cap", bo.cap, "Most designations tried by --designation exhaustive");

  BoundsOptions bd;
  auto* bounds = app.add_subcommand("bounds", "Growth tables and dominant terms of the cell-count bounds");
  bounds->add_option("--n", bd.n, "Number of variables")->required();
  bounds->add_option("--m", bd.m, "Number of polynomial groups")->required();
  bounds->add_option("--d", bd.d, "Degree bound")->required();
  bounds->add_option("--l", bd.l, "Number of equational constraints");
  bounds->add_option("--flavor", bd.flavor, "P_only | EC_then_P | GB_EC_then_P")
      ->check(CLI::IsMember({"P_only", "EC_then_P", "GB_EC_then_P"}));
  bounds->add_flag("--table", bd.table, "Print the growth table rows");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return run_build(bo);
    return run_bounds(bd);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Parse;
  } catch (const WellOrientedFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return NotWellOriented;
  } catch (const NonPrimitiveEC& e) {
    std::cerr << "error: " << e.what() << "\n";
    return NonPrimitive;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << " (" << e.cells_so_far() << " top-level cells at least)\n";
    return Resource;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
}
