#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brlab/br_checks.hpp"
#include "brlab/root_systems.hpp"
#include "brlab/suites.hpp"
#include "brlab/tropical_lab.hpp"

using namespace brlab;

namespace {

struct Options {
  std::string target;
  std::optional<int> rank, level;
  std::vector<std::string> br;
  std::vector<std::string> pairs;
  std::string mode = "all";
  std::optional<double> tol;
  std::uint64_t seed = kDefaultSeed;
  int samples = 5;
  std::string out;
  std::string dump_trace;
  std::string grid = "default";
  std::optional<double> from, to;
  bool timings = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

BrConfig parse_br(const std::string& s) {
  const auto c = s.find(':');
  if (c == std::string::npos) throw UsageError("configuration must look like r:l, got " + s);
  BrConfig cfg{std::stoi(s.substr(0, c)), std::stoi(s.substr(c + 1))};
  cfg.validate();
  return cfg;
}

BrConfig single_config(const Options& o) {
  if (!o.rank) throw UsageError("--rank is required");
  BrConfig cfg{*o.rank, o.level.value_or(2)};
  cfg.validate();
  return cfg;
}

int half_units(double u, const char* what) {
  const double u2 = 2 * u;
  if (std::abs(u2 - std::round(u2)) > 1e-9) throw UsageError(std::string(what) + " must be a multiple of 1/2");
  return static_cast<int>(std::lround(u2));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

Grid make_grid(const Options& o) {
  Grid g = named_grid(o.grid);
  if (!o.br.empty()) {
    std::vector<BrConfig> cs;
    for (const auto& s : o.br) cs.push_back(parse_br(s));
    g.tropical = g.tsystem = g.ysystem = g.fpoly = g.dilog_constant = g.dilog_functional = cs;
    g.roots.clear();
    for (const auto& c : cs) g.roots.push_back(c.r);
  }
  if (o.rank) restrict_to(g, BrConfig{*o.rank, o.level.value_or(2)});
  if (!o.pairs.empty()) {
    g.pairs.clear();
    for (const auto& p : o.pairs) g.pairs.push_back(parse_pair_name(p));
  }
  if (o.mode != "all") g.modes = {parse_pair_mode(o.mode)};
  if (o.tol) g.dilog_tol = g.functional_tol = *o.tol;
  g.seed = o.seed;
  g.samples = o.samples;
  return g;
}

int cmd_verify(const Options& o) {
  const Grid g = make_grid(o);
  const Report rep = run_suite(o.target, g);
  if (!o.dump_trace.empty()) {
    if (g.tropical.empty()) throw UsageError("--dump-trace needs a B_r configuration");
    const auto q = build_quiver_B(g.tropical.front());
    const auto& c = g.tropical.front();
    write_text(o.dump_trace, trace_csv(q, run_tropical(q, -2 * c.hv(), 4 * c.period())));
  }
  write_text(o.out, rep.to_json(o.timings).dump(2) + "\n");
  const auto fails = rep.failures();
  std::cerr << (rep.pass() ? "PASS " : "FAIL ") << rep.records().size() - fails.size() << "/" << rep.records().size()
            << " checks\n";
  for (const auto* f : fails) std::cerr << "  failed: " << f->name << " " << f->params.dump() << "\n";
  return rep.pass() ? 0 : 1;
}

std::string fpoly_list(const BrConfig& cfg) {
  const auto q = build_quiver_B(cfg);
  std::vector<std::string> names;
  for (const auto& v : q.vertices()) names.push_back("y" + std::to_string(v.i) + "_" + std::to_string(v.ip));
  const auto fd = compute_F(q, 0, 4 * cfg.period());
  std::ostringstream os;
  for (const auto& [s, f] : fd.F) os << to_string(s) << "\t" << f.to_string(names) << "\n";
  return os.str();
}

int cmd_dump(const Options& o) {
  if (o.target == "trace") {
    const auto cfg = single_config(o);
    const int from = half_units(o.from.value_or(-cfg.hv()), "--from");
    const int to = half_units(o.to.value_or(2 * cfg.period()), "--to");
    if (from > to) throw UsageError("--from must not exceed --to");
    const auto q = build_quiver_B(cfg);
    write_text(o.out, trace_csv(q, run_tropical(q, from, to)));
  } else if (o.target == "orbits") {
    if (!o.rank || *o.rank < 2) throw UsageError("--rank >= 2 is required");
    write_text(o.out, orbit_table_text(*o.rank));
  } else if (o.target == "fpolys") {
    write_text(o.out, fpoly_list(single_config(o)));
  } else {
    throw UsageError("unknown dump target: " + o.target);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodicity and dilogarithm checks for B_r T- and Y-systems and simply laced pairs"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML-like config file; command-line flags override it");
  Options o;

  auto add_common = [&](CLI::App* sc) {
    sc->add_option("--rank", o.rank, "r for B_r (or A_{2r-1} for roots)");
    sc->add_option("--level", o.level, "level l (default 2)");
    sc->add_option("--br", o.br, "B_r configurations r:l (repeatable)");
    sc->add_option("--pair", o.pairs, "simply laced pair X:X' (repeatable)");
    sc->add_option("--mode", o.mode, "pair mode")->check(CLI::IsMember({"all", "tropical", "laurent", "rational"}));
    sc->add_option("--tol", o.tol, "dilogarithm tolerance")->check(CLI::PositiveNumber);
    sc->add_option("--seed", o.seed, "RNG seed");
    sc->add_option("--samples", o.samples, "random initial points per config")->check(CLI::Range(1, 1000));
    sc->add_option("--out", o.out, "output path (default stdout)");
    sc->add_option("--grid", o.grid, "named grid")->check(CLI::IsMember({"default", "smoke"}));
    sc->add_flag("--timings", o.timings, "include wall times in the report");
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite and emit a JSON report");
  verify->add_option("suite", o.target, "suite")->required()->check(CLI::IsMember(suite_names()));
  add_common(verify);
  verify->add_option("--dump-trace", o.dump_trace, "also write the tropical trace CSV of the first B_r config");

  auto* dump = app.add_subcommand("dump", "write a trace, orbit table or F-polynomial list");
  dump->add_option("target", o.target, "trace | orbits | fpolys")
      ->required()
      ->check(CLI::IsMember({"trace", "orbits", "fpolys"}));
  add_common(dump);
  dump->add_option("--from", o.from, "first u (multiple of 1/2)");
  dump->add_option("--to", o.to, "last u (multiple of 1/2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return verify->parsed() ? cmd_verify(o) : cmd_dump(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
