#include "brlab/suites.hpp"

#include <random>
#include <stdexcept>

#include "brlab/br_checks.hpp"
#include "brlab/dilogarithm.hpp"
#include "brlab/root_systems.hpp"
#include "brlab/tropical_lab.hpp"

namespace brlab {

Grid named_grid(const std::string& name) {
  Grid g;
  if (name == "default") {
    g.tropical = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {2, 4}};
    g.tsystem = {{2, 2}, {3, 2}};
    g.ysystem = {{2, 2}, {2, 3}, {3, 2}};
    g.fpoly = {{2, 2}, {2, 3}};
    for (int r = 2; r <= 4; ++r)
      for (int l = 2; l <= 4; ++l) g.dilog_constant.push_back({r, l});
    g.dilog_functional = {{2, 2}, {2, 3}};
    g.roots = {2, 3, 4, 5, 6};
    g.pairs = {{"A2", "A1"}, {"A3", "A2"}, {"D4", "A1"}};
  } else if (name == "smoke") {
    const BrConfig c{2, 2};
    g.tropical = g.tsystem = g.ysystem = g.fpoly = g.dilog_constant = g.dilog_functional = {c};
    g.roots = {2, 3};
    g.pairs = {{"A2", "A1"}};
  } else {
    throw std::invalid_argument("unknown grid: " + name);
  }
  return g;
}

void restrict_to(Grid& g, const BrConfig& cfg) {
  cfg.validate();
  g.tropical = g.tsystem = g.ysystem = g.fpoly = g.dilog_constant = g.dilog_functional = {cfg};
  g.roots = {cfg.r};
}

std::pair<std::string, std::string> parse_pair_name(const std::string& s) {
  const auto c = s.find(':');
  if (c == std::string::npos) throw std::invalid_argument("pair must look like X:X', got " + s);
  auto p = std::make_pair(s.substr(0, c), s.substr(c + 1));
  DynkinDiagram::parse(p.first);
  DynkinDiagram::parse(p.second);
  return p;
}

namespace {

Report suite_tropical(const Grid& g) {
  Report rep;
  for (const auto& c : g.tropical) rep.merge(check_tropical(c));
  return rep;
}

Report suite_tsystem(const Grid& g) {
  Report rep;
  for (const auto& c : g.tsystem) rep.merge(check_T_periodicity(c));
  return rep;
}

Report suite_ysystem(const Grid& g) {
  Report rep;
  for (const auto& c : g.ysystem) {
    const int n = build_quiver_B(c).size();
    for (int k = 0; k < g.samples; ++k) {
      std::mt19937_64 rng(g.seed + k);
      rep.merge(check_Y_periodicity(c, random_positive_point(n, rng)));
    }
  }
  for (const auto& c : g.fpoly) rep.merge(check_f_identities(c, g.points, g.seed));
  return rep;
}

Report suite_roots(const Grid& g) {
  Report rep;
  for (int r : g.roots) rep.merge(check_roots(r));
  return rep;
}

Report suite_dilog(const Grid& g) {
  Report rep;
  for (const auto& c : g.dilog_constant) rep.merge(check_constant_DI(c, g.dilog_tol));
  for (const auto& c : g.dilog_functional) rep.merge(check_functional_DI(c, g.samples, g.seed, g.functional_tol));
  return rep;
}

Report suite_pairs(const Grid& g) {
  Report rep;
  for (const auto& [x, xp] : g.pairs) {
    const auto ps = build_pair(DynkinDiagram::parse(x), DynkinDiagram::parse(xp));
    for (auto m : g.modes) {
      rep.merge(run_pair_systems(ps, m, g.seed));
      rep.merge(check_pair_periodicity(ps, m, g.seed));
    }
  }
  return rep;
}

}  // namespace

Report run_suite(const std::string& suite, const Grid& g) {
  if (suite == "tropical") return suite_tropical(g);
  if (suite == "tsystem") return suite_tsystem(g);
  if (suite == "ysystem") return suite_ysystem(g);
  if (suite == "roots") return suite_roots(g);
  if (suite == "dilog") return suite_dilog(g);
  if (suite == "pairs") return suite_pairs(g);
  if (suite == "all") {
    Report rep;
    for (const auto& s : suite_names())
      if (s != "all") rep.merge(run_suite(s, g));
    return rep;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace brlab
