// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "brlab/br_checks.hpp"
#include "brlab/dilogarithm.hpp"
#include "brlab/random_point.hpp"
#include "brlab/root_systems.hpp"
#include "brlab/simply_laced.hpp"
#include "brlab/tropical_lab.hpp"
#include "support/properties.hpp"

using namespace brlab;

namespace {

constexpr double kConstantDITol = 1e-8;
constexpr double kSolverResidual = 1e-10;
constexpr double kFunctionalRelTol = 1e-6;
constexpr double kRogersTol = 1e-11;
constexpr long kPropertyCases = 10000;

const std::vector<BrConfig> kTropicalGrid{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {2, 4}};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const CheckRecord* find(const Report& rep, const std::string& name) {
  for (const auto& r : rep.records())
    if (r.name == name) return &r;
  return nullptr;
}

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::string tag(const BrConfig& c) { return "(" + std::to_string(c.r) + "," + std::to_string(c.l) + ")"; }

void require_report(Outcome& o, const Report& rep, const std::string& where) {
  for (const auto* f : rep.failures()) o.fail(where + ": " + f->name);
}

// L(x) = -1/2 int_0^x (log(1-t)/t + log t/(1-t)) dt
double rogers_oracle(double x) {
  if (x == 0.0) return 0.0;
  boost::math::quadrature::tanh_sinh<double> ts;
  auto f = [](double t) { return std::log1p(-t) / t + std::log(t) / (1 - t); };
  return -0.5 * ts.integrate(f, 0.0, x);
}

Outcome c1_tropical_periodicity() {
  Outcome o;
  for (const auto& c : kTropicalGrid) {
    const auto t0 = std::chrono::steady_clock::now();
    const Report rep = check_tropical_periodicity(c);
    const double dt = seconds_since(t0);
    require_report(o, rep, tag(c));
    const auto* full = find(rep, "tropical full periodicity");
    o.require(full && full->details.value("period_u", 0) == 2 * (2 * c.r - 1 + c.l), tag(c) + " period");
    o.require(dt < 1.0, tag(c) + " slower than 1 s");
  }
  return o;
}

Outcome c2_sign_counts() {
  Outcome o;
  for (const auto& c : kTropicalGrid) {
    const long r = c.r, l = c.l;
    const long np = 2 * l * (l * r + l - 1), nm = 2 * r * (2 * l * r - 2 * r + 1);
    const auto rec = check_sign_counts(c);
    const auto& d = rec.details;
    o.require(rec.pass, tag(c) + " record");
    o.require(d.value("N_plus", -1L) == np && d.value("N_minus", -1L) == nm, tag(c) + " counts");
    o.require(d.value("mixed", -1L) == 0, tag(c) + " mixed monomials");
  }
  const auto a = check_sign_counts({2, 2}).details, b = check_sign_counts({2, 3}).details;
  o.require(a["N_plus"] == 20 && a["N_minus"] == 20, "(2,2) 20/20");
  o.require(b["N_plus"] == 48 && b["N_minus"] == 36, "(2,3) 48/36");
  return o;
}

Outcome c3_sign_regions() {
  Outcome o;
  for (const auto& c : kTropicalGrid) {
    const auto q = build_quiver_B(c);
    const auto t = run_tropical(q, -2 * c.hv() - 2, 4 * c.period());
    require_report(o, check_sign_regions(q, t), tag(c));
    require_report(o, check_boundaries(q, t), tag(c));
  }
  return o;
}

Outcome c4_golden() {
  Outcome o;
  const std::string dir = BRLAB_GOLDEN_DIR;
  {
    const auto q = build_quiver_B({2, 2});
    o.require(trace_csv(q, run_tropical(q, -6, 4)) == read_file(dir + "/trop_B2_l2.csv"), "(2,2) trace");
  }
  {
    const auto q = build_quiver_B({2, 3});
    o.require(trace_csv(q, run_tropical(q, -4, 4)) == read_file(dir + "/trop_B2_l3.csv"), "(2,3) trace");
  }
  o.require(orbit_table_text(6) == read_file(dir + "/orbits_r6.txt"), "r=6 orbit table");
  return o;
}

Outcome c5_tsystem() {
  Outcome o;
  for (const BrConfig c : {BrConfig{2, 2}, BrConfig{3, 2}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Report rep = check_T_periodicity(c);
    o.require(seconds_since(t0) < 60.0, tag(c) + " slower than 60 s");
    require_report(o, rep, tag(c));
    o.require(find(rep, "T half periodicity") && find(rep, "T full periodicity"), tag(c) + " missing records");
  }
  return o;
}

Outcome c6_ysystem() {
  Outcome o;
  for (const BrConfig c : {BrConfig{2, 2}, BrConfig{2, 3}, BrConfig{3, 2}}) {
    const int n = build_quiver_B(c).size();
    for (int k = 0; k < 5; ++k) {
      std::mt19937_64 rng(kDefaultSeed + k);
      const Report rep = check_Y_periodicity(c, random_positive_point(n, rng));
      require_report(o, rep, tag(c) + " point " + std::to_string(k));
      const auto* rel = find(rep, "Y-system relations");
      o.require(rel && rel->details.value("checked", 0) > 0, tag(c) + " no relations checked");
    }
  }
  return o;
}

Outcome c7_roots() {
  Outcome o;
  for (int r = 2; r <= 6; ++r) {
    const Report rep = check_roots(r);
    require_report(o, rep, "r=" + std::to_string(r));
    o.require(find(rep, "t-vectors equal minus alpha") && find(rep, "alpha recurrences") && find(rep, "t recurrences"),
              "r=" + std::to_string(r) + " missing records");
  }
  return o;
}

Outcome c8_fpolys() {
  Outcome o;
  for (const BrConfig c : {BrConfig{2, 2}, BrConfig{2, 3}}) {
    const Report rep = check_f_identities(c, 5, kDefaultSeed);
    require_report(o, rep, tag(c));
    o.require(rep.records().size() == 5, tag(c) + " record count");
  }
  return o;
}

Outcome c9_constant_dilog() {
  Outcome o;
  for (int r = 2; r <= 4; ++r)
    for (int l = 2; l <= 4; ++l) {
      const BrConfig c{r, l};
      const auto sol = solve_constant_Y(c);
      o.require(sol.residual < kSolverResidual, tag(c) + " solver residual");
      double sum = 0;
      for (int i = 0; i < sol.f.size(); ++i) sum += rogers_L(sol.f[i]);
      const double lhs = 6 / (std::numbers::pi * std::numbers::pi) * sum;
      const double cc = static_cast<double>(r * (l * 2 * r - (2 * r - 1))) / (2 * r - 1 + l);
      o.require(std::abs(lhs - cc) < kConstantDITol, tag(c) + " identity");
      require_report(o, check_constant_DI(c, kConstantDITol), tag(c));
    }
  auto lhs_of = [](const BrConfig& c) {
    const auto sol = solve_constant_Y(c);
    double s = 0;
    for (int i = 0; i < sol.f.size(); ++i) s += rogers_L(sol.f[i]);
    return 6 / (std::numbers::pi * std::numbers::pi) * s;
  };
  o.require(std::abs(lhs_of({2, 2}) - 2) < kConstantDITol, "(2,2) -> 2");
  o.require(std::abs(lhs_of({3, 2}) - 3) < kConstantDITol, "(3,2) -> 3");
  return o;
}

Outcome c10_functional_dilog() {
  Outcome o;
  for (const BrConfig c : {BrConfig{2, 2}, BrConfig{2, 3}}) {
    const double r = c.r, l = c.l;
    const double di2 = 4 * r * (2 * r * l - 2 * r + 1), di3 = 4 * l * (r * l + l - 1);
    const Report rep = check_functional_DI(c, 5, kDefaultSeed, kFunctionalRelTol);
    require_report(o, rep, tag(c));
    const auto* rec = find(rep, "DI2 and DI3 over I_l");
    if (!rec) {
      o.fail(tag(c) + " missing DI2/DI3 record");
      continue;
    }
    const auto& d = rec->details;
    o.require(d["DI2_lhs"].size() == 5 && d["DI3_lhs"].size() == 5, tag(c) + " sample count");
    for (double v : d["DI2_lhs"]) o.require(std::abs(v - di2) <= kFunctionalRelTol * di2, tag(c) + " DI2");
    for (double v : d["DI3_lhs"]) o.require(std::abs(v - di3) <= kFunctionalRelTol * di3, tag(c) + " DI3");
  }
  o.require(4 * 2 * (2 * 2 * 2 - 2 * 2 + 1) == 40 && 4 * 2 * (2 * 2 + 2 - 1) == 40, "(2,2) targets 40/40");
  return o;
}

Outcome c11_rogers() {
  Outcome o;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  o.require(std::abs(rogers_L(1.0) - pi2 / 6) < kRogersTol, "L(1)");
  o.require(std::abs(rogers_L(0.5) - pi2 / 12) < kRogersTol, "L(1/2)");
  o.require(rogers_L(0.0) == 0.0, "L(0)");
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const double x = u(rng);
    o.require(std::abs(rogers_L(x) + rogers_L(1 - x) - pi2 / 6) < kRogersTol, "reflection at " + std::to_string(x));
  }
  for (double x : {0.05, 0.2, 0.3, 0.5, 0.7, 0.9, 0.99})
    o.require(std::abs(rogers_L(x) - rogers_oracle(x)) < kRogersTol, "quadrature at " + std::to_string(x));
  return o;
}

Outcome c12_pairs() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> pairs{{"A2", "A1"}, {"A3", "A2"}, {"D4", "A1"}};
  for (const auto& [x, xp] : pairs) {
    const auto X = DynkinDiagram::parse(x), Xp = DynkinDiagram::parse(xp);
    const auto ps = build_pair(X, Xp);
    const std::string name = x + ":" + xp;
    o.require(ps.period() == X.h + Xp.h, name + " period");
    for (auto m : {PairMode::tropical, PairMode::laurent, PairMode::rational}) {
      const auto where = name + " " + pair_mode_name(m);
      require_report(o, run_pair_systems(ps, m, kDefaultSeed), where);
      const Report per = check_pair_periodicity(ps, m, kDefaultSeed);
      require_report(o, per, where);
      const auto* half = find(per, "pair half periodicity");
      const auto* full = find(per, "pair full periodicity");
      o.require(half && half->details["shift_u"] == X.h + Xp.h, where + " half shift");
      o.require(full && full->details["period_u"] == 2 * (X.h + Xp.h), where + " full period");
    }
  }
  const auto ps = build_pair(DynkinDiagram::parse("A2"), DynkinDiagram::parse("A1"));
  const Report per = check_pair_periodicity(ps, PairMode::tropical, kDefaultSeed);
  const auto* full = find(per, "pair full periodicity");
  o.require(full && full->details["period_u"] == 10 && full->details["first_return_u"] == 10, "(A2,A1) full period 10");
  return o;
}

Outcome c13_properties() {
  Outcome o;
  using namespace brlab::testing;
  for (const auto& res : {mutation_involutivity(kPropertyCases, 1), semifield_axioms(kPropertyCases, 2),
                          skew_symmetry_preservation(kPropertyCases, 3), quiver_matrix_roundtrip(kPropertyCases, 4)}) {
    o.require(res.cases == kPropertyCases, res.name + " case count");
    o.require(res.failures == 0, res.name + ": " + std::to_string(res.failures) + " failures");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"tropical periodicity on 6 configurations", c1_tropical_periodicity},
      {"sign counts N+/N- and no mixed monomials", c2_sign_counts},
      {"sign regions and boundary formulas", c3_sign_regions},
      {"golden traces and r=6 orbit table", c4_golden},
      {"T-system periodicity (2,2), (3,2)", c5_tsystem},
      {"Y-system periodicity and relations, 5 points", c6_ysystem},
      {"root model correspondence r=2..6", c7_roots},
      {"F-polynomial identities (2,2), (2,3)", c8_fpolys},
      {"constant dilogarithm identity r,l<=4 tol=1e-8", c9_constant_dilog},
      {"functional dilogarithm identities rel tol=1e-6", c10_functional_dilog},
      {"Rogers dilogarithm values tol=1e-11", c11_rogers},
      {"simply laced pairs periodicity", c12_pairs},
      {"property suites 10^4 cases each", c13_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %2zu %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                seconds_since(t0), o.pass ? "" : " -- ", o.note.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
