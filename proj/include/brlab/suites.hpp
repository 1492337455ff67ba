#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brlab/br_systems.hpp"
#include "brlab/random_point.hpp"
#include "brlab/report.hpp"
#include "brlab/simply_laced.hpp"

namespace brlab {

// Which configurations each verification suite runs over.
struct Grid {
  std::vector<BrConfig> tropical;
  std::vector<BrConfig> tsystem;
  std::vector<BrConfig> ysystem;
  std::vector<BrConfig> fpoly;
  std::vector<BrConfig> dilog_constant;
  std::vector<BrConfig> dilog_functional;
  std::vector<int> roots;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<PairMode> modes{PairMode::tropical, PairMode::laurent, PairMode::rational};
  int samples = 5;  // random initial points for Y periodicity and functional DI
  int points = 5;   // random evaluation points for F2/F3
  double dilog_tol = 1e-8;
  double functional_tol = 1e-6;
  std::uint64_t seed = kDefaultSeed;
};

// "default": the full acceptance grid; "smoke": (2,2), r = 2,3 and (A2,A1).
Grid named_grid(const std::string& name);

// Restricts every B_r list to a single configuration and roots to {r}.
void restrict_to(Grid& g, const BrConfig& cfg);

// "X:X'" -> (X, X'); throws std::invalid_argument.
std::pair<std::string, std::string> parse_pair_name(const std::string& s);

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tropical", "tsystem", "ysystem", "roots", "dilog", "pairs", "all"};
  return names;
}

// Throws std::invalid_argument for an unknown suite.
Report run_suite(const std::string& suite, const Grid& g);

}  // namespace brlab
