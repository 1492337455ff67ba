#pragma once

#include <map>
#include <string>
#include <vector>

#include "brlab/br_systems.hpp"
#include "brlab/report.hpp"
#include "brlab/semifield.hpp"

namespace brlab {

// [y_i(u)]_T for every vertex at every u2 in [u2_from, u2_to], from y(0) = generators.
struct TropicalTrace {
  BrConfig cfg;
  int u2_from = 0;
  int u2_to = 0;
  std::map<int, std::vector<TropMonomial>> y;
  std::map<int, SkewMatrix> B;
  int fallbacks = 0;  // Mixed y_k met by the fast sign-case rule

  const TropMonomial& at(int idx, int u2) const;
};

TropicalTrace run_tropical(const BrQuiver& q, int u2_from, int u2_to);

// CSV with columns i,ip,u2,parity,sign,y_<i>_<ip>...; rows sorted by (u2, i, ip).
std::string trace_csv(const BrQuiver& q, const TropicalTrace& t);

// Positivity on 0 <= u < l; negativity on -h^v <= u < 0 with the alternation on the filled plus column.
Report check_sign_regions(const BrQuiver& q, const TropicalTrace& t);
// y(l) and y(-h^v) boundary formulas.
Report check_boundaries(const BrQuiver& q, const TropicalTrace& t);
// Half periodicity with omega, full periodicity 2(h^v+l), and B(u+h^v+l) = omega(B(u)).
Report check_tropical_periodicity(const BrConfig& cfg);

struct SignCounts {
  long plus = 0;
  long minus = 0;
  long mixed = 0;
  long one = 0;
  long points = 0;
};

// Signs of the p_plus monomials over 0 <= u < 2(h^v+l); the trace must cover that window.
SignCounts count_signs(const BrQuiver& q, const TropicalTrace& t);
CheckRecord check_sign_counts(const BrConfig& cfg);

// For -h^v <= u < 0 the bottom level-2 block of the level-l trace equals the level-2 trace
// and carries no exponents outside the block.
CheckRecord check_factorization(const BrConfig& cfg);

// Everything above for one configuration.
Report check_tropical(const BrConfig& cfg);

}  // namespace brlab
