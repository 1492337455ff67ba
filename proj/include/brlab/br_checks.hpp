#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "brlab/br_systems.hpp"
#include "brlab/laurent.hpp"
#include "brlab/report.hpp"
#include "brlab/semifield.hpp"

namespace brlab {

// T^{(a)}_m(u) for (a,m,u) in I_{l+}, read off the trivial-coefficient cluster walk via g.
struct TValues {
  BrConfig cfg;
  std::map<SystemIndex, LaurentPoly> values;
  bool seed_returned = false;  // cluster and matrix at 2u = 4P equal the initial ones (if reached)
  bool has(const SystemIndex& s) const;
  // unit boundary: T_0 = T_{t_a l} = 1
  LaurentPoly at(const SystemIndex& s) const;
};

TValues compute_T(const BrQuiver& q, int u2_from, int u2_to);

// T(u-1/t_a) T(u+1/t_a) = T_{m-1}(u) T_{m+1}(u) + prod T^G at every center in I'_{l+}
// whose ingredients are all available.
CheckRecord check_T_relations(const TValues& tv);
// Half periodicity with m -> t_a l - m, full periodicity 2(h^v + l), seed return.
Report check_T_periodicity(const BrConfig& cfg);

// Y^{(a)}_m(u) for (a,m,u) in I'_{l+}, read off the exact rational coefficient walk via g'.
struct YValues {
  BrConfig cfg;
  std::map<SystemIndex, mpq_class> values;
  bool has(const SystemIndex& s) const { return values.count(s) != 0; }
  const mpq_class& at(const SystemIndex& s) const;
};

YValues compute_Y(const BrQuiver& q, const std::vector<mpq_class>& y0, int u2_from, int u2_to);

// Both the displayed relation shapes and the transposed-G product form.
CheckRecord check_Y_relations(const YValues& yv);
Report check_Y_periodicity(const BrConfig& cfg, const std::vector<mpq_class>& y0);

// Principal-coefficient data: tropical y at p+ points (via g') and F-polynomials (via g).
struct FData {
  BrConfig cfg;
  std::map<SystemIndex, LaurentPoly> F;
  std::map<SystemIndex, TropMonomial> ytrop;
  // F-polynomials of every vertex at every time point of the window
  std::map<int, std::vector<LaurentPoly>> by_time;
  int fallbacks = 0;
  LaurentPoly f_at(const SystemIndex& s) const;
};

FData compute_F(const BrQuiver& q, int u2_from, int u2_to);

// F1 exactly, F2/F3 at `points` random positive rational points, constant term 1, F periodicity.
Report check_f_identities(const BrConfig& cfg, int points, std::uint64_t seed);

}  // namespace brlab
