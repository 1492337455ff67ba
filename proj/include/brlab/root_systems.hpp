#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brlab/report.hpp"

namespace brlab {

// Element of Phi_{>=-1} for A_n: a positive root [i,j] = a_i + ... + a_j or -a_j.
// Simple roots are indexed 1..n.
class AlmostPositiveRoot {
 public:
  // throws std::invalid_argument unless coeffs is an interval of 1's or a single -1
  explicit AlmostPositiveRoot(std::vector<int> coeffs);
  static AlmostPositiveRoot simple(int n, int i);
  static AlmostPositiveRoot negative_simple(int n, int i);
  static AlmostPositiveRoot interval(int n, int i, int j);

  int rank() const { return static_cast<int>(c_.size()); }
  const std::vector<int>& coeffs() const { return c_; }
  int coeff(int i) const { return c_.at(i - 1); }
  bool is_positive() const { return c_[lo_ - 1] > 0; }
  // [lo, hi] for positive roots; lo == hi == j for -a_j
  std::pair<int, int> support() const { return {lo_, hi_}; }
  bool operator==(const AlmostPositiveRoot& o) const { return c_ == o.c_; }
  bool operator<(const AlmostPositiveRoot& o) const { return c_ < o.c_; }

  // "[i,j]", "[i]", "-a<j>"
  std::string to_string() const;

 private:
  std::vector<int> c_;
  int lo_ = 0, hi_ = 0;
};

// Positive roots of A_n, all intervals.
std::vector<AlmostPositiveRoot> positive_roots(int n);

// Ordinary reflection s_i on an integer vector over simple roots of A_n.
std::vector<int> reflect(const std::vector<int>& v, int i);

// Piecewise-linear reflection: s_i on Phi_+, -a_i -> a_i, fixes -a_j (j != i).
AlmostPositiveRoot sigma_i(const AlmostPositiveRoot& a, int i);

// Vertices of A_{2r-1} other than r, split into J+ and J- (vertex 1 is '+' iff r is odd).
struct BipartiteSplit {
  std::vector<int> plus;
  std::vector<int> minus;
};
BipartiteSplit root_signs(int r);
bool in_J_plus(int r, int i);

// sigma = sigma_r sigma_- sigma_r sigma_+, sigma_+ applied first.
AlmostPositiveRoot sigma(int r, const AlmostPositiveRoot& a);
AlmostPositiveRoot sigma_pow(int r, const AlmostPositiveRoot& a, int k);

struct Orbit {
  int row = 0;            // i, or r for the interleaved middle row
  std::string label;      // "1 -", "2 +", ..., "r"
  std::vector<AlmostPositiveRoot> entries;  // starts at -a_i; the middle row interleaves sigma^k(a_r), sigma^{k+1}(-a_r)
};

std::vector<Orbit> orbit_table(int r);
// Text form with a header line "u -1 ... -(2r-1)" and one line per row.
std::string orbit_table_text(int r);
// Lengths, terminals -a_{omega(i)} and the partition of Phi_+.
CheckRecord check_orbit_decomposition(int r);

// alpha_i(u) for -h^v <= u < 0 with the congruence of i; nullopt elsewhere.
std::optional<AlmostPositiveRoot> alpha_of(int r, int i, int u2);

// Removes a_r (A_{2r-1} -> A_{2r-2}, indices above r shift down by one); throws outside the domain.
AlmostPositiveRoot rho(int r, const AlmostPositiveRoot& a);
AlmostPositiveRoot rho_inverse(int r, const AlmostPositiveRoot& a);
// Coxeter element s = s_- s_+ of A_{2r-2} with the inherited signs.
std::vector<int> coxeter_s(int r, const std::vector<int>& v);
// Union of the orbits O_i, i != r.
std::vector<AlmostPositiveRoot> rho_domain(int r);
CheckRecord check_rho(int r);

// Recurrences for alpha_i(u) with alpha_0 = alpha_{2r} = 0.
CheckRecord check_alpha_recurrences(int r);

// Level-2 tropical trace against the root model: t_i(u) = -alpha_i(u), the pi_A triviality of
// y_{r1}, y_{r3} at even u, the t-recurrences, and t_i(-h^v) = -alpha_{omega(i)}.
Report check_tvec_correspondence(int r);

Report check_roots(int r);

}  // namespace brlab
