#pragma once

#include <stdexcept>
#include <type_traits>
#include <vector>

#include "brlab/laurent.hpp"
#include "brlab/semifield.hpp"
#include "brlab/skew_matrix.hpp"

namespace brlab {

// Coefficient mutation at k in the semifield SF:
//   y'_k = y_k^{-1}
//   y'_i = y_i (y_k / (1 + y_k))^{B_ki}   if B_ki >= 0
//   y'_i = y_i (1 + y_k)^{-B_ki}          if B_ki <= 0
template <class SF>
std::vector<typename SF::value_type> mutate_coeffs(const std::vector<typename SF::value_type>& y, const SkewMatrix& b,
                                                   int k) {
  const int n = b.size();
  if (static_cast<int>(y.size()) != n) throw std::invalid_argument("coefficient tuple size mismatch");
  if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
  const auto& yk = y[k];
  const auto s = SF::add(SF::one_like(yk), yk);
  const auto up = SF::mul(yk, SF::inv(s));
  std::vector<typename SF::value_type> out = y;
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      out[i] = SF::inv(yk);
    } else if (b(k, i) > 0) {
      out[i] = SF::mul(y[i], sf_pow<SF>(up, b(k, i)));
    } else if (b(k, i) < 0) {
      out[i] = SF::mul(y[i], sf_pow<SF>(s, -b(k, i)));
    }
  }
  return out;
}

struct FastTropicalResult {
  std::vector<TropMonomial> y;
  bool fell_back = false;  // y_k was Mixed; the generic rule was used
};

// Sign-case rule for tropical coefficients: for i != k, y_i picks up y_k^{|B_ki|}
// when (B_ki > 0 and y_k positive) or (B_ki < 0 and y_k negative), and is left
// unchanged otherwise. Mixed y_k falls back to mutate_coeffs<TropicalSF>.
FastTropicalResult mutate_coeffs_tropical_fast(const std::vector<TropMonomial>& y, const SkewMatrix& b, int k);

// x'_k = (p_plus prod_{B_jk>0} x_j^{B_jk} + p_minus prod_{B_jk<0} x_j^{-B_jk}) / x_k, exact division.
std::vector<LaurentPoly> exchange(const std::vector<LaurentPoly>& x, const LaurentPoly& p_plus,
                                  const LaurentPoly& p_minus, const SkewMatrix& b, int k);

// Trivial coefficients: both exchange monomials have coefficient 1.
std::vector<LaurentPoly> mutate_cluster(const std::vector<LaurentPoly>& x, const std::vector<TrivialOne>& y,
                                        const SkewMatrix& b, int k);

// Principal coefficients: the y-generators are the last y.size() variables of the
// Laurent ring; the exchange coefficients are y^{[c]+} and y^{[-c]+} for c = exponents of y_k.
std::vector<LaurentPoly> mutate_cluster(const std::vector<LaurentPoly>& x, const std::vector<TropMonomial>& y,
                                        const SkewMatrix& b, int k);

// Embeds a tropical monomial as a Laurent monomial in a ring with `nvars` variables,
// the generators occupying the last m.size() slots.
LaurentPoly embed_monomial(const TropMonomial& m, int nvars);

template <class SF>
struct Seed {
  SkewMatrix B;
  std::vector<LaurentPoly> x;  // empty when cluster entries are not tracked
  std::vector<typename SF::value_type> y;
  bool operator==(const Seed&) const = default;
};

template <class SF>
Seed<SF> mutate_seed(const Seed<SF>& s, int k) {
  Seed<SF> out;
  if (!s.x.empty()) {
    if constexpr (std::is_same_v<SF, TrivialSF> || std::is_same_v<SF, TropicalSF>) {
      out.x = mutate_cluster(s.x, s.y, s.B, k);
    } else {
      throw std::invalid_argument("cluster entries are tracked only with trivial or principal coefficients");
    }
  }
  out.y = mutate_coeffs<SF>(s.y, s.B, k);
  out.B = mutate_matrix(s.B, k);
  if (!out.B.is_skew_symmetric()) throw std::logic_error("mutation broke skew-symmetry");
  return out;
}

// Initial seeds: x_i = i-th variable; y_i = i-th generator (principal) or 1 (trivial).
Seed<TrivialSF> trivial_seed(const SkewMatrix& b);
Seed<TropicalSF> principal_seed(const SkewMatrix& b);
Seed<PositiveRationalSF> rational_seed(const SkewMatrix& b, const std::vector<PosRational>& y0);

// Polynomial in y with nonnegative integer coefficients and constant term 1.
struct FPolynomial {
  LaurentPoly poly;
  bool operator==(const FPolynomial&) const = default;
};

// Validates the F-polynomial invariants; throws std::logic_error on violation.
FPolynomial make_f_polynomial(LaurentPoly p);

// Sets the x-variables (the first nvars - ny variables) to 1.
FPolynomial f_polynomial(const LaurentPoly& x_entry, int ny);

// F-polynomial mutation: the principal exchange relation specialized at x = 1.
std::vector<LaurentPoly> mutate_f_polynomials(const std::vector<LaurentPoly>& f, const std::vector<TropMonomial>& y,
                                              const SkewMatrix& b, int k);

}  // namespace brlab
