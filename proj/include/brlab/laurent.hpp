#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace brlab {

using Exponents = std::vector<std::int32_t>;

// Multivariate Laurent polynomial with big-integer coefficients.
// Terms are kept sorted by exponent vector in descending lexicographic order;
// zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : n_(nvars) {}

  static LaurentPoly constant(int nvars, const mpz_class& c);
  static LaurentPoly monomial(const Exponents& e, const mpz_class& c = 1);
  static LaurentPoly variable(int nvars, int i, std::int32_t power = 1);

  int nvars() const { return n_; }
  std::size_t num_terms() const { return coefs_.size(); }
  bool is_zero() const { return coefs_.empty(); }

  const mpz_class& coef(std::size_t t) const { return coefs_[t]; }
  const std::int32_t* exps(std::size_t t) const { return exps_.data() + t * n_; }
  Exponents exponents(std::size_t t) const { return Exponents(exps(t), exps(t) + n_); }

  mpz_class coefficient_of(const Exponents& e) const;
  mpz_class constant_term() const { return coefficient_of(Exponents(n_, 0)); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly pow(unsigned k) const;
  bool operator==(const LaurentPoly& o) const;

  // Exact quotient; throws std::domain_error when o does not divide *this.
  LaurentPoly exact_divide(const LaurentPoly& o) const;

  // Multiplies by the monomial with exponent vector e.
  LaurentPoly shifted(const Exponents& e) const;

  // Keeps variables listed in `keep` (in that order) and sets every other variable to 1.
  LaurentPoly specialize_to_one(const std::vector<int>& keep) const;

  // Evaluates at a point with nonzero rational coordinates.
  mpq_class evaluate(const std::vector<mpq_class>& point) const;

  bool all_coefficients_nonnegative() const;
  // True when every exponent of the listed variables is >= 0.
  bool is_polynomial_in(const std::vector<int>& vars) const;
  std::int32_t min_exponent(int var) const;
  std::int32_t max_exponent(int var) const;

  // Canonical text form: terms in descending lex order, e.g. "2*x0^-1*x1 + 1".
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void push_term(const std::int32_t* e, mpz_class c);
  static LaurentPoly from_unsorted(int nvars, std::vector<std::int32_t>&& exps, std::vector<mpz_class>&& coefs);

  int n_ = 0;
  std::vector<std::int32_t> exps_;
  std::vector<mpz_class> coefs_;
};

// Lexicographic comparison of two exponent slices of length n: <0, 0, >0.
int compare_exponents(const std::int32_t* a, const std::int32_t* b, int n);

}  // namespace brlab
