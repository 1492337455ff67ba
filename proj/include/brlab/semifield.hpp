#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "brlab/laurent.hpp"

namespace brlab {

// ---- tropical semifield Trop(y) ----

// Laurent monomial prod y_i^{e_i}; dense exponent vector, so equality is exponentwise.
struct TropMonomial {
  std::vector<std::int64_t> e;

  static TropMonomial one(int n) { return {std::vector<std::int64_t>(n, 0)}; }
  static TropMonomial generator(int n, int i);
  int size() const { return static_cast<int>(e.size()); }
  bool is_one() const;
  bool operator==(const TropMonomial&) const = default;

  // "y[1,1]^-1 * y[2,1]"-style text; labels default to y0, y1, ...
  std::string to_string(const std::vector<std::string>& labels = {}) const;
  std::string csv_row() const;
};

TropMonomial trop_add(const TropMonomial& a, const TropMonomial& b);  // exponentwise min
TropMonomial trop_mul(const TropMonomial& a, const TropMonomial& b);  // exponentwise sum
TropMonomial trop_inv(const TropMonomial& a);
TropMonomial trop_pow(const TropMonomial& a, std::int64_t k);

enum class SignClass { Positive, Negative, One, Mixed };
SignClass classify_sign(const TropMonomial& m);
std::string sign_name(SignClass s);

// Positive and negative parts [e]_+ = max(e,0), [e]_- = max(-e,0) as monomials.
TropMonomial positive_part(const TropMonomial& m);
TropMonomial negative_part(const TropMonomial& m);

// ---- exact positive rationals ----

class PosRational {
 public:
  PosRational() : v_(1) {}
  explicit PosRational(const mpq_class& v);
  PosRational(long num, long den);

  const mpq_class& value() const { return v_; }
  double to_double() const { return v_.get_d(); }
  bool operator==(const PosRational& o) const { return v_ == o.v_; }

  friend PosRational operator+(const PosRational& a, const PosRational& b) { return PosRational(a.v_ + b.v_); }
  friend PosRational operator*(const PosRational& a, const PosRational& b) { return PosRational(a.v_ * b.v_); }
  PosRational inverse() const { return PosRational(1 / v_); }

 private:
  mpq_class v_;
};

// ---- subtraction-free rational expressions: ratio of nonnegative polynomials ----

class CoeffPoly {
 public:
  CoeffPoly() = default;
  // num/den must be nonzero polynomials with positive coefficients.
  CoeffPoly(LaurentPoly num, LaurentPoly den);
  static CoeffPoly one(int n);
  static CoeffPoly generator(int n, int i);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }

  // Equality as rational functions, by cross multiplication.
  bool operator==(const CoeffPoly& o) const;

  friend CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  CoeffPoly inverse() const { return CoeffPoly(den_, num_); }
  mpq_class evaluate(const std::vector<mpq_class>& point) const;
  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_, den_;
};

// ---- semifield policies for compile-time generic mutation ----

struct TrivialOne {
  bool operator==(const TrivialOne&) const = default;
};

struct TrivialSF {
  using value_type = TrivialOne;
  static value_type add(const value_type&, const value_type&) { return {}; }
  static value_type mul(const value_type&, const value_type&) { return {}; }
  static value_type inv(const value_type&) { return {}; }
  static value_type one_like(const value_type&) { return {}; }
};

struct TropicalSF {
  using value_type = TropMonomial;
  static value_type add(const value_type& a, const value_type& b) { return trop_add(a, b); }
  static value_type mul(const value_type& a, const value_type& b) { return trop_mul(a, b); }
  static value_type inv(const value_type& a) { return trop_inv(a); }
  static value_type one_like(const value_type& a) { return TropMonomial::one(a.size()); }
};

struct PositiveRationalSF {
  using value_type = PosRational;
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type inv(const value_type& a) { return a.inverse(); }
  static value_type one_like(const value_type&) { return PosRational(); }
};

struct CoeffPolySF {
  using value_type = CoeffPoly;
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type inv(const value_type& a) { return a.inverse(); }
  static value_type one_like(const value_type& a) { return CoeffPoly::one(a.nvars()); }
};

template <class SF>
typename SF::value_type sf_pow(const typename SF::value_type& a, std::int64_t k) {
  if (k < 0) return sf_pow<SF>(SF::inv(a), -k);
  typename SF::value_type result = SF::one_like(a), base = a;
  while (k) {
    if (k & 1) result = SF::mul(result, base);
    k >>= 1;
    if (k) base = SF::mul(base, base);
  }
  return result;
}

template <>
inline TropMonomial sf_pow<TropicalSF>(const TropMonomial& a, std::int64_t k) {
  return trop_pow(a, k);
}

// ---- runtime dispatch ----

enum class SemifieldTag { trivial, tropical, positive_rational, coeff_poly };
SemifieldTag parse_semifield_tag(const std::string& s);
std::string semifield_name(SemifieldTag t);

using SemifieldElement = std::variant<TrivialOne, TropMonomial, PosRational, CoeffPoly>;

struct SemifieldOps {
  SemifieldTag tag;
  std::function<SemifieldElement(const SemifieldElement&, const SemifieldElement&)> add;
  std::function<SemifieldElement(const SemifieldElement&, const SemifieldElement&)> mul;
  std::function<SemifieldElement(const SemifieldElement&)> inv;
  // Multiplicative identity over n generators.
  std::function<SemifieldElement(int)> one;
  std::function<bool(const SemifieldElement&, const SemifieldElement&)> equal;
};

SemifieldOps semifield_ops(SemifieldTag tag);
SemifieldOps semifield_ops(const std::string& tag);

}  // namespace brlab
