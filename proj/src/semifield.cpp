#include "brlab/semifield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "brlab/checked.hpp"

namespace brlab {

namespace {

void require_same_generators(const TropMonomial& a, const TropMonomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tropical monomials over different generator sets");
}

}  // namespace

TropMonomial TropMonomial::generator(int n, int i) {
  if (i < 0 || i >= n) throw std::out_of_range("generator index out of range");
  TropMonomial m = one(n);
  m.e[i] = 1;
  return m;
}

bool TropMonomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::int64_t k) { return k == 0; });
}

std::string TropMonomial::to_string(const std::vector<std::string>& labels) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << " * ";
    first = false;
    os << (labels.empty() ? "y" + std::to_string(i) : labels.at(i));
    if (e[i] != 1) os << '^' << e[i];
  }
  return first ? "1" : os.str();
}

std::string TropMonomial::csv_row() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << e[i];
  return os.str();
}

TropMonomial trop_add(const TropMonomial& a, const TropMonomial& b) {
  require_same_generators(a, b);
  TropMonomial m = a;
  for (int i = 0; i < m.size(); ++i) m.e[i] = std::min(a.e[i], b.e[i]);
  return m;
}

TropMonomial trop_mul(const TropMonomial& a, const TropMonomial& b) {
  require_same_generators(a, b);
  TropMonomial m = a;
  for (int i = 0; i < m.size(); ++i) m.e[i] = checked_add(a.e[i], b.e[i]);
  return m;
}

TropMonomial trop_inv(const TropMonomial& a) {
  TropMonomial m = a;
  for (auto& k : m.e) k = checked_neg(k);
  return m;
}

TropMonomial trop_pow(const TropMonomial& a, std::int64_t k) {
  TropMonomial m = a;
  for (auto& x : m.e) x = checked_mul(x, k);
  return m;
}

SignClass classify_sign(const TropMonomial& m) {
  bool pos = false, neg = false;
  for (auto k : m.e) {
    if (k > 0) pos = true;
    if (k < 0) neg = true;
  }
  if (pos && neg) return SignClass::Mixed;
  if (pos) return SignClass::Positive;
  if (neg) return SignClass::Negative;
  return SignClass::One;
}

std::string sign_name(SignClass s) {
  switch (s) {
    case SignClass::Positive: return "positive";
    case SignClass::Negative: return "negative";
    case SignClass::One: return "one";
    case SignClass::Mixed: return "mixed";
  }
  return "?";
}

TropMonomial positive_part(const TropMonomial& m) {
  TropMonomial p = m;
  for (auto& k : p.e) k = std::max<std::int64_t>(k, 0);
  return p;
}

TropMonomial negative_part(const TropMonomial& m) {
  TropMonomial p = m;
  for (auto& k : p.e) k = k < 0 ? -k : 0;
  return p;
}

PosRational::PosRational(const mpq_class& v) : v_(v) {
  v_.canonicalize();
  if (v_ <= 0) throw std::domain_error("positive rational must be > 0");
}

PosRational::PosRational(long num, long den) : PosRational(mpq_class(num, den)) {
  if (den == 0) throw std::domain_error("zero denominator");
}

namespace {

bool positive_polynomial(const LaurentPoly& p) {
  return !p.is_zero() && p.all_coefficients_nonnegative() && p.is_polynomial_in([&] {
    std::vector<int> all(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) all[i] = i;
    return all;
  }());
}

}  // namespace

CoeffPoly::CoeffPoly(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw std::invalid_argument("numerator/denominator ring mismatch");
  if (!positive_polynomial(num_) || !positive_polynomial(den_))
    throw std::domain_error("coefficient polynomials must be nonzero with positive coefficients");
  normalize();
}

CoeffPoly CoeffPoly::one(int n) { return CoeffPoly(LaurentPoly::constant(n, 1), LaurentPoly::constant(n, 1)); }

CoeffPoly CoeffPoly::generator(int n, int i) {
  return CoeffPoly(LaurentPoly::variable(n, i), LaurentPoly::constant(n, 1));
}

void CoeffPoly::normalize() {
  // cancel the common monomial factor and identical num/den
  const int n = num_.nvars();
  Exponents shift(n);
  bool any = false;
  for (int v = 0; v < n; ++v) {
    shift[v] = -std::min(num_.min_exponent(v), den_.min_exponent(v));
    any = any || shift[v] != 0;
  }
  if (any) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  if (num_ == den_) num_ = den_ = LaurentPoly::constant(n, 1);
}

bool CoeffPoly::operator==(const CoeffPoly& o) const { return num_ * o.den_ == o.num_ * den_; }

CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.den_ == b.den_) return CoeffPoly(a.num_ + b.num_, a.den_);
  return CoeffPoly(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) { return CoeffPoly(a.num_ * b.num_, a.den_ * b.den_); }

mpq_class CoeffPoly::evaluate(const std::vector<mpq_class>& point) const {
  return num_.evaluate(point) / den_.evaluate(point);
}

std::string CoeffPoly::to_string() const {
  std::vector<std::string> names;
  for (int i = 0; i < nvars(); ++i) names.push_back("y" + std::to_string(i));
  if (den_ == LaurentPoly::constant(nvars(), 1)) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

SemifieldTag parse_semifield_tag(const std::string& s) {
  if (s == "trivial") return SemifieldTag::trivial;
  if (s == "tropical") return SemifieldTag::tropical;
  if (s == "positive_rational") return SemifieldTag::positive_rational;
  if (s == "coeff_poly") return SemifieldTag::coeff_poly;
  throw std::invalid_argument("unknown semifield tag '" + s + "'");
}

std::string semifield_name(SemifieldTag t) {
  switch (t) {
    case SemifieldTag::trivial: return "trivial";
    case SemifieldTag::tropical: return "tropical";
    case SemifieldTag::positive_rational: return "positive_rational";
    case SemifieldTag::coeff_poly: return "coeff_poly";
  }
  return "?";
}

namespace {

template <class SF>
SemifieldOps make_ops(SemifieldTag tag, std::function<SemifieldElement(int)> one) {
  using V = typename SF::value_type;
  auto get = [](const SemifieldElement& x) -> const V& {
    if (!std::holds_alternative<V>(x)) throw std::invalid_argument("element belongs to another semifield");
    return std::get<V>(x);
  };
  SemifieldOps ops;
  ops.tag = tag;
  ops.add = [get](const SemifieldElement& a, const SemifieldElement& b) -> SemifieldElement {
    return SF::add(get(a), get(b));
  };
  ops.mul = [get](const SemifieldElement& a, const SemifieldElement& b) -> SemifieldElement {
    return SF::mul(get(a), get(b));
  };
  ops.inv = [get](const SemifieldElement& a) -> SemifieldElement { return SF::inv(get(a)); };
  ops.one = std::move(one);
  ops.equal = [get](const SemifieldElement& a, const SemifieldElement& b) { return get(a) == get(b); };
  return ops;
}

}  // namespace

SemifieldOps semifield_ops(SemifieldTag tag) {
  switch (tag) {
    case SemifieldTag::trivial:
      return make_ops<TrivialSF>(tag, [](int) -> SemifieldElement { return TrivialOne{}; });
    case SemifieldTag::tropical:
      return make_ops<TropicalSF>(tag, [](int n) -> SemifieldElement { return TropMonomial::one(n); });
    case SemifieldTag::positive_rational:
      return make_ops<PositiveRationalSF>(tag, [](int) -> SemifieldElement { return PosRational(); });
    case SemifieldTag::coeff_poly:
      return make_ops<CoeffPolySF>(tag, [](int n) -> SemifieldElement { return CoeffPoly::one(n); });
  }
  throw std::invalid_argument("unknown semifield tag");
}

SemifieldOps semifield_ops(const std::string& tag) { return semifield_ops(parse_semifield_tag(tag)); }

}  // namespace brlab
