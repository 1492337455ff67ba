#include "brlab/laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brlab {

int compare_exponents(const std::int32_t* a, const std::int32_t* b, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

namespace {

void require_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("Laurent polynomials over different variable sets");
}

struct DescendingLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return compare_exponents(a.data(), b.data(), static_cast<int>(a.size())) > 0;
  }
};

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const mpz_class& c) {
  LaurentPoly p(nvars);
  if (c != 0) {
    Exponents e(nvars, 0);
    p.push_term(e.data(), c);
  }
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const mpz_class& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  if (c != 0) p.push_term(e.data(), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, std::int32_t power) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = power;
  return monomial(e);
}

void LaurentPoly::push_term(const std::int32_t* e, mpz_class c) {
  exps_.insert(exps_.end(), e, e + n_);
  coefs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::from_unsorted(int nvars, std::vector<std::int32_t>&& exps, std::vector<mpz_class>&& coefs) {
  const std::size_t k = coefs.size();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  const std::int32_t* base = exps.data();
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return compare_exponents(base + a * nvars, base + b * nvars, nvars) > 0;
  });
  LaurentPoly out(nvars);
  out.exps_.reserve(exps.size());
  out.coefs_.reserve(k);
  std::size_t t = 0;
  while (t < k) {
    mpz_class c = std::move(coefs[idx[t]]);
    std::size_t s = t + 1;
    while (s < k && compare_exponents(base + idx[s] * nvars, base + idx[t] * nvars, nvars) == 0) {
      c += coefs[idx[s]];
      ++s;
    }
    if (c != 0) out.push_term(base + idx[t] * nvars, std::move(c));
    t = s;
  }
  return out;
}

mpz_class LaurentPoly::coefficient_of(const Exponents& e) const {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
  std::size_t lo = 0, hi = coefs_.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int c = compare_exponents(exps(mid), e.data(), n_);
    if (c == 0) return coefs_[mid];
    if (c > 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return 0;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  require_same_ring(*this, o);
  LaurentPoly out(n_);
  std::size_t i = 0, j = 0;
  while (i < num_terms() || j < o.num_terms()) {
    int c;
    if (i == num_terms())
      c = -1;
    else if (j == o.num_terms())
      c = 1;
    else
      c = compare_exponents(exps(i), o.exps(j), n_);
    if (c > 0) {
      out.push_term(exps(i), coefs_[i]);
      ++i;
    } else if (c < 0) {
      out.push_term(o.exps(j), o.coefs_[j]);
      ++j;
    } else {
      mpz_class s = coefs_[i] + o.coefs_[j];
      if (s != 0) out.push_term(exps(i), std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coefs_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return LaurentPoly(n_);
  if (num_terms() < o.num_terms()) return o * *this;
  std::vector<std::int32_t> e;
  std::vector<mpz_class> c;
  const std::size_t k = num_terms() * o.num_terms();
  e.resize(k * n_);
  c.reserve(k);
  std::size_t t = 0;
  for (std::size_t j = 0; j < o.num_terms(); ++j) {
    for (std::size_t i = 0; i < num_terms(); ++i, ++t) {
      const std::int32_t* a = exps(i);
      const std::int32_t* b = o.exps(j);
      std::int32_t* d = e.data() + t * n_;
      for (int v = 0; v < n_; ++v) d[v] = a[v] + b[v];
      c.push_back(coefs_[i] * o.coefs_[j]);
    }
  }
  return from_unsorted(n_, std::move(e), std::move(c));
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(n_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return n_ == o.n_ && exps_ == o.exps_ && coefs_ == o.coefs_;
}

LaurentPoly LaurentPoly::shifted(const Exponents& e) const {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
  LaurentPoly out = *this;
  for (std::size_t t = 0; t < num_terms(); ++t)
    for (int v = 0; v < n_; ++v) out.exps_[t * n_ + v] += e[v];
  return out;
}

std::int32_t LaurentPoly::min_exponent(int var) const {
  if (is_zero()) throw std::domain_error("exponent range of zero polynomial");
  std::int32_t m = exps(0)[var];
  for (std::size_t t = 1; t < num_terms(); ++t) m = std::min(m, exps(t)[var]);
  return m;
}

std::int32_t LaurentPoly::max_exponent(int var) const {
  if (is_zero()) throw std::domain_error("exponent range of zero polynomial");
  std::int32_t m = exps(0)[var];
  for (std::size_t t = 1; t < num_terms(); ++t) m = std::max(m, exps(t)[var]);
  return m;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& d) const {
  require_same_ring(*this, d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  LaurentPoly q(n_);
  if (is_zero()) return q;
  // the quotient's exponents in each variable are confined to a box
  Exponents lo(n_), hi(n_);
  for (int v = 0; v < n_; ++v) {
    lo[v] = min_exponent(v) - d.min_exponent(v);
    hi[v] = max_exponent(v) - d.max_exponent(v);
    if (lo[v] > hi[v]) throw std::domain_error("polynomial division leaves a remainder");
  }
  if (d.num_terms() == 1) {
    Exponents neg(d.exps(0), d.exps(0) + n_);
    for (auto& x : neg) x = -x;
    LaurentPoly out = shifted(neg);
    for (auto& c : out.coefs_) {
      if (!mpz_divisible_p(c.get_mpz_t(), d.coefs_[0].get_mpz_t()))
        throw std::domain_error("polynomial division leaves a remainder");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.coefs_[0].get_mpz_t());
    }
    return out;
  }
  std::map<Exponents, mpz_class, DescendingLex> rem;
  for (std::size_t t = 0; t < num_terms(); ++t) rem.emplace(exponents(t), coefs_[t]);
  const std::int32_t* lead = d.exps(0);
  const mpz_class& lead_c = d.coefs_[0];
  Exponents qe(n_), pe(n_);
  mpz_class qc;
  while (!rem.empty()) {
    auto it = rem.begin();
    for (int v = 0; v < n_; ++v) {
      qe[v] = it->first[v] - lead[v];
      if (qe[v] < lo[v] || qe[v] > hi[v]) throw std::domain_error("polynomial division leaves a remainder");
    }
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead_c.get_mpz_t()))
      throw std::domain_error("polynomial division leaves a remainder");
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead_c.get_mpz_t());
    q.push_term(qe.data(), qc);
    rem.erase(it);
    for (std::size_t t = 1; t < d.num_terms(); ++t) {
      const std::int32_t* de = d.exps(t);
      for (int v = 0; v < n_; ++v) pe[v] = qe[v] + de[v];
      auto [pos, inserted] = rem.try_emplace(pe);
      pos->second -= qc * d.coefs_[t];
      if (pos->second == 0) rem.erase(pos);
    }
  }
  return q;
}

LaurentPoly LaurentPoly::specialize_to_one(const std::vector<int>& keep) const {
  const int m = static_cast<int>(keep.size());
  for (int v : keep)
    if (v < 0 || v >= n_) throw std::out_of_range("variable index out of range");
  std::vector<std::int32_t> e(num_terms() * m);
  std::vector<mpz_class> c(coefs_);
  for (std::size_t t = 0; t < num_terms(); ++t)
    for (int s = 0; s < m; ++s) e[t * m + s] = exps(t)[keep[s]];
  return from_unsorted(m, std::move(e), std::move(c));
}

mpq_class LaurentPoly::evaluate(const std::vector<mpq_class>& point) const {
  if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("evaluation point has wrong dimension");
  for (const auto& p : point)
    if (p == 0) throw std::domain_error("Laurent polynomial evaluated at a zero coordinate");
  std::vector<std::map<std::int32_t, mpq_class>> cache(n_);
  auto power = [&](int v, std::int32_t k) -> const mpq_class& {
    auto it = cache[v].find(k);
    if (it != cache[v].end()) return it->second;
    mpq_class r;
    const unsigned a = static_cast<unsigned>(k < 0 ? -static_cast<std::int64_t>(k) : k);
    mpz_pow_ui(r.get_num_mpz_t(), point[v].get_num_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), point[v].get_den_mpz_t(), a);
    if (k < 0) mpz_swap(r.get_num_mpz_t(), r.get_den_mpz_t());
    r.canonicalize();
    return cache[v].emplace(k, std::move(r)).first->second;
  };
  mpq_class sum = 0;
  for (std::size_t t = 0; t < num_terms(); ++t) {
    mpq_class term(coefs_[t]);
    for (int v = 0; v < n_; ++v)
      if (exps(t)[v] != 0) term *= power(v, exps(t)[v]);
    sum += term;
  }
  return sum;
}

bool LaurentPoly::all_coefficients_nonnegative() const {
  return std::all_of(coefs_.begin(), coefs_.end(), [](const mpz_class& c) { return c > 0; });
}

bool LaurentPoly::is_polynomial_in(const std::vector<int>& vars) const {
  for (std::size_t t = 0; t < num_terms(); ++t)
    for (int v : vars)
      if (exps(t)[v] < 0) return false;
  return true;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < num_terms(); ++t) {
    mpz_class c = coefs_[t];
    if (t) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool first = true;
    std::ostringstream mono;
    for (int v = 0; v < n_; ++v) {
      const std::int32_t k = exps(t)[v];
      if (k == 0) continue;
      if (!first) mono << '*';
      first = false;
      mono << (names.empty() ? "x" + std::to_string(v) : names.at(v));
      if (k != 1) mono << '^' << k;
    }
    if (first) {
      os << c.get_str();
    } else {
      if (c == -1)
        os << '-';
      else if (c != 1)
        os << c.get_str() << '*';
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace brlab
