#include "brlab/seed.hpp"

namespace brlab {

FastTropicalResult mutate_coeffs_tropical_fast(const std::vector<TropMonomial>& y, const SkewMatrix& b, int k) {
  const int n = b.size();
  if (static_cast<int>(y.size()) != n) throw std::invalid_argument("coefficient tuple size mismatch");
  if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
  const SignClass s = classify_sign(y[k]);
  if (s == SignClass::Mixed) return {mutate_coeffs<TropicalSF>(y, b, k), true};
  FastTropicalResult r{y, false};
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      r.y[i] = trop_inv(y[k]);
      continue;
    }
    const std::int64_t bki = b(k, i);
    const bool grows = (bki > 0 && s == SignClass::Positive) || (bki < 0 && s == SignClass::Negative);
    if (grows) r.y[i] = trop_mul(y[i], trop_pow(y[k], bki > 0 ? bki : -bki));
  }
  return r;
}

std::vector<LaurentPoly> exchange(const std::vector<LaurentPoly>& x, const LaurentPoly& p_plus,
                                  const LaurentPoly& p_minus, const SkewMatrix& b, int k) {
  const int n = b.size();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("cluster size mismatch");
  if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
  LaurentPoly mp = p_plus, mm = p_minus;
  for (int j = 0; j < n; ++j) {
    const std::int64_t bjk = b(j, k);
    if (bjk > 0) mp = mp * x[j].pow(static_cast<unsigned>(bjk));
    if (bjk < 0) mm = mm * x[j].pow(static_cast<unsigned>(-bjk));
  }
  std::vector<LaurentPoly> out = x;
  out[k] = (mp + mm).exact_divide(x[k]);
  return out;
}

std::vector<LaurentPoly> mutate_cluster(const std::vector<LaurentPoly>& x, const std::vector<TrivialOne>& y,
                                        const SkewMatrix& b, int k) {
  if (x.empty() || y.size() != x.size()) throw std::invalid_argument("cluster/coefficient size mismatch");
  const LaurentPoly one = LaurentPoly::constant(x[0].nvars(), 1);
  return exchange(x, one, one, b, k);
}

LaurentPoly embed_monomial(const TropMonomial& m, int nvars) {
  const int off = nvars - m.size();
  if (off < 0) throw std::invalid_argument("monomial does not fit the ring");
  Exponents e(nvars, 0);
  for (int i = 0; i < m.size(); ++i) e[off + i] = static_cast<std::int32_t>(m.e[i]);
  return LaurentPoly::monomial(e);
}

std::vector<LaurentPoly> mutate_cluster(const std::vector<LaurentPoly>& x, const std::vector<TropMonomial>& y,
                                        const SkewMatrix& b, int k) {
  if (x.empty() || y.size() != x.size()) throw std::invalid_argument("cluster/coefficient size mismatch");
  const int nv = x[0].nvars();
  return exchange(x, embed_monomial(positive_part(y[k]), nv), embed_monomial(negative_part(y[k]), nv), b, k);
}

Seed<TrivialSF> trivial_seed(const SkewMatrix& b) {
  Seed<TrivialSF> s{b, {}, std::vector<TrivialOne>(b.size())};
  for (int i = 0; i < b.size(); ++i) s.x.push_back(LaurentPoly::variable(b.size(), i));
  return s;
}

Seed<TropicalSF> principal_seed(const SkewMatrix& b) {
  const int n = b.size();
  Seed<TropicalSF> s{b, {}, {}};
  for (int i = 0; i < n; ++i) {
    s.x.push_back(LaurentPoly::variable(2 * n, i));
    s.y.push_back(TropMonomial::generator(n, i));
  }
  return s;
}

Seed<PositiveRationalSF> rational_seed(const SkewMatrix& b, const std::vector<PosRational>& y0) {
  if (static_cast<int>(y0.size()) != b.size()) throw std::invalid_argument("initial coefficient size mismatch");
  return {b, {}, y0};
}

FPolynomial make_f_polynomial(LaurentPoly p) {
  std::vector<int> all(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) all[i] = i;
  if (!p.is_polynomial_in(all)) throw std::logic_error("F-polynomial has negative exponents");
  if (!p.all_coefficients_nonnegative()) throw std::logic_error("F-polynomial has a negative coefficient");
  if (p.constant_term() != 1) throw std::logic_error("F-polynomial constant term is not 1");
  return {std::move(p)};
}

FPolynomial f_polynomial(const LaurentPoly& x_entry, int ny) {
  const int nx = x_entry.nvars() - ny;
  if (nx < 0) throw std::invalid_argument("ring has fewer variables than coefficients");
  std::vector<int> keep;
  for (int i = nx; i < x_entry.nvars(); ++i) keep.push_back(i);
  return make_f_polynomial(x_entry.specialize_to_one(keep));
}

std::vector<LaurentPoly> mutate_f_polynomials(const std::vector<LaurentPoly>& f, const std::vector<TropMonomial>& y,
                                              const SkewMatrix& b, int k) {
  return mutate_cluster(f, y, b, k);
}

}  // namespace brlab
