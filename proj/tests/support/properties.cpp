#include "properties.hpp"

#include <stdexcept>

#include "brlab/quiver.hpp"
#include "brlab/random_point.hpp"
#include "brlab/seed.hpp"

namespace brlab::testing {

SkewMatrix random_skew(std::mt19937_64& rng, int max_n, int max_entry) {
  const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
  std::uniform_int_distribution<int> e(-max_entry, max_entry);
  SkewMatrix b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.set(i, j, e(rng));
  return b;
}

namespace {

TropMonomial random_monomial(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> e(-4, 4);
  TropMonomial m = TropMonomial::one(n);
  for (auto& x : m.e) x = e(rng);
  return m;
}

PosRational random_pos(std::mt19937_64& rng) { return PosRational(random_positive_point(1, rng)[0]); }

}  // namespace

PropertyResult mutation_involutivity(long cases, std::uint64_t seed) {
  PropertyResult res{"mutation involutivity"};
  std::mt19937_64 rng(seed);
  for (long c = 0; c < cases; ++c) {
    // small matrices keep the Laurent arithmetic cheap
    const SkewMatrix b = random_skew(rng, c % 10 == 0 ? 4 : 6, 2);
    const int n = b.size();
    const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
    ++res.cases;
    bool ok = mutate_matrix(mutate_matrix(b, k), k) == b;

    std::vector<TropMonomial> yt;
    std::vector<PosRational> yq;
    for (int i = 0; i < n; ++i) {
      yt.push_back(random_monomial(rng, n));
      yq.push_back(random_pos(rng));
    }
    const SkewMatrix bk = mutate_matrix(b, k);
    ok = ok && mutate_coeffs<TropicalSF>(mutate_coeffs<TropicalSF>(yt, b, k), bk, k) == yt;
    ok = ok && mutate_coeffs<PositiveRationalSF>(mutate_coeffs<PositiveRationalSF>(yq, b, k), bk, k) == yq;

    if (c % 10 == 0) {
      const auto s = trivial_seed(b);
      ok = ok && mutate_seed(mutate_seed(s, k), k) == s;
      const auto p = principal_seed(b);
      ok = ok && mutate_seed(mutate_seed(p, k), k) == p;
    }
    if (!ok) ++res.failures;
  }
  return res;
}

PropertyResult semifield_axioms(long cases, std::uint64_t seed) {
  PropertyResult res{"semifield axioms"};
  std::mt19937_64 rng(seed);
  for (long c = 0; c < cases; ++c) {
    ++res.cases;
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto a = random_monomial(rng, n), b = random_monomial(rng, n), d = random_monomial(rng, n);
    using T = TropicalSF;
    bool ok = T::add(a, b) == T::add(b, a) && T::mul(a, b) == T::mul(b, a);
    ok = ok && T::add(T::add(a, b), d) == T::add(a, T::add(b, d));
    ok = ok && T::mul(T::mul(a, b), d) == T::mul(a, T::mul(b, d));
    ok = ok && T::mul(a, T::add(b, d)) == T::add(T::mul(a, b), T::mul(a, d));
    ok = ok && T::mul(a, T::inv(a)) == T::one_like(a) && T::mul(a, T::one_like(a)) == a;

    const auto p = random_pos(rng), q = random_pos(rng), r = random_pos(rng);
    using Q = PositiveRationalSF;
    ok = ok && Q::add(p, q) == Q::add(q, p) && Q::mul(p, q) == Q::mul(q, p);
    ok = ok && Q::add(Q::add(p, q), r) == Q::add(p, Q::add(q, r));
    ok = ok && Q::mul(Q::mul(p, q), r) == Q::mul(p, Q::mul(q, r));
    ok = ok && Q::mul(p, Q::add(q, r)) == Q::add(Q::mul(p, q), Q::mul(p, r));
    ok = ok && Q::mul(p, Q::inv(p)) == Q::one_like(p);
    if (!ok) ++res.failures;
  }
  return res;
}

PropertyResult skew_symmetry_preservation(long cases, std::uint64_t seed) {
  PropertyResult res{"skew-symmetry preservation"};
  std::mt19937_64 rng(seed);
  for (long c = 0; c < cases; ++c) {
    SkewMatrix b = random_skew(rng, 6, 2);
    const int steps = std::uniform_int_distribution<int>(1, 8)(rng);
    ++res.cases;
    bool ok = true;
    try {
      for (int s = 0; s < steps && ok; ++s) {
        b = mutate_matrix(b, std::uniform_int_distribution<int>(0, b.size() - 1)(rng));
        ok = b.is_skew_symmetric();
      }
    } catch (const std::overflow_error&) {
      // growth past int64 is reported, not wrapped; every completed step was checked
      ++res.overflows;
    }
    if (!ok) ++res.failures;
  }
  return res;
}

PropertyResult quiver_matrix_roundtrip(long cases, std::uint64_t seed) {
  PropertyResult res{"quiver-matrix round trip"};
  std::mt19937_64 rng(seed);
  for (long c = 0; c < cases; ++c) {
    const SkewMatrix b = random_skew(rng, 6, 3);
    const int k = std::uniform_int_distribution<int>(0, b.size() - 1)(rng);
    ++res.cases;
    const Quiver q = quiver_of(b);
    bool ok = matrix_of(q) == b;
    ok = ok && quiver_from_json(quiver_to_json(q)) == q;
    ok = ok && matrix_of(mutate_quiver(q, k)) == mutate_matrix(b, k);
    if (!ok) ++res.failures;
  }
  return res;
}

}  // namespace brlab::testing
