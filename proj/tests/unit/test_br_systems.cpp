#include <doctest.h>

#include <set>

#include "brlab/br_systems.hpp"
#include "brlab/dilogarithm.hpp"

using namespace brlab;

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS((BrConfig{1, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BrConfig{2, 1}.validate()), std::invalid_argument);
  CHECK_NOTHROW((BrConfig{2, 2}.validate()));
  CHECK(BrConfig{3, 2}.hv() == 5);
  CHECK(BrConfig{3, 2}.period() == 7);
}

TEST_CASE("quiver vertex counts") {
  CHECK(build_quiver_B({2, 2}).size() == 5);
  CHECK(build_quiver_B({3, 2}).size() == 7);
  for (int r = 2; r <= 4; ++r)
    for (int l = 2; l <= 4; ++l) {
      const auto q = build_quiver_B({r, l});
      CHECK(q.size() == (2 * r - 2) * (l - 1) + 2 * l - 1);
      CHECK(q.matrix().is_skew_symmetric());
      CHECK(schedule_cycle_holds(q));
    }
}

TEST_CASE("mutation batches commute and cover the p+ points") {
  for (const BrConfig c : {BrConfig{2, 2}, BrConfig{2, 3}, BrConfig{3, 3}}) {
    const auto q = build_quiver_B(c);
    for (int u2 = 0; u2 < 4; ++u2) {
      const auto batch = mutation_batch(q, u2);
      CHECK(!batch.empty());
      CHECK(batch_commutes(expected_matrix(q, u2), batch));
    }
  }
}

TEST_CASE("index set sizes over one period") {
  for (const BrConfig c : {BrConfig{2, 2}, BrConfig{2, 3}, BrConfig{3, 2}, BrConfig{3, 3}}) {
    const int P = c.period();
    const auto pts = enumerate_index_set(c, 0, 4 * P);
    CHECK(static_cast<long>(pts.size()) == 4L * P * (c.r * c.l + c.l - c.r));
    long plus = 0;
    for (const auto& s : pts) {
      CHECK(in_index_set(c, s));
      if (parity_P_plus(c, s)) ++plus;
    }
    CHECK(plus == 2L * P * (c.r * c.l + c.l - c.r));
  }
  CHECK(enumerate_index_set({2, 2}, 0, 20).size() == 80);
}

TEST_CASE("labelings g and g' are bijective onto p+ points") {
  for (const BrConfig c : {BrConfig{2, 2}, BrConfig{2, 3}, BrConfig{3, 2}}) {
    const auto q = build_quiver_B(c);
    std::set<TimedVertex> seen_g, seen_gp;
    for (const auto& s : enumerate_index_set(c, 2, 2 + 4 * c.period())) {
      if (parity_P_plus(c, s)) {
        const auto p = g_map(q, s);
        CHECK(g_inverse(q, p) == s);
        CHECK(seen_g.insert(p).second);
      }
      if (parity_Pprime_plus(c, s)) {
        const auto p = g_prime_map(q, s);
        CHECK(g_prime_inverse(q, p) == s);
        CHECK(seen_gp.insert(p).second);
      }
    }
    CHECK(seen_g.size() == seen_gp.size());
  }
}

TEST_CASE("K matrix entries for (2,2)") {
  const auto k = build_K({2, 2});
  REQUIRE(k.size() == 4);
  auto at = [&](std::pair<int, int> p, std::pair<int, int> q) {
    int i = -1, j = -1;
    for (int t = 0; t < k.size(); ++t) {
      if (k.index[t] == p) i = t;
      if (k.index[t] == q) j = t;
    }
    REQUIRE(i >= 0);
    REQUIRE(j >= 0);
    return k.k[i][j];
  };
  // (a|a)(min(t_b m, t_a k) - mk/l) by hand
  CHECK(at({2, 1}, {2, 1}) == mpq_class(3, 2));
  CHECK(at({1, 1}, {1, 1}) == 1);
  CHECK(at({1, 1}, {2, 1}) == mpq_class(-1, 2));
  CHECK(at({2, 1}, {2, 3}) == mpq_class(1, 2));
  CHECK(k.symmetric());
  CHECK(k.positive_definite());
}
