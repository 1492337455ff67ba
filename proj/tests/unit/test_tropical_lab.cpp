#include <doctest.h>

#include <fstream>
#include <sstream>

#include "brlab/tropical_lab.hpp"

using namespace brlab;

namespace {
std::string golden(const std::string& name) {
  std::ifstream f(std::string(BRLAB_GOLDEN_DIR) + "/" + name);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}
}  // namespace

TEST_CASE("trace CSV reproduces the (2,2) figure") {
  const auto q = build_quiver_B({2, 2});
  const auto g = golden("trop_B2_l2.csv");
  REQUIRE(!g.empty());
  CHECK(trace_csv(q, run_tropical(q, -6, 4)) == g);
}

TEST_CASE("trace CSV reproduces the (2,3) figures") {
  const auto q = build_quiver_B({2, 3});
  const auto g = golden("trop_B2_l3.csv");
  REQUIRE(!g.empty());
  CHECK(trace_csv(q, run_tropical(q, -4, 4)) == g);
}

TEST_CASE("initial trace is the generators") {
  const auto q = build_quiver_B({3, 2});
  const auto t = run_tropical(q, 0, 2);
  for (int i = 0; i < q.size(); ++i) CHECK(t.at(i, 0) == TropMonomial::generator(q.size(), i));
  CHECK_THROWS(t.at(0, 5));
}

TEST_CASE("sign counts") {
  for (int r = 2; r <= 3; ++r)
    for (int l = 2; l <= 3; ++l) {
      const BrConfig c{r, l};
      const auto q = build_quiver_B(c);
      const auto s = count_signs(q, run_tropical(q, 0, 4 * c.period()));
      CHECK(s.plus == 2L * l * (l * r + l - 1));
      CHECK(s.minus == 2L * r * (2 * l * r - 2 * r + 1));
      CHECK(s.mixed == 0);
      CHECK(s.one == 0);
    }
}

TEST_CASE("regions, boundaries, periodicity and factorization") {
  for (const BrConfig c : {BrConfig{2, 2}, BrConfig{2, 3}, BrConfig{3, 3}}) {
    const auto rep = check_tropical(c);
    CHECK(rep.pass());
    CHECK(rep.records().size() >= 7);
  }
}
