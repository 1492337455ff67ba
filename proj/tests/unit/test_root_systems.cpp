#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "brlab/root_systems.hpp"

using namespace brlab;

TEST_CASE("almost positive roots") {
  CHECK_THROWS(AlmostPositiveRoot({1, 0, 1}));
  CHECK_THROWS(AlmostPositiveRoot({-1, -1, 0}));
  CHECK_THROWS(AlmostPositiveRoot({0, 0, 0}));
  CHECK(AlmostPositiveRoot::interval(4, 2, 3).to_string() == "[2,3]");
  CHECK(AlmostPositiveRoot::simple(4, 2).to_string() == "[2]");
  CHECK(AlmostPositiveRoot::negative_simple(4, 2).to_string() == "-a2");
  for (int n = 1; n <= 6; ++n) CHECK(positive_roots(n).size() == static_cast<std::size_t>(n * (n + 1) / 2));
}

TEST_CASE("reflections act on coefficient vectors") {
  CHECK(reflect({1, 0, 0}, 2) == std::vector<int>{1, 1, 0});
  CHECK(reflect({0, 1, 0}, 2) == std::vector<int>{0, -1, 0});
  const auto a = AlmostPositiveRoot::negative_simple(3, 1);
  CHECK(sigma_i(a, 1) == AlmostPositiveRoot::simple(3, 1));
  CHECK(sigma_i(a, 2) == a);
}

TEST_CASE("sigma is a bijection of Phi_{>=-1}") {
  for (int r = 2; r <= 6; ++r) {
    const int n = 2 * r - 1;
    std::vector<AlmostPositiveRoot> all = positive_roots(n);
    for (int j = 1; j <= n; ++j) all.push_back(AlmostPositiveRoot::negative_simple(n, j));
    std::set<AlmostPositiveRoot> img;
    for (const auto& a : all) {
      const auto b = sigma(r, a);
      CHECK(sigma_pow(r, a, 2) == sigma(r, b));
      img.insert(b);
    }
    CHECK(img.size() == all.size());
  }
}

TEST_CASE("level 2, r = 2: six negatives over one period") {
  // -alpha_i(u) for i != r, u in the J-parity grid, hits each positive root of A3 once
  std::set<AlmostPositiveRoot> hit;
  for (int i = 1; i <= 3; ++i)
    for (int u2 = -6; u2 < 4; ++u2)
      if (auto a = alpha_of(2, i, u2); a && a->is_positive()) hit.insert(*a);
  CHECK(hit.size() == 6);
}

TEST_CASE("orbit table matches the golden text for r = 6") {
  std::ifstream f(std::string(BRLAB_GOLDEN_DIR) + "/orbits_r6.txt");
  std::ostringstream os;
  os << f.rdbuf();
  REQUIRE(!os.str().empty());
  CHECK(orbit_table_text(6) == os.str());
}

TEST_CASE("rho and the Coxeter element") {
  for (int r = 2; r <= 6; ++r) {
    CHECK(check_rho(r).pass);
    for (const auto& a : rho_domain(r)) CHECK(rho_inverse(r, rho(r, a)) == a);
  }
  CHECK_THROWS(rho(3, AlmostPositiveRoot::simple(5, 3)));
}

TEST_CASE("full root checks for r = 2..6") {
  for (int r = 2; r <= 6; ++r) {
    CAPTURE(r);
    CHECK(check_roots(r).pass());
  }
}
