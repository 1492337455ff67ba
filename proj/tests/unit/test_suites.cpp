#include <doctest.h>

#include "brlab/suites.hpp"

using namespace brlab;

TEST_CASE("named grids") {
  const auto g = named_grid("default");
  CHECK(g.tropical.size() == 6);
  CHECK(g.dilog_constant.size() == 9);
  CHECK(g.roots == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(g.pairs.size() == 3);
  CHECK_THROWS_AS(named_grid("huge"), std::invalid_argument);
}

TEST_CASE("restriction and pair specs") {
  auto g = named_grid("default");
  restrict_to(g, {3, 2});
  CHECK(g.tropical.size() == 1);
  CHECK(g.roots == std::vector<int>{3});
  CHECK_THROWS(restrict_to(g, {1, 2}));
  CHECK(parse_pair_name("A3:D4") == std::pair<std::string, std::string>{"A3", "D4"});
  CHECK_THROWS(parse_pair_name("A3"));
  CHECK_THROWS(parse_pair_name("A3:B2"));
}

TEST_CASE("reports are deterministic and carry a schema version") {
  const auto g = named_grid("smoke");
  const auto a = run_suite("ysystem", g).to_json();
  const auto b = run_suite("ysystem", g).to_json();
  CHECK(a.dump() == b.dump());
  CHECK(a["schema_version"] == Report::kSchemaVersion);
  CHECK(a["status"] == "pass");
  CHECK(!a["checks"][0].contains("seconds"));
  CHECK(run_suite("roots", g).to_json(true)["checks"][0].contains("seconds"));
  CHECK_THROWS_AS(run_suite("everything", g), std::invalid_argument);
}

TEST_CASE("overall status follows the records") {
  Report r;
  r.add({"a", {}, true, {}, 0.0});
  CHECK(r.pass());
  r.add({"b", {}, false, {}, 0.0});
  CHECK(!r.pass());
  CHECK(r.failures().size() == 1);
  CHECK(Report().pass());
}
