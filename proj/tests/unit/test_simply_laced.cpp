#include <doctest.h>

#include "brlab/simply_laced.hpp"

using namespace brlab;

TEST_CASE("Dynkin data") {
  const auto a3 = DynkinDiagram::parse("A3");
  CHECK(a3.h == 4);
  CHECK(a3.omega == std::vector<int>{2, 1, 0});
  CHECK(a3.sign == std::vector<int>{1, -1, 1});
  const auto d4 = DynkinDiagram::parse("D4");
  CHECK(d4.h == 6);
  CHECK(d4.omega == std::vector<int>{0, 1, 2, 3});
  CHECK(d4.adjacent(1, 3));
  CHECK(d4.adjacent(1, 2));
  const auto d5 = DynkinDiagram::parse("D5");
  CHECK(d5.omega == std::vector<int>{0, 1, 2, 4, 3});
  const auto e6 = DynkinDiagram::parse("E6");
  CHECK(e6.h == 12);
  CHECK(e6.adjacent(1, 3));
  CHECK(e6.omega == std::vector<int>{5, 1, 4, 3, 2, 0});
  CHECK(DynkinDiagram::parse("E8").h == 30);
  for (const char* bad : {"B2", "A0", "D3", "E9", "A", "A2x"}) CHECK_THROWS_AS(DynkinDiagram::parse(bad), std::invalid_argument);
}

TEST_CASE("pair exchange matrices are skew-symmetric") {
  const std::vector<std::string> names{"A1", "A2", "A3", "A4", "A5", "D4", "D5"};
  for (const auto& x : names)
    for (const auto& y : names) {
      const auto b = build_pair_matrix(DynkinDiagram::parse(x), DynkinDiagram::parse(y));
      CHECK(b.is_skew_symmetric());
    }
}

TEST_CASE("pair schedule") {
  const auto ps = build_pair(DynkinDiagram::parse("A2"), DynkinDiagram::parse("A1"));
  CHECK(ps.size() == 2);
  CHECK(ps.period() == 5);
  CHECK(ps.even_batch.size() + ps.odd_batch.size() == 2);
  for (int k = 0; k < ps.size(); ++k) CHECK(ps.mutated_at(k, 0) != ps.mutated_at(k, 1));
}

TEST_CASE("(A2,A1) full period 10 in every mode") {
  const auto ps = build_pair(DynkinDiagram::parse("A2"), DynkinDiagram::parse("A1"));
  for (auto m : {PairMode::tropical, PairMode::laurent, PairMode::rational}) {
    CAPTURE(pair_mode_name(m));
    CHECK(run_pair_systems(ps, m, 1).pass());
    const auto rep = check_pair_periodicity(ps, m, 1);
    CHECK(rep.pass());
    CHECK(rep.records().back().details["first_return_u"] == 10);
  }
}

TEST_CASE("larger pairs") {
  for (auto [x, y] : {std::pair{"A3", "A2"}, std::pair{"D4", "A1"}, std::pair{"D5", "A2"}, std::pair{"E6", "A1"}}) {
    const auto ps = build_pair(DynkinDiagram::parse(x), DynkinDiagram::parse(y));
    CAPTURE(ps.name());
    CHECK(run_pair_systems(ps, PairMode::tropical, 1).pass());
    CHECK(check_pair_periodicity(ps, PairMode::tropical, 1).pass());
    CHECK(check_pair_periodicity(ps, PairMode::rational, 2).pass());
  }
}

TEST_CASE("mode names") {
  CHECK(parse_pair_mode("rational") == PairMode::rational);
  CHECK(pair_mode_name(PairMode::laurent) == "laurent");
  CHECK_THROWS(parse_pair_mode("complex"));
}
