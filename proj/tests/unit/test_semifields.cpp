#include <doctest.h>

#include "brlab/semifield.hpp"
#include "properties.hpp"

using namespace brlab;

TEST_CASE("tropical monomials") {
  const TropMonomial a{{1, -2, 0}}, b{{0, 1, -1}};
  CHECK(trop_add(a, b) == TropMonomial{{0, -2, -1}});
  CHECK(trop_mul(a, b) == TropMonomial{{1, -1, -1}});
  CHECK(trop_inv(a) == TropMonomial{{-1, 2, 0}});
  CHECK(trop_pow(b, 3) == TropMonomial{{0, 3, -3}});
  CHECK(classify_sign(TropMonomial{{1, 0, 2}}) == SignClass::Positive);
  CHECK(classify_sign(TropMonomial{{0, -1, 0}}) == SignClass::Negative);
  CHECK(classify_sign(a) == SignClass::Mixed);
  CHECK(classify_sign(TropMonomial::one(3)) == SignClass::One);
  CHECK(positive_part(a) == TropMonomial{{1, 0, 0}});
  CHECK(negative_part(a) == TropMonomial{{0, 2, 0}});
  CHECK_THROWS(trop_add(a, TropMonomial::one(2)));
}

TEST_CASE("positive rationals") {
  CHECK_THROWS(PosRational(mpq_class(0)));
  CHECK_THROWS(PosRational(mpq_class(-1, 2)));
  const PosRational p(1, 2), q(2, 3);
  CHECK((p + q).value() == mpq_class(7, 6));
  CHECK((p * q).value() == mpq_class(1, 3));
  CHECK(p.inverse().value() == 2);
}

TEST_CASE("subtraction-free rational functions") {
  const auto y = CoeffPoly::generator(1, 0), one = CoeffPoly::one(1);
  const auto a = (one + y) * (one + y).inverse();
  CHECK(a == one);
  const auto b = y * (one + y).inverse();
  CHECK(b.evaluate({mpq_class(2)}) == mpq_class(2, 3));
  CHECK(b + (one + y).inverse() == one);
}

TEST_CASE("runtime semifield dispatch") {
  CHECK(parse_semifield_tag("tropical") == SemifieldTag::tropical);
  CHECK_THROWS(parse_semifield_tag("boolean"));
  const auto ops = semifield_ops("positive_rational");
  const SemifieldElement a = PosRational(1, 2), b = PosRational(1, 3);
  CHECK(ops.equal(ops.add(a, b), SemifieldElement(PosRational(5, 6))));
  CHECK(ops.equal(ops.mul(a, ops.inv(a)), ops.one(0)));
}

TEST_CASE("semifield axioms on random elements") {
  const auto res = brlab::testing::semifield_axioms(2000, 11);
  CHECK(res.cases == 2000);
  CHECK(res.failures == 0);
}
