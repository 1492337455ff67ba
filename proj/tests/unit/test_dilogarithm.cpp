#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "brlab/dilogarithm.hpp"

using namespace brlab;

namespace {
double quadrature_L(double x) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return -0.5 * ts.integrate([](double t) { return std::log1p(-t) / t + std::log(t) / (1 - t); }, 0.0, x);
}
const double kPi2 = std::numbers::pi * std::numbers::pi;
}  // namespace

TEST_CASE("Rogers dilogarithm special values") {
  CHECK(rogers_L(0.0) == 0.0);
  CHECK(std::abs(rogers_L(1.0) - kPi2 / 6) < 1e-12);
  CHECK(std::abs(rogers_L(0.5) - kPi2 / 12) < 1e-12);
  // L((3-sqrt5)/2) = pi^2/15
  CHECK(std::abs(rogers_L((3 - std::sqrt(5.0)) / 2) - kPi2 / 15) < 1e-12);
  CHECK_THROWS_AS(rogers_L(-0.1), std::domain_error);
  CHECK_THROWS_AS(rogers_L(1.1), std::domain_error);
}

TEST_CASE("Rogers dilogarithm against quadrature") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.001, 0.999);
  for (int k = 0; k < 50; ++k) {
    const double x = u(rng);
    CAPTURE(x);
    CHECK(std::abs(rogers_L(x) - quadrature_L(x)) < 1e-11);
  }
}

TEST_CASE("five-term relation") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int k = 0; k < 50; ++k) {
    const double x = u(rng), y = u(rng);
    const double s = rogers_L(x) + rogers_L(y) - rogers_L(x * y) - rogers_L(x * (1 - y) / (1 - x * y)) -
                     rogers_L(y * (1 - x) / (1 - x * y));
    CHECK(std::abs(s) < 1e-11);
  }
}

TEST_CASE("central charges") {
  CHECK(central_charge({2, 2}) == doctest::Approx(2.0));
  CHECK(central_charge({3, 2}) == doctest::Approx(3.0));
  CHECK(central_charge({2, 3}) == doctest::Approx(2.0 * (3 * 4 - 3) / 6));
}

TEST_CASE("constant Y-system for (2,2)") {
  const auto sol = solve_constant_Y({2, 2});
  CHECK(sol.residual < 1e-10);
  CHECK(sol.ysystem_residual < 1e-10);
  for (int i = 0; i < sol.Y.size(); ++i) CHECK(sol.Y[i] > 0);
  double s = 0;
  for (int i = 0; i < sol.f.size(); ++i) s += rogers_L(sol.f[i]);
  CHECK(std::abs(6 / kPi2 * s - 2.0) < 1e-10);
  CHECK_THROWS(sol.Y_at(1, 2));
}

TEST_CASE("solver from other starting points") {
  const BrConfig c{3, 3};
  const auto base = solve_constant_Y(c);
  SolverOptions opt;
  opt.start = Eigen::VectorXd::Constant(base.f.size(), 0.05);
  const auto other = solve_constant_Y(c, opt);
  CHECK((base.f - other.f).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("constant and functional identity reports") {
  CHECK(check_constant_DI({3, 4}, 1e-8).pass());
  const auto rep = check_functional_DI({2, 2}, 2, 99, 1e-6);
  CHECK(rep.pass());
}
