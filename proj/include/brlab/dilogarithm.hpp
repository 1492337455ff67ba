#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "brlab/br_systems.hpp"
#include "brlab/report.hpp"

namespace brlab {

// L(x) = Li2(x) + (1/2) log x log(1-x) on [0,1]; throws std::domain_error outside.
double rogers_L(double x);

// K^{mk}_{ab} = (a_a|a_b)(min(t_b m, t_a k) - mk/l), (a_a|a_a) = 2 for a < r, 1 for a = r.
struct KMatrix {
  BrConfig cfg;
  std::vector<std::pair<int, int>> index;  // (a, m)
  std::vector<std::vector<mpq_class>> k;

  int size() const { return static_cast<int>(index.size()); }
  bool symmetric() const;
  // exact leading principal minors
  std::vector<mpq_class> leading_minors() const;
  bool positive_definite() const;
  Eigen::MatrixXd to_double() const;
};

KMatrix build_K(const BrConfig& cfg);

struct ConstantYSolution {
  BrConfig cfg;
  std::vector<std::pair<int, int>> index;
  Eigen::VectorXd f;  // Y / (1 + Y)
  Eigen::VectorXd Y;
  int iterations = 0;
  bool newton_used = false;
  double residual = 0.0;           // max |f - prod (1-f)^K|
  double ysystem_residual = 0.0;   // max relative defect of the constant Y-system

  double Y_at(int a, int m) const;
};

struct SolverOptions {
  double tol = 1e-12;
  double damping = 0.5;
  int max_iterations = 100000;
  std::optional<Eigen::VectorXd> start;  // initial f in (0,1)^N, default all 1/2
};

// Damped iteration on log f with adaptive damping, then Newton on logit f if needed.
// Throws std::runtime_error on non-convergence.
ConstantYSolution solve_constant_Y(const BrConfig& cfg, const SolverOptions& opt = {});

// max_{(a,m)} |Y^2 / rhs - 1| for the constant Y-system.
double constant_Y_residual(const BrConfig& cfg, const std::vector<std::pair<int, int>>& index, const Eigen::VectorXd& Y);

// r(l h - h^v)/(h^v + l)
double central_charge(const BrConfig& cfg);

Report check_constant_DI(const BrConfig& cfg, double tol);

// Functional identities from `samples` pairs of random positive rational initial points.
// Each walk yields a solution on I'_{l+}; two independent walks together cover I_l.
Report check_functional_DI(const BrConfig& cfg, int samples, std::uint64_t seed, double tol);

}  // namespace brlab
