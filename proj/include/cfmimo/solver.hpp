// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 cfmimo authors
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace cfm {

/// Convex QCQP block subproblem: minimize sum_k v_k^H quad_k v_k
/// - 2 Re{linear_k^H v_k} subject to, for every block (AP) m,
///   sum_k ||v_k[block m]||^2 <= power_cap and
///   sum_k theta(m,k) ||v_k[block m]||^2 <= weighted_cap.
template <typename Scalar>
struct QcqpProblemT {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  std::vector<Mat> quad;    // per user, Hermitian PSD
  std::vector<Vec> linear;  // per user
  std::vector<std::vector<int>> blocks;  // per block: coordinate indices
  Eigen::MatrixXd theta;    // blocks x users, positive weights
  double power_cap = 1.0;
  double weighted_cap = 1.0;
  bool nonneg = false;      // real form: sign-fix the solution

  int num_users() const { return static_cast<int>(quad.size()); }
  int num_blocks() const { return static_cast<int>(blocks.size()); }
  int dim() const { return quad.empty() ? 0 : static_cast<int>(quad[0].rows()); }
};

template <typename Scalar>
struct QcqpSolutionT {
  std::vector<typename QcqpProblemT<Scalar>::Vec> variables;
  double objective = 0.0;
  Eigen::VectorXd lambda;  // power-constraint multipliers
  Eigen::VectorXd mu;      // weighted-constraint multipliers
  double kkt = 0.0;
  int iterations = 0;
  bool converged = false;
};

using QcqpProblem = QcqpProblemT<std::complex<double>>;
using QcqpSolution = QcqpSolutionT<std::complex<double>>;
using QcqpProblemReal = QcqpProblemT<double>;
using QcqpSolutionReal = QcqpSolutionT<double>;

struct QcqpOptions {
  double tol = 1e-6;
  int max_iter = 500;
  Eigen::VectorXd lambda0;  // optional warm starts
  Eigen::VectorXd mu0;
};

/// Dual decomposition: closed-form regularized per-user solves with the
/// multipliers driven by projected gradient ascent (Armijo) plus a cyclic
/// per-constraint bisection polish. Returns the best feasible iterate when
/// the iteration budget runs out (flagged non-converged).
template <typename Scalar>
QcqpSolutionT<Scalar> solve_qcqp(const QcqpProblemT<Scalar>& problem,
                                 const QcqpOptions& opts = {});

template <typename Scalar>
QcqpSolutionT<Scalar> solve_qcqp(const QcqpProblemT<Scalar>& problem,
                                 double tol, int max_iter);

/// Max of the normalized stationarity, primal/dual feasibility and
/// complementary slackness residuals.
template <typename Scalar>
double kkt_residual(const QcqpProblemT<Scalar>& problem,
                    const QcqpSolutionT<Scalar>& solution);

/// Objective of the problem at a given point (no feasibility check).
template <typename Scalar>
double qcqp_objective(const QcqpProblemT<Scalar>& problem,
                      const std::vector<typename QcqpProblemT<Scalar>::Vec>& v);

/// Structured text dump/load for offline cross-checking.
void dump_qcqp(const QcqpProblem& problem, const std::string& path);
void dump_qcqp(const QcqpProblemReal& problem, const std::string& path);
QcqpProblem load_qcqp(const std::string& path);
QcqpProblemReal load_qcqp_real(const std::string& path);

}  // namespace cfm
