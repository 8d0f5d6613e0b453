// Copyright 2026 The qrotor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "qrotor/rotor.hpp"

namespace qrotor {

MagnitudeObjective::MagnitudeObjective(Eigen::VectorXd target_sq)
    : target_sq_(std::move(target_sq)) {
  qubits_for_length(static_cast<std::size_t>(target_sq_.size()));
}

Eigen::VectorXd MagnitudeObjective::residuals(const Eigen::VectorXd &theta) const {
  if (theta.size() != dim() - 1) throw InvalidInput("wrong number of polar angles");
  return polar_coefficients(theta).cwiseAbs2() - target_sq_;
}

double MagnitudeObjective::value(const Eigen::VectorXd &theta) const {
  return residuals(theta).squaredNorm();
}

Eigen::MatrixXd MagnitudeObjective::jacobian_from_coefficients(const Eigen::VectorXcd &c) {
  // c = W u / N with u_k = exp(-i/2 sum_m theta_m s(m, k)), so
  //   dc_l/dtheta_m = (1/N) sum_k s(l, k) (-i/2) s(m, k) u_k = -(i/2) c_{l ^ m}
  // because s(l, k) s(m, k) = s(l ^ m, k). Then
  //   d|c_l|^2/dtheta_m = 2 Re(conj(c_l) dc_l/dtheta_m) = Im(conj(c_l) c_{l ^ m}).
  const Eigen::Index dim = c.size();
  Eigen::MatrixXd j(dim, dim - 1);
  for (Eigen::Index m = 1; m < dim; ++m) {
    for (Eigen::Index l = 0; l < dim; ++l) {
      j(l, m - 1) = (std::conj(c[l]) * c[l ^ m]).imag();
    }
  }
  return j;
}

Eigen::MatrixXd MagnitudeObjective::jacobian(const Eigen::VectorXd &theta) const {
  if (theta.size() != dim() - 1) throw InvalidInput("wrong number of polar angles");
  return jacobian_from_coefficients(polar_coefficients(theta));
}

Eigen::VectorXd MagnitudeObjective::gradient(const Eigen::VectorXd &theta) const {
  const Eigen::VectorXcd c = polar_coefficients(theta);
  const Eigen::VectorXd r = c.cwiseAbs2() - target_sq_;
  return 2.0 * jacobian_from_coefficients(c).transpose() * r;
}

void AnalyzeOptions::validate() const {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (!(zero_tol > 0.0)) throw InvalidInput("zero tolerance must be positive");
  if (max_restarts < 0) throw InvalidInput("max_restarts must be non-negative");
  if (max_iterations < 1) throw InvalidInput("max_iterations must be positive");
}

namespace {

std::string failure_message(const AnalysisResult &r) {
  std::ostringstream os;
  os << "analysis did not converge: residual " << r.residual << " after "
     << r.restarts << " restarts (" << r.iterations << " iterations)";
  return os.str();
}

struct FitOutcome {
  Eigen::VectorXd theta;
  Eigen::VectorXcd coeffs;
  double magnitude_error = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

double magnitude_error(const Eigen::VectorXcd &c, const Eigen::VectorXd &target_abs) {
  return (c.cwiseAbs() - target_abs).cwiseAbs().maxCoeff();
}

// Levenberg-Marquardt on r(theta) = |c(theta)|^2 - |d|^2 with Marquardt
// diagonal scaling. Stops once every magnitude is within `goal`, or when the
// fit stalls in a local minimum.
FitOutcome fit_magnitudes(Eigen::VectorXd theta, const Eigen::VectorXd &target_sq,
                          const Eigen::VectorXd &target_abs, double goal,
                          int max_iterations) {
  constexpr double mu_max = 1e12;
  constexpr int stall_window = 10;

  FitOutcome out;
  Eigen::VectorXcd c = polar_coefficients(theta);
  Eigen::VectorXd r = c.cwiseAbs2() - target_sq;
  double f = r.squaredNorm();
  double mu = 1e-3;
  double f_window_start = f;
  int since_window = 0;

  int it = 0;
  for (; it < max_iterations; ++it) {
    if (magnitude_error(c, target_abs) <= goal) break;
    const Eigen::MatrixXd jac = MagnitudeObjective::jacobian_from_coefficients(c);
    const Eigen::MatrixXd a = jac.transpose() * jac;
    const Eigen::VectorXd g = jac.transpose() * r;
    const Eigen::VectorXd scale = a.diagonal().array() + 1e-12;

    bool accepted = false;
    while (mu <= mu_max) {
      Eigen::MatrixXd damped = a;
      damped.diagonal() += mu * scale;
      const Eigen::VectorXd step = damped.ldlt().solve(-g);
      const Eigen::VectorXd trial = theta + step;
      const Eigen::VectorXcd c_trial = polar_coefficients(trial);
      const Eigen::VectorXd r_trial = c_trial.cwiseAbs2() - target_sq;
      const double f_trial = r_trial.squaredNorm();
      if (step.allFinite() && f_trial < f) {
        theta = trial;
        c = c_trial;
        r = r_trial;
        f = f_trial;
        mu = std::max(mu / 3.0, 1e-15);
        accepted = true;
        break;
      }
      mu *= 4.0;
    }
    if (!accepted) break;

    // Zero targets converge only linearly (the residual is quadratic in c_l
    // there), so "stalled" means almost no progress over a whole window.
    if (++since_window == stall_window) {
      if (f > 0.9 * f_window_start && f > 1e-28) break;
      f_window_start = f;
      since_window = 0;
    }
  }
  out.theta = std::move(theta);
  out.coeffs = std::move(c);
  out.magnitude_error = magnitude_error(out.coeffs, target_abs);
  out.iterations = it;
  return out;
}

AnalysisResult finish(const StateVector &target, const FitOutcome &fit,
                      const AnalyzeOptions &opts) {
  const Eigen::Index dim = target.dim();
  PhaseVector phases{Eigen::VectorXd::Zero(dim)};
  for (Eigen::Index l = 0; l < dim; ++l) {
    if (std::abs(target[l]) >= opts.zero_tol) {
      phases.alpha[l] = 2.0 * (std::arg(fit.coeffs[l]) - std::arg(target[l]));
    }
  }
  AnalysisResult res;
  res.angles = AngleSet(fit.theta, phi_from_phases(phases));
  if (opts.reduce_angles) res.angles = res.angles.reduced();
  res.residual = max_abs_difference(synthesize(res.angles), target);
  res.converged = res.residual <= opts.tol;
  return res;
}

}  // namespace

ConvergenceFailure::ConvergenceFailure(AnalysisResult best)
    : Error(ErrorCode::convergence_failure, failure_message(best)),
      best_(std::move(best)) {}

AnalysisResult analyze_report(const StateVector &target, const AnalyzeOptions &opts) {
  opts.validate();
  const Eigen::Index dim = target.dim();
  const Eigen::VectorXd target_abs = target.coeffs().cwiseAbs();
  const Eigen::VectorXd target_sq = target_abs.cwiseAbs2();
  // Leave headroom for the phase step and renormalization.
  const double goal = 0.25 * opts.tol;

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

  AnalysisResult best;
  best.residual = std::numeric_limits<double>::infinity();
  int total_iterations = 0;
  int restarts = 0;

  for (int start = 0; start <= opts.max_restarts; ++start) {
    Eigen::VectorXd theta0(dim - 1);
    if (start == 0) {
      for (Eigen::Index l = 1; l < dim; ++l) {
        theta0[l - 1] = 2.0 * std::asin(std::min(1.0, target_abs[l]));
      }
    } else {
      for (Eigen::Index l = 0; l < dim - 1; ++l) theta0[l] = angle(rng);
    }
    const FitOutcome fit =
        fit_magnitudes(std::move(theta0), target_sq, target_abs, goal, opts.max_iterations);
    total_iterations += fit.iterations;

    restarts = start;
    AnalysisResult res = finish(target, fit, opts);
    if (res.residual < best.residual) best = std::move(res);
    if (best.converged) break;
  }
  best.restarts = restarts;
  best.iterations = total_iterations;
  return best;
}

AngleSet analyze(const StateVector &target, const AnalyzeOptions &opts) {
  AnalysisResult res = analyze_report(target, opts);
  if (!res.converged) throw ConvergenceFailure(std::move(res));
  return std::move(res.angles);
}

OperatorMatrix transform(const StateVector &a, const StateVector &b,
                         const AnalyzeOptions &opts) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("transform endpoints have different dimensions");
  }
  check_dense_qubits(a.qubits());
  const OperatorMatrix ra = rotor_matrix(analyze(a, opts));
  const OperatorMatrix rb = rotor_matrix(analyze(b, opts));
  return rb * ra.adjoint();
}

}  // namespace qrotor
