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

#pragma once

// Rotor parametrization of n-qubit states.
//
// A state is psi = R psi_0 with
//
//   R = exp(-i/2 sum_l phi_l z(l)) exp(-i/2 sum_{l>=1} theta_l b(l)),
//
// N - 1 polar angles theta_l and N azimuthal angles phi_l, 2N - 1 in total.
// Both families are simultaneously diagonalized by the Walsh-Hadamard
// transform W, so everything here runs on length-N vectors:
//
//   exp(-i/2 sum theta b) = sum_l c_l b(l),  c = W u / N,  u_k = exp(-i/2 (W theta~)_k)
//   exp(-i/2 sum phi z) b(l) P = exp(-i alpha_l / 2) b(l) P,  alpha = W phi
//
// where theta~ = (0, theta_1, ..., theta_{N-1}).

#include <cstdint>
#include <optional>
#include <stdexcept>

#include <Eigen/Dense>

#include "qrotor/ops.hpp"
#include "qrotor/states.hpp"

namespace qrotor {

/// Polar angles theta_1..theta_{N-1} and azimuthal angles phi_0..phi_{N-1}.
/// theta_0 is identically zero and not stored.
class AngleSet {
 public:
  AngleSet() = default;
  AngleSet(Eigen::VectorXd theta, Eigen::VectorXd phi);

  /// All-zero angles for n qubits: the identity rotor.
  static AngleSet zeros(unsigned n);

  unsigned qubits() const noexcept { return n_; }
  Eigen::Index dim() const noexcept { return phi_.size(); }
  /// 2^(n+1) - 1.
  Eigen::Index parameter_count() const noexcept { return theta_.size() + phi_.size(); }

  /// theta_l for l = 1..N-1, stored at index l - 1.
  const Eigen::VectorXd &theta() const noexcept { return theta_; }
  const Eigen::VectorXd &phi() const noexcept { return phi_; }

  /// (0, theta_1, ..., theta_{N-1}).
  Eigen::VectorXd theta_with_identity() const;

  /// Copy with every angle mapped into (-2 pi, 2 pi]. Spinor-level rotors
  /// are 4 pi periodic in each angle, so the synthesized state is unchanged.
  AngleSet reduced() const;

 private:
  unsigned n_ = 0;
  Eigen::VectorXd theta_;
  Eigen::VectorXd phi_;
};

/// Coefficient phases alpha = W phi.
struct PhaseVector {
  Eigen::VectorXd alpha;
};

PhaseVector phases_from_phi(const Eigen::VectorXd &phi);
Eigen::VectorXd phi_from_phases(const PhaseVector &phases);

/// Coefficients c_l of exp(-i/2 sum_l theta_l b(l)) = sum_l c_l b(l).
/// `theta` holds theta_1..theta_{N-1}.
Eigen::VectorXcd polar_coefficients(const Eigen::VectorXd &theta);

/// psi = R psi_0. O(N log N); works up to kMaxVectorQubits.
StateVector synthesize(const AngleSet &angles);

/// Dense R from the Walsh-diagonal forms of both factors. n <= 10.
OperatorMatrix rotor_matrix(const AngleSet &angles);

/// Dense R from two hermitian eigendecompositions. Verification path.
OperatorMatrix rotor_matrix_oracle(const AngleSet &angles);

/// Euler angles of a single-qubit spinor
///   (c0, c1) = exp(-i phi s3 / 2) exp(-s13 theta / 2) exp(-i chi s3 / 2) P3,
/// s13 = s1 s3. With these factors,
///   c0 = exp(-i (phi + chi) / 2) cos(theta / 2),
///   c1 = -exp(i (phi - chi) / 2) sin(theta / 2),
/// so phi = arg(c1) - arg(c0) - pi and chi = -phi - 2 arg(c0). At a pole the
/// free angle phi is set to 0.
struct EulerAngles {
  double phi = 0.0;
  double theta = 0.0;
  double chi = 0.0;
};

EulerAngles euler_single_qubit(cplx c0, cplx c1);

/// Spinor produced by the three Euler factors (closed form).
Eigen::Vector2cd euler_spinor(const EulerAngles &e);

/// Least-squares objective for the polar angles:
///   f(theta) = sum_l (|c_l(theta)|^2 - |d_l|^2)^2.
class MagnitudeObjective {
 public:
  /// `target_sq` holds |d_l|^2.
  explicit MagnitudeObjective(Eigen::VectorXd target_sq);

  Eigen::Index dim() const noexcept { return target_sq_.size(); }
  const Eigen::VectorXd &target_sq() const noexcept { return target_sq_; }

  /// r_l = |c_l|^2 - |d_l|^2, length N.
  Eigen::VectorXd residuals(const Eigen::VectorXd &theta) const;
  double value(const Eigen::VectorXd &theta) const;

  /// dr_l / dtheta_m, N x (N - 1).
  Eigen::MatrixXd jacobian(const Eigen::VectorXd &theta) const;
  /// Same Jacobian from already computed coefficients c(theta).
  static Eigen::MatrixXd jacobian_from_coefficients(const Eigen::VectorXcd &c);

  /// grad f = 2 J^T r.
  Eigen::VectorXd gradient(const Eigen::VectorXd &theta) const;

 private:
  Eigen::VectorXd target_sq_;
};

struct AnalyzeOptions {
  double tol = 1e-9;        // componentwise resynthesis tolerance
  double zero_tol = 1e-12;  // |d_l| below this has no defined phase
  int max_restarts = 32;
  int max_iterations = 300;  // per start
  std::uint64_t seed = 0;
  bool reduce_angles = false;  // map output into (-2 pi, 2 pi]

  void validate() const;
};

struct AnalysisResult {
  AngleSet angles;
  double residual = 0.0;  // max_l |synthesize(angles)_l - d_l|
  int restarts = 0;       // restarts used beyond the initial guess
  int iterations = 0;     // total optimizer iterations over all starts
  bool converged = false;
};

/// Raised by `analyze` when no start reached the tolerance.
class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(AnalysisResult best);
  const AnalysisResult &best() const noexcept { return best_; }

 private:
  AnalysisResult best_;
};

/// Inverse problem: angles whose synthesis reproduces `target`.
///
/// Polar angles come from a damped Gauss-Newton (Levenberg-Marquardt) fit of
/// the squared magnitudes, starting from theta_l = 2 asin|d_l| and then from
/// seeded random points. Coefficient phases are then matched exactly through
/// alpha and phi = W alpha / N. Never throws on non-convergence; check
/// `converged`.
AnalysisResult analyze_report(const StateVector &target, const AnalyzeOptions &opts = {});

/// As `analyze_report` but throws ConvergenceFailure unless converged.
AngleSet analyze(const StateVector &target, const AnalyzeOptions &opts = {});

/// U = R(analyze(b)) R(analyze(a))^dagger, so that U a = b.
OperatorMatrix transform(const StateVector &a, const StateVector &b,
                         const AnalyzeOptions &opts = {});

}  // namespace qrotor
