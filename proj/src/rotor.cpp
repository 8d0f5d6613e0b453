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

#include "qrotor/rotor.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qrotor {

namespace {

void check_angle_vector(const Eigen::VectorXd &v, const char *what) {
  if (!v.allFinite()) throw InvalidInput(std::string(what) + " must be finite");
}

double reduce_angle(double a) {
  constexpr double four_pi = 4.0 * std::numbers::pi;
  double r = std::fmod(a, four_pi);  // (-4 pi, 4 pi)
  if (r <= -2.0 * std::numbers::pi) r += four_pi;
  if (r > 2.0 * std::numbers::pi) r -= four_pi;
  return r;
}

}  // namespace

AngleSet::AngleSet(Eigen::VectorXd theta, Eigen::VectorXd phi)
    : theta_(std::move(theta)), phi_(std::move(phi)) {
  n_ = qubits_for_length(static_cast<std::size_t>(phi_.size()));
  if (n_ > kMaxVectorQubits) throw InvalidInput("angle set has too many qubits");
  if (theta_.size() != phi_.size() - 1) {
    throw InvalidInput("expected " + std::to_string(phi_.size() - 1) +
                       " polar angles for " + std::to_string(phi_.size()) +
                       " azimuthal angles, got " + std::to_string(theta_.size()));
  }
  check_angle_vector(theta_, "polar angles");
  check_angle_vector(phi_, "azimuthal angles");
}

AngleSet AngleSet::zeros(unsigned n) {
  if (n > kMaxVectorQubits) throw InvalidInput("angle set has too many qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  return AngleSet(Eigen::VectorXd::Zero(dim - 1), Eigen::VectorXd::Zero(dim));
}

Eigen::VectorXd AngleSet::theta_with_identity() const {
  Eigen::VectorXd t(dim());
  t[0] = 0.0;
  t.tail(theta_.size()) = theta_;
  return t;
}

AngleSet AngleSet::reduced() const {
  return AngleSet(theta_.unaryExpr(&reduce_angle), phi_.unaryExpr(&reduce_angle));
}

PhaseVector phases_from_phi(const Eigen::VectorXd &phi) {
  qubits_for_length(static_cast<std::size_t>(phi.size()));
  return {fwht(phi)};
}

Eigen::VectorXd phi_from_phases(const PhaseVector &phases) {
  qubits_for_length(static_cast<std::size_t>(phases.alpha.size()));
  return fwht(phases.alpha) / static_cast<double>(phases.alpha.size());
}

Eigen::VectorXcd polar_coefficients(const Eigen::VectorXd &theta) {
  const Eigen::Index dim = theta.size() + 1;
  if (!is_power_of_two(static_cast<std::size_t>(dim))) {
    throw InvalidInput("polar angle count must be 2^n - 1, got " +
                       std::to_string(theta.size()));
  }
  Eigen::VectorXd full(dim);
  full[0] = 0.0;
  full.tail(theta.size()) = theta;
  const Eigen::VectorXd eig = fwht(full);  // eigenvalues of sum theta_l b(l)
  Eigen::VectorXcd u(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    u[k] = std::polar(1.0, -0.5 * eig[k]);
  }
  fwht_inplace(std::span<cplx>(u.data(), static_cast<std::size_t>(dim)));
  return u / static_cast<double>(dim);
}

namespace {

Eigen::VectorXcd azimuthal_diagonal(const Eigen::VectorXd &phi) {
  const Eigen::VectorXd alpha = phases_from_phi(phi).alpha;
  Eigen::VectorXcd diag(alpha.size());
  for (Eigen::Index k = 0; k < alpha.size(); ++k) {
    diag[k] = std::polar(1.0, -0.5 * alpha[k]);
  }
  return diag;
}

}  // namespace

StateVector synthesize(const AngleSet &angles) {
  Eigen::VectorXcd d = polar_coefficients(angles.theta())
                           .cwiseProduct(azimuthal_diagonal(angles.phi()));
  // Unit norm up to rounding; renormalize away the last few ulps.
  return StateVector(std::move(d), StateVector::Mode::normalize);
}

OperatorMatrix rotor_matrix(const AngleSet &angles) {
  check_dense_qubits(angles.qubits());
  const Eigen::Index dim = angles.dim();
  // W diag(u) W / N is the group-algebra element sum_l c_l b(l), whose
  // (j, k) entry is c_{j ^ k}; the azimuthal factor scales row j.
  const Eigen::VectorXcd c = polar_coefficients(angles.theta());
  const Eigen::VectorXcd z = azimuthal_diagonal(angles.phi());
  Eigen::MatrixXcd r(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      r(j, k) = z[j] * c[j ^ k];
    }
  }
  return OperatorMatrix(std::move(r), {.unitary = true});
}

OperatorMatrix rotor_matrix_oracle(const AngleSet &angles) {
  const unsigned n = angles.qubits();
  check_dense_qubits(n);
  const Eigen::Index dim = angles.dim();
  Eigen::MatrixXcd gz = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd gb = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index l = 0; l < dim; ++l) {
    gz += angles.phi()[l] * build_z(static_cast<std::uint64_t>(l), n).matrix();
    if (l > 0) {
      gb += angles.theta()[l - 1] * build_b(static_cast<std::uint64_t>(l), n).matrix();
    }
  }
  const OperatorMatrix hz(std::move(gz), {.hermitian = true});
  const OperatorMatrix hb(std::move(gb), {.hermitian = true});
  return expm_hermitian_oracle(hz, 0.5) * expm_hermitian_oracle(hb, 0.5);
}

EulerAngles euler_single_qubit(cplx c0, cplx c1) {
  const double a0 = std::abs(c0);
  const double a1 = std::abs(c1);
  if (std::abs(a0 * a0 + a1 * a1 - 1.0) > StateVector::kNormTolerance) {
    throw InvalidInput("single-qubit spinor is not normalized");
  }
  constexpr double pole_tol = 1e-15;
  EulerAngles e;
  e.theta = 2.0 * std::atan2(a1, a0);
  if (a0 <= pole_tol) {
    // c1 = -exp(-i chi / 2) with phi = 0.
    e.chi = -2.0 * std::arg(-c1);
    return e;
  }
  const double arg0 = std::arg(c0);
  if (a1 > pole_tol) {
    e.phi = std::arg(-c1 * std::conj(c0));
  }
  e.chi = -e.phi - 2.0 * arg0;
  return e;
}

Eigen::Vector2cd euler_spinor(const EulerAngles &e) {
  const double c = std::cos(0.5 * e.theta);
  const double s = std::sin(0.5 * e.theta);
  return {std::polar(c, -0.5 * (e.phi + e.chi)),
          -std::polar(s, 0.5 * (e.phi - e.chi))};
}

}  // namespace qrotor
