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

#include "qrotor/hamiltonian.hpp"

#include <cmath>

namespace qrotor {

CoupledQubitParams CoupledQubitParams::from_operator_form(double e0, double gamma1,
                                                          double gamma2, double b_field,
                                                          double lambda) {
  CoupledQubitParams p{e0, 0.5 * gamma1 * b_field, 0.5 * gamma2 * b_field, lambda};
  p.validate();
  return p;
}

void CoupledQubitParams::validate() const {
  if (!std::isfinite(omega0) || !std::isfinite(omega1) || !std::isfinite(omega2) ||
      !std::isfinite(lambda)) {
    throw InvalidInput("Hamiltonian parameters must be finite");
  }
}

OperatorMatrix build_hamiltonian(const CoupledQubitParams &p) {
  p.validate();
  const double w0 = p.omega0, w1 = p.omega1, w2 = p.omega2, l = p.lambda;
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(0, 0) = w0 + w1 + w2 + l / 2;
  h(1, 1) = w0 + w1 - w2 - l / 2;
  h(2, 2) = w0 - w1 + w2 - l / 2;
  h(3, 3) = w0 - w1 - w2 + l / 2;
  h(1, 2) = l;
  h(2, 1) = l;
  return OperatorMatrix(h, {.hermitian = true});
}

OperatorMatrix build_hamiltonian_operator_form(double e0, double gamma1, double gamma2,
                                               double b_field, double lambda) {
  const auto id = pauli(0).matrix();
  auto spin = [](int mu) { return OperatorMatrix(0.5 * pauli(mu).matrix()); };
  const OperatorMatrix one(id);
  Eigen::MatrixXcd h = e0 * Eigen::MatrixXcd::Identity(4, 4);
  h += gamma1 * b_field * kron(spin(3), one).matrix();
  h += gamma2 * b_field * kron(one, spin(3)).matrix();
  for (int mu = 1; mu <= 3; ++mu) {
    h += 2.0 * lambda * kron(spin(mu), spin(mu)).matrix();
  }
  return OperatorMatrix(std::move(h), {.hermitian = true});
}

std::array<double, 4> eigenenergies(const CoupledQubitParams &p) {
  p.validate();
  const double r = std::hypot(p.delta(), p.lambda);
  const double centre = p.omega0 - p.lambda / 2;
  return {p.omega0 + p.omega1 + p.omega2 + p.lambda / 2, centre + r, centre - r,
          p.omega0 - p.omega1 - p.omega2 + p.lambda / 2};
}

SpectrumReport eigenstates(const CoupledQubitParams &p) {
  SpectrumReport rep;
  rep.energies = eigenenergies(p);
  rep.delta = p.delta();

  // [[D, l], [l, -D]] = r [[cos b, sin b], [sin b, -cos b]] with
  // b = atan2(l, D): eigenvectors (cos b/2, sin b/2) for +r and
  // (-sin b/2, cos b/2) for -r. atan2(0, 0) = 0 gives the basis pair.
  const double half = 0.5 * std::atan2(p.lambda, rep.delta);
  Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(4);
  Eigen::VectorXcd minus = Eigen::VectorXcd::Zero(4);
  plus[1] = std::cos(half);
  plus[2] = std::sin(half);
  minus[1] = -std::sin(half);
  minus[2] = std::cos(half);

  rep.eigenstates = {basis_state(0, 2), StateVector(plus), StateVector(minus),
                     basis_state(3, 2)};
  return rep;
}

std::array<AnalysisResult, 4> parametrize_eigenstates(const CoupledQubitParams &p,
                                                      const AnalyzeOptions &opts) {
  const SpectrumReport rep = eigenstates(p);
  std::array<AnalysisResult, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = analyze_report(rep.eigenstates[i], opts);
  }
  return out;
}

}  // namespace qrotor
