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

// Two coupled spin-1/2 systems (hbar = 1):
//
//   H = E0 + gamma1 s1.B (x) 1 + 1 (x) gamma2 s2.B + 2 lambda s1.s2,
//
// in the product basis {|0>, |1>, |2>, |3>} = {++, +-, -+, --}. With B along z
// this is
//
//   diag(w++ + l/2, w+- - l/2, w-+ - l/2, w-- + l/2) + l (|1><2| + |2><1|),
//
// where w+- = omega0 + omega1 - omega2 etc. |0> and |3> are eigenstates; the
// {|1>, |2>} block is (omega0 - l/2) + [[D, l], [l, -D]] with D = omega1 - omega2.

#include <array>

#include "qrotor/ops.hpp"
#include "qrotor/rotor.hpp"
#include "qrotor/states.hpp"

namespace qrotor {

struct CoupledQubitParams {
  double omega0 = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double lambda = 0.0;

  /// Parameters of the operator form with the field along z:
  /// omega0 = E0, omega1 = gamma1 B / 2, omega2 = gamma2 B / 2.
  static CoupledQubitParams from_operator_form(double e0, double gamma1, double gamma2,
                                               double b_field, double lambda);

  double delta() const noexcept { return omega1 - omega2; }
  void validate() const;
};

/// Eigen-decomposition in the fixed labeling (++, mixed+, mixed-, --);
/// energies are not sorted numerically.
struct SpectrumReport {
  std::array<double, 4> energies{};
  std::array<StateVector, 4> eigenstates;
  double delta = 0.0;
};

OperatorMatrix build_hamiltonian(const CoupledQubitParams &p);

/// Dense matrix of the operator form, built from Pauli Kronecker products.
OperatorMatrix build_hamiltonian_operator_form(double e0, double gamma1, double gamma2,
                                               double b_field, double lambda);

/// Closed form: {w++ + l/2, omega0 - l/2 + r, omega0 - l/2 - r, w-- + l/2},
/// r = sqrt(D^2 + l^2).
std::array<double, 4> eigenenergies(const CoupledQubitParams &p);

/// |0> and |3> unchanged; the mixed pair diagonalizes the 2 x 2 block. With
/// D = l = 0 the pair is {|1>, |2>}.
SpectrumReport eigenstates(const CoupledQubitParams &p);

/// Rotor angles for each eigenstate, in SpectrumReport order.
std::array<AnalysisResult, 4> parametrize_eigenstates(const CoupledQubitParams &p,
                                                      const AnalyzeOptions &opts = {});

}  // namespace qrotor
