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

#include <cstdint>

#include <Eigen/Dense>

#include "qrotor/bitalgebra.hpp"
#include "qrotor/ops.hpp"

namespace qrotor {

/// Normalized n-qubit state psi = sum_l c_l b(l) psi_0, stored as the
/// coefficient vector c in index order.
///
/// Equality is componentwise: the global phase is one of the parameters.
class StateVector {
 public:
  enum class Mode {
    normalize,  // rescale any nonzero input to unit norm
    exact,      // reject input whose squared norm is off by more than 1e-9
  };

  static constexpr double kNormTolerance = 1e-9;

  StateVector() = default;
  explicit StateVector(Eigen::VectorXcd coeffs, Mode mode = Mode::normalize);

  unsigned qubits() const noexcept { return n_; }
  Eigen::Index dim() const noexcept { return c_.size(); }
  const Eigen::VectorXcd &coeffs() const noexcept { return c_; }
  cplx operator[](Eigen::Index l) const { return c_[l]; }

  /// Euclidean norm of the coefficients as supplied, before normalization.
  double input_norm() const noexcept { return input_norm_; }

 private:
  unsigned n_ = 0;
  Eigen::VectorXcd c_;
  double input_norm_ = 1.0;
};

/// |l> = b(l) psi_0.
StateVector basis_state(std::uint64_t l, unsigned n);

/// (|0> + sign |3>) / sqrt(2) on two qubits.
StateVector bell_state(int sign);

/// <b|a> = sum_l conj(b_l) a_l.
cplx inner(const StateVector &a, const StateVector &b);

/// Matrix of a state inside the minimal left ideal: the state vector in the
/// first column, zeros elsewhere (psi = (sum_l c_l b(l)) P).
OperatorMatrix ideal_matrix(const StateVector &s);

/// The same inner product evaluated algebraically as N <a b^dagger>_0, with
/// the scalar part realized as trace / N.
cplx inner_trace_form(const StateVector &a, const StateVector &b);

/// max_l |a_l - b_l|; throws on dimension mismatch.
double max_abs_difference(const StateVector &a, const StateVector &b);

bool approx_equal(const StateVector &a, const StateVector &b, double tol = 1e-9);

}  // namespace qrotor
