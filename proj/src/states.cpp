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

#include "qrotor/states.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qrotor {

StateVector::StateVector(Eigen::VectorXcd coeffs, Mode mode) : c_(std::move(coeffs)) {
  n_ = qubits_for_length(static_cast<std::size_t>(c_.size()));
  if (n_ > kMaxVectorQubits) throw InvalidInput("state has too many qubits");
  if (!c_.allFinite()) throw InvalidInput("state coefficients must be finite");
  input_norm_ = c_.norm();
  if (input_norm_ == 0.0) throw InvalidInput("state coefficients are all zero");
  if (mode == Mode::exact) {
    if (std::abs(c_.squaredNorm() - 1.0) > kNormTolerance) {
      throw InvalidInput("state is not normalized (norm " +
                         std::to_string(input_norm_) + ")");
    }
    return;
  }
  c_ /= input_norm_;
}

StateVector basis_state(std::uint64_t l, unsigned n) {
  if (n > kMaxVectorQubits) throw InvalidInput("state has too many qubits");
  check_index(l, n);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  c[static_cast<Eigen::Index>(l)] = 1.0;
  return StateVector(std::move(c), StateVector::Mode::exact);
}

StateVector bell_state(int sign) {
  if (sign != 1 && sign != -1) throw InvalidInput("Bell state sign must be +1 or -1");
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(4);
  c[0] = h;
  c[3] = sign * h;
  return StateVector(std::move(c), StateVector::Mode::exact);
}

namespace {

void check_same_dim(const StateVector &a, const StateVector &b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("state dimension mismatch: " + std::to_string(a.dim()) +
                       " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

cplx inner(const StateVector &a, const StateVector &b) {
  check_same_dim(a, b);
  return b.coeffs().dot(a.coeffs());  // Eigen's dot conjugates the left side
}

OperatorMatrix ideal_matrix(const StateVector &s) {
  check_dense_qubits(s.qubits());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
  m.col(0) = s.coeffs();
  return OperatorMatrix(std::move(m));
}

cplx inner_trace_form(const StateVector &a, const StateVector &b) {
  check_same_dim(a, b);
  const Eigen::MatrixXcd prod = ideal_matrix(a).matrix() * ideal_matrix(b).matrix().adjoint();
  const double dim = static_cast<double>(a.dim());
  const cplx scalar_part = prod.trace() / dim;
  return dim * scalar_part;
}

double max_abs_difference(const StateVector &a, const StateVector &b) {
  check_same_dim(a, b);
  return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff();
}

bool approx_equal(const StateVector &a, const StateVector &b, double tol) {
  return a.dim() == b.dim() && max_abs_difference(a, b) <= tol;
}

}  // namespace qrotor
