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

#include "qrotor/ops.hpp"

#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

namespace qrotor {

namespace {

const cplx kI{0.0, 1.0};

Eigen::Index dim_of(unsigned n) { return Eigen::Index{1} << n; }

}  // namespace

void check_dense_qubits(unsigned n) {
  if (n > kMaxDenseQubits) {
    throw InvalidInput("dense operators are limited to " +
                       std::to_string(kMaxDenseQubits) + " qubits, got " +
                       std::to_string(n));
  }
}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd m, Tags tags)
    : m_(std::move(m)), tags_(tags) {
  if (m_.rows() != m_.cols()) {
    throw InvalidInput("operator matrix must be square");
  }
  n_ = qubits_for_length(static_cast<std::size_t>(m_.rows()));
}

bool OperatorMatrix::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool OperatorMatrix::is_unitary(double tol) const {
  return unitarity_error(m_) <= tol;
}

bool OperatorMatrix::tags_consistent(double tol) const {
  if (tags_.hermitian && !is_hermitian(tol)) return false;
  if (tags_.unitary && !is_unitary(tol * static_cast<double>(dim()))) return false;
  return true;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return OperatorMatrix(m_.adjoint(), tags_);
}

OperatorMatrix operator*(const OperatorMatrix &a, const OperatorMatrix &b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("operator dimension mismatch in product");
  }
  OperatorMatrix::Tags tags;
  tags.unitary = a.tags_.unitary && b.tags_.unitary;
  return OperatorMatrix(a.m_ * b.m_, tags);
}

double frobenius_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  return (a - b).norm();
}

double unitarity_error(const Eigen::MatrixXcd &u) {
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).norm();
}

OperatorMatrix pauli(int mu) {
  Eigen::Matrix2cd s;
  switch (mu) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -kI, kI, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default:
      throw InvalidInput("Pauli index must be 0..3, got " + std::to_string(mu));
  }
  return OperatorMatrix(s, {.hermitian = true, .unitary = true});
}

OperatorMatrix kron(const OperatorMatrix &a, const OperatorMatrix &b) {
  check_dense_qubits(a.qubits() + b.qubits());
  const auto &am = a.matrix();
  const auto &bm = b.matrix();
  const Eigen::Index bd = bm.rows();
  Eigen::MatrixXcd out(am.rows() * bd, am.cols() * bd);
  for (Eigen::Index i = 0; i < am.rows(); ++i) {
    for (Eigen::Index j = 0; j < am.cols(); ++j) {
      out.block(i * bd, j * bd, bd, bd) = am(i, j) * bm;
    }
  }
  return OperatorMatrix(std::move(out),
                        {.hermitian = a.tags().hermitian && b.tags().hermitian,
                         .unitary = a.tags().unitary && b.tags().unitary});
}

OperatorMatrix build_b(std::uint64_t l, unsigned n) {
  check_dense_qubits(n);
  check_index(l, n);
  const Eigen::Index dim = dim_of(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    m(static_cast<Eigen::Index>(static_cast<std::uint64_t>(k) ^ l), k) = 1.0;
  }
  return OperatorMatrix(std::move(m), {.hermitian = true, .unitary = true});
}

namespace {

// Tensor product sigma_mu^{lambda_n} (x) ... (x) sigma_mu^{lambda_1}.
OperatorMatrix bit_selected_kron(int mu, std::uint64_t l, unsigned n) {
  check_dense_qubits(n);
  check_index(l, n);
  if (n == 0) {
    return OperatorMatrix(Eigen::MatrixXcd::Identity(1, 1),
                          {.hermitian = true, .unitary = true});
  }
  OperatorMatrix acc = pauli(((l >> (n - 1)) & 1) ? mu : 0);
  for (unsigned j = n - 1; j-- > 0;) {
    acc = kron(acc, pauli(((l >> j) & 1) ? mu : 0));
  }
  return acc;
}

}  // namespace

OperatorMatrix build_b_kron(std::uint64_t l, unsigned n) {
  return bit_selected_kron(1, l, n);
}

OperatorMatrix build_z(std::uint64_t l, unsigned n) {
  check_dense_qubits(n);
  check_index(l, n);
  const Eigen::Index dim = dim_of(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    m(k, k) = static_cast<double>(parity_sign(l, static_cast<std::uint64_t>(k)));
  }
  return OperatorMatrix(std::move(m), {.hermitian = true, .unitary = true});
}

OperatorMatrix build_z_kron(std::uint64_t l, unsigned n) {
  return bit_selected_kron(3, l, n);
}

OperatorMatrix build_projector(unsigned n) {
  if (n < 1) throw InvalidInput("projector needs at least one qubit");
  check_dense_qubits(n);
  const Eigen::Index dim = dim_of(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(0, 0) = 1.0;
  return OperatorMatrix(std::move(m), {.hermitian = true});
}

OperatorMatrix build_e(unsigned m, unsigned n) {
  if (m < 1 || m > n) {
    throw InvalidInput("Clifford generator index must be in 1.." +
                       std::to_string(n) + ", got " + std::to_string(m));
  }
  const std::uint64_t a = std::uint64_t{1} << (m - 1);
  OperatorMatrix e = build_b(a, n) * build_z(a - 1, n);
  return OperatorMatrix(e.matrix(), {.hermitian = true, .unitary = true});
}

BasisChoice BasisChoice::plain(unsigned n) {
  const std::size_t dim = std::size_t{1} << n;
  BasisChoice b;
  b.kind = Kind::plain;
  b.n = n;
  b.phase_map.assign(dim, 1.0);
  b.z_map.assign(dim, 0);
  return b;
}

BasisChoice BasisChoice::clifford(unsigned n, std::vector<cplx> phases) {
  const std::size_t dim = std::size_t{1} << n;
  if (phases.empty()) phases.assign(dim, 1.0);
  if (phases.size() != dim) {
    throw InvalidInput("Clifford basis needs one phase per basis element");
  }
  BasisChoice b;
  b.kind = Kind::clifford;
  b.n = n;
  b.phase_map.resize(dim);
  b.z_map.resize(dim);
  for (std::uint64_t l = 0; l < dim; ++l) {
    // Right-multiply by e_m for each set bit, m ascending, using
    // z(w) b(a) = parity_sign(w, a) b(a) z(w).
    int sign = 1;
    std::uint64_t acc_z = 0;
    for (unsigned m = 1; m <= n; ++m) {
      const std::uint64_t a = std::uint64_t{1} << (m - 1);
      if (!(l & a)) continue;
      sign *= parity_sign(acc_z, a);
      acc_z ^= a - 1;
    }
    b.phase_map[l] = static_cast<double>(sign) * phases[l];
    b.z_map[l] = acc_z;
  }
  return b;
}

BasisChoice BasisChoice::antihermitian_cl2() {
  return clifford(2, {1.0, kI, kI, 1.0});
}

BasisChoice BasisChoice::custom(unsigned n, std::vector<cplx> phases,
                                std::vector<std::uint64_t> z_map) {
  BasisChoice b;
  b.kind = Kind::custom;
  b.n = n;
  b.phase_map = std::move(phases);
  b.z_map = std::move(z_map);
  b.validate();
  return b;
}

void BasisChoice::validate(double tol) const {
  const std::size_t dim = std::size_t{1} << n;
  if (phase_map.size() != dim || z_map.size() != dim) {
    throw InvalidInput("basis maps must have 2^n entries");
  }
  for (std::size_t l = 0; l < dim; ++l) {
    if (std::abs(std::abs(phase_map[l]) - 1.0) > tol) {
      throw InvalidInput("basis phase for l=" + std::to_string(l) +
                         " is not unimodular");
    }
    check_index(z_map[l], n);
  }
}

OperatorMatrix basis_operator(std::uint64_t l, const BasisChoice &basis) {
  basis.validate();
  check_index(l, basis.n);
  OperatorMatrix bz = build_b(l, basis.n) * build_z(basis.z_map[l], basis.n);
  return OperatorMatrix(basis.phase_map[l] * bz.matrix(), {.unitary = true});
}

OperatorMatrix group_element(const Eigen::VectorXcd &c, const BasisChoice &basis) {
  basis.validate();
  check_dense_qubits(basis.n);
  const Eigen::Index dim = dim_of(basis.n);
  if (c.size() != dim) {
    throw InvalidInput("coefficient vector length " + std::to_string(c.size()) +
                       " does not match basis dimension " + std::to_string(dim));
  }
  // Entry (j, k) collects l = j ^ k: c_l * phase_l * parity_sign(L_l, k).
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto l = static_cast<std::uint64_t>(j ^ k);
      m(j, k) = c[static_cast<Eigen::Index>(l)] * basis.phase_map[l] *
                static_cast<double>(parity_sign(basis.z_map[l],
                                                static_cast<std::uint64_t>(k)));
    }
  }
  return OperatorMatrix(std::move(m));
}

SingularityReport walsh_spectrum_singularity(const Eigen::VectorXcd &c,
                                             double rel_tol) {
  const unsigned n = qubits_for_length(static_cast<std::size_t>(c.size()));
  if (n > kMaxVectorQubits) throw InvalidInput("coefficient vector too long");
  if (!(rel_tol > 0.0)) throw InvalidInput("singularity tolerance must be positive");
  SingularityReport report;
  report.spectrum = fwht(c);
  const Eigen::VectorXd mags = report.spectrum.cwiseAbs();
  const double largest = mags.maxCoeff();
  if (largest == 0.0) {
    throw InvalidInput("degenerate input: all coefficients are zero");
  }
  report.singular = mags.minCoeff() < rel_tol * largest;
  return report;
}

OperatorMatrix expm_hermitian_oracle(const OperatorMatrix &h, double t) {
  if (!h.is_hermitian(1e-10)) {
    throw InvalidInput("exponential oracle needs a hermitian generator");
  }
  const Eigen::MatrixXcd herm = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
  if (eig.info() != Eigen::Success) {
    throw InvariantViolation("hermitian eigendecomposition failed");
  }
  const Eigen::VectorXcd phases =
      (eig.eigenvalues().cast<cplx>() * cplx(0.0, -t)).array().exp();
  Eigen::MatrixXcd u =
      eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  return OperatorMatrix(std::move(u), {.unitary = true});
}

std::string operator_name(const std::string &family, std::uint64_t index) {
  if (family == "P") return "P";
  return family + "(" + std::to_string(index) + ")";
}

}  // namespace qrotor
