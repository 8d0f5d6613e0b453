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

// Dense constructions of the operator families acting on n qubits: Pauli
// matrices, Kronecker products, the XOR-permutation family b(l), its diagonal
// partner z(l), the reference projector, Clifford generators and general
// b(l) z(L_l) bases.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qrotor/bitalgebra.hpp"

namespace qrotor {

/// Dense matrices are limited to 1024 x 1024.
inline constexpr unsigned kMaxDenseQubits = 10;

void check_dense_qubits(unsigned n);

/// Structural claims attached to an OperatorMatrix by its constructor.
struct OperatorTags {
  bool hermitian = false;
  bool unitary = false;
};

/// Dense 2^n x 2^n complex operator with structural tags.
///
/// The tags are set by the constructing routine and are only claims;
/// `tags_consistent` verifies them against the entries.
class OperatorMatrix {
 public:
  using Tags = OperatorTags;

  OperatorMatrix() = default;
  /// `m` must be square with power-of-two dimension.
  explicit OperatorMatrix(Eigen::MatrixXcd m, Tags tags = {});

  unsigned qubits() const noexcept { return n_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Eigen::MatrixXcd &matrix() const noexcept { return m_; }
  cplx operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }
  const Tags &tags() const noexcept { return tags_; }

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;
  bool tags_consistent(double tol = 1e-12) const;

  OperatorMatrix adjoint() const;
  friend OperatorMatrix operator*(const OperatorMatrix &a,
                                  const OperatorMatrix &b);

 private:
  unsigned n_ = 0;
  Eigen::MatrixXcd m_;
  Tags tags_;
};

/// Frobenius norm of a - b.
double frobenius_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// ||U^dagger U - I||_F.
double unitarity_error(const Eigen::MatrixXcd &u);

/// sigma_0 = identity, sigma_1..3 the Pauli matrices.
OperatorMatrix pauli(int mu);

OperatorMatrix kron(const OperatorMatrix &a, const OperatorMatrix &b);

/// XOR permutation: entry (j, k) is 1 iff j == k ^ l.
OperatorMatrix build_b(std::uint64_t l, unsigned n);

/// Same operator assembled as a Kronecker product of sigma_1 / identity
/// factors. Slower; kept as an independent construction route.
OperatorMatrix build_b_kron(std::uint64_t l, unsigned n);

/// Diagonal with entry (k, k) = parity_sign(l, k).
OperatorMatrix build_z(std::uint64_t l, unsigned n);

/// sigma_3 analogue of build_b_kron.
OperatorMatrix build_z_kron(std::uint64_t l, unsigned n);

/// P = P3 (x) ... (x) P3, the matrix unit at (0, 0).
OperatorMatrix build_projector(unsigned n);

/// Clifford generator e_m = b(2^(m-1)) z(2^(m-1) - 1), 1 <= m <= n.
OperatorMatrix build_e(unsigned m, unsigned n);

/// A basis of the form B(l) = phase_l * b(l) z(L_l).
///
/// Since z(L) P = P, every such basis generates the same basis states
/// B(l) P = phase_l * b(l) P; only the operators (and therefore which linear
/// combinations are invertible) differ.
struct BasisChoice {
  enum class Kind { plain, clifford, custom };

  Kind kind = Kind::plain;
  unsigned n = 0;
  std::vector<cplx> phase_map;          // unimodular, one per l
  std::vector<std::uint64_t> z_map;     // L_l, one per l

  /// phase 1, L_l = 0: B(l) = b(l).
  static BasisChoice plain(unsigned n);

  /// Ordered products e_{m1} e_{m2} ... (m ascending over the set bits of l),
  /// each multiplied by `phases[l]` (default all 1). Signs produced by
  /// reordering are folded into phase_map.
  static BasisChoice clifford(unsigned n, std::vector<cplx> phases = {});

  /// Two-qubit Clifford basis whose non-identity elements are antihermitian:
  /// {1, i e1, i e2, e1 e2}.
  static BasisChoice antihermitian_cl2();

  static BasisChoice custom(unsigned n, std::vector<cplx> phases,
                            std::vector<std::uint64_t> z_map);

  /// Throws InvalidInput unless sizes match, phases are unimodular within
  /// `tol` and every L_l is in range.
  void validate(double tol = 1e-12) const;
};

/// B(l) as a dense matrix.
OperatorMatrix basis_operator(std::uint64_t l, const BasisChoice &basis);

/// sum_l c_l B(l). For the plain basis the first column is c itself.
OperatorMatrix group_element(const Eigen::VectorXcd &c, const BasisChoice &basis);

struct SingularityReport {
  Eigen::VectorXcd spectrum;  // fwht(c): eigenvalues of sum_l c_l b(l)
  bool singular = false;
};

/// Default relative threshold against the largest Walsh coefficient.
inline constexpr double kSingularityRelTol = 1e-12;

/// Eigenvalues of the plain group element via the Walsh transform, and
/// whether any of them vanishes relative to the largest. Works for any n up
/// to kMaxVectorQubits. An all-zero c is rejected.
SingularityReport walsh_spectrum_singularity(const Eigen::VectorXcd &c,
                                             double rel_tol = kSingularityRelTol);

/// exp(-i t H) through a full eigendecomposition. H must be hermitian to
/// within 1e-10.
OperatorMatrix expm_hermitian_oracle(const OperatorMatrix &h, double t);

/// Short display name such as "b(3)" or "P".
std::string operator_name(const std::string &family, std::uint64_t index);

}  // namespace qrotor
