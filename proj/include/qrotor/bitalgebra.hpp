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

// Index arithmetic over (Z_2)^n and the Walsh-Hadamard kernel.
//
// Bit j-1 of a group index (j = 1..n) selects the operator in tensor slot j,
// counted from the right: the least significant bit is the rightmost factor.

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "qrotor/errors.hpp"

namespace qrotor {

using cplx = std::complex<double>;

/// Largest qubit count accepted by the vector-only paths.
inline constexpr unsigned kMaxVectorQubits = 24;

inline bool is_power_of_two(std::size_t v) noexcept {
  return v != 0 && (v & (v - 1)) == 0;
}

/// log2 of a power-of-two length; throws InvalidInput otherwise.
unsigned qubits_for_length(std::size_t length);

/// Checks that `index` is a valid group element for `n` qubits.
void check_index(std::uint64_t index, unsigned n);

/// (-1)^popcount(l & k): the Walsh character of k evaluated at l.
inline int parity_sign(std::uint64_t l, std::uint64_t k) noexcept {
  return (std::popcount(l & k) & 1) ? -1 : 1;
}

/// In-place unnormalized butterfly. Length must be a power of two.
template <class T>
void fwht_inplace(std::span<T> v) {
  const std::size_t n = v.size();
  if (!is_power_of_two(n)) {
    throw InvalidInput("Walsh-Hadamard transform needs a power-of-two length");
  }
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      T *lo = v.data() + block;
      T *hi = lo + half;
      for (std::size_t j = 0; j < half; ++j) {
        const T a = lo[j];
        const T b = hi[j];
        lo[j] = a + b;
        hi[j] = a - b;
      }
    }
  }
}

/// X_k = sum_l parity_sign(l, k) v_l, computed in O(N log N).
Eigen::VectorXcd fwht(const Eigen::VectorXcd &v);
Eigen::VectorXd fwht(const Eigen::VectorXd &v);

/// Same transform by the O(N^2) double sum. Reference for testing.
Eigen::VectorXcd fwht_naive(const Eigen::VectorXcd &v);

}  // namespace qrotor
