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

#include "qrotor/bitalgebra.hpp"

#include <string>

namespace qrotor {

unsigned qubits_for_length(std::size_t length) {
  if (!is_power_of_two(length)) {
    throw InvalidInput("length " + std::to_string(length) +
                       " is not a power of two");
  }
  return static_cast<unsigned>(std::countr_zero(length));
}

void check_index(std::uint64_t index, unsigned n) {
  if (n >= 64 || index >= (std::uint64_t{1} << n)) {
    throw InvalidInput("group index " + std::to_string(index) +
                       " out of range for " + std::to_string(n) + " qubits");
  }
}

Eigen::VectorXcd fwht(const Eigen::VectorXcd &v) {
  Eigen::VectorXcd out = v;
  fwht_inplace(std::span<cplx>(out.data(), static_cast<std::size_t>(out.size())));
  return out;
}

Eigen::VectorXd fwht(const Eigen::VectorXd &v) {
  Eigen::VectorXd out = v;
  fwht_inplace(std::span<double>(out.data(), static_cast<std::size_t>(out.size())));
  return out;
}

Eigen::VectorXcd fwht_naive(const Eigen::VectorXcd &v) {
  const auto n = static_cast<std::size_t>(v.size());
  if (!is_power_of_two(n)) {
    throw InvalidInput("Walsh-Hadamard transform needs a power-of-two length");
  }
  Eigen::VectorXcd out(v.size());
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      acc += static_cast<double>(parity_sign(l, k)) * v[static_cast<Eigen::Index>(l)];
    }
    out[static_cast<Eigen::Index>(k)] = acc;
  }
  return out;
}

}  // namespace qrotor
