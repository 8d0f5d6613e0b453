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

// File formats.
//
//   state     {"n": int, "coeffs": [[re, im], ...]}
//   angles    {"n": int, "theta": [N-1 floats], "phi": [N floats]}
//   analysis  {"angles": {...}, "residual": f, "restarts": i, "iterations": i,
//              "converged": b, "input_norm": f, "renormalized": b}
//   matrix    {"n": int, "name": s, "rows": [[[re, im], ...], ...]}
//   spectrum  {"n": int, "spectrum": [[re, im], ...], "singular": b}
//   ham input {"omega0": f, "omega1": f, "omega2": f, "lambda": f}
//
// Writers emit fields in the order above, followed by any extra fields, and
// format every float with 17 significant digits so output is byte-stable and
// round-trips exactly. CSV output is a long table `field,row,col,re,im` with
// one record per line; unused columns are left empty.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "qrotor/hamiltonian.hpp"
#include "qrotor/ops.hpp"
#include "qrotor/rotor.hpp"
#include "qrotor/states.hpp"

namespace qrotor::io {

enum class Format { json, csv };

/// A trailing scalar field appended to a written record.
struct Field {
  std::string key;
  std::variant<double, long long, bool> value;
};

/// Largest |norm - 1| accepted silently by the analysis report.
inline constexpr double kRenormalizeThreshold = 1e-6;

/// Formats a finite double with 17 significant digits.
std::string format_double(double v);

Eigen::VectorXcd parse_coefficients(std::string_view text);
StateVector parse_state(std::string_view text,
                        StateVector::Mode mode = StateVector::Mode::normalize);
/// Accepts an angle file or an analysis report (uses its "angles" member).
AngleSet parse_angles(std::string_view text);
CoupledQubitParams parse_hamiltonian_params(std::string_view text);

std::string write_state(const StateVector &s, Format fmt = Format::json,
                        std::span<const Field> extras = {});
std::string write_angles(const AngleSet &a, Format fmt = Format::json);
std::string write_analysis(const AnalysisResult &r, double input_norm,
                           Format fmt = Format::json);
std::string write_matrix(const OperatorMatrix &m, const std::string &name,
                         Format fmt = Format::json, std::span<const Field> extras = {});
std::string write_spectrum(const SingularityReport &r, Format fmt = Format::json);
std::string write_hamiltonian_report(const CoupledQubitParams &p, const SpectrumReport &s,
                                     const std::array<AnalysisResult, 4> &angles,
                                     Format fmt = Format::json);

}  // namespace qrotor::io
