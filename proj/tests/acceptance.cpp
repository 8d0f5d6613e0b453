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


// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qrotor/bitalgebra.hpp"
#include "qrotor/hamiltonian.hpp"
#include "qrotor/ops.hpp"
#include "qrotor/rotor.hpp"
#include "qrotor/states.hpp"
#include "reference.hpp"

namespace {

using namespace qrotor;
namespace ref = qrotor::testing;
using ref::I;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Eigen::MatrixXcd exact(std::initializer_list<std::initializer_list<int>> rows) {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto &row : rows) {
    Eigen::Index c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// Two-qubit targets are reachable iff |H u| / 4 = |d| for some unimodular u
// (H the 4x4 Walsh matrix, u_0 = 1 without loss of generality). Branch and
// bound over the three free phases: on a cube of half-width w each entry of
// |H u| / 4 moves by at most 3w/4. Returns true only when every cube is
// excluded, i.e. the target is certified unreachable.
bool two_qubit_unreachable(const Eigen::VectorXcd &d) {
  const Eigen::Vector4d a = d.cwiseAbs();
  auto gap = [&](double p1, double p2, double p3) {
    const auto u1 = std::polar(1.0, p1), u2 = std::polar(1.0, p2), u3 = std::polar(1.0, p3);
    const double e0 = std::abs(std::abs(1.0 + u1 + u2 + u3) / 4 - a[0]);
    const double e1 = std::abs(std::abs(1.0 - u1 + u2 - u3) / 4 - a[1]);
    const double e2 = std::abs(std::abs(1.0 + u1 - u2 - u3) / 4 - a[2]);
    const double e3 = std::abs(std::abs(1.0 - u1 - u2 + u3) / 4 - a[3]);
    return std::max(std::max(e0, e1), std::max(e2, e3));
  };
  struct Cube {
    double c[3];
    double w;
  };
  std::vector<Cube> stack;
  const int split = 16;
  const double w0 = M_PI / split;
  for (int i = 0; i < split; ++i) {
    for (int j = 0; j < split; ++j) {
      for (int k = 0; k < split; ++k) {
        stack.push_back({{(2 * i + 1) * w0, (2 * j + 1) * w0, (2 * k + 1) * w0}, w0});
      }
    }
  }
  long budget = 4'000'000;
  while (!stack.empty()) {
    if (--budget < 0) return false;
    const Cube q = stack.back();
    stack.pop_back();
    const double g = gap(q.c[0], q.c[1], q.c[2]);
    if (g < 1e-9) return false;  // a feasible phase choice
    if (g > 0.75 * q.w) continue;
    const double h = q.w / 2;
    for (int m = 0; m < 8; ++m) {
      stack.push_back({{q.c[0] + ((m & 1) ? h : -h), q.c[1] + ((m & 2) ? h : -h),
                        q.c[2] + ((m & 4) ? h : -h)},
                       h});
    }
  }
  return true;
}

// 1. 2^(n+1) - 1 real angles.
Outcome parameter_count() {
  Outcome o;
  std::mt19937_64 rng(101);
  for (unsigned n = 1; n <= 6; ++n) {
    const Eigen::Index want = (Eigen::Index{2} << n) - 1;
    const AngleSet zeros = AngleSet::zeros(n);
    AnalyzeOptions opts;
    opts.max_restarts = 0;
    const auto r = analyze_report(StateVector(ref::random_state(rng, n)), opts);
    const Eigen::Index got = r.angles.theta().size() + r.angles.phi().size();
    if (zeros.parameter_count() != want || r.angles.parameter_count() != want || got != want) {
      o.pass = false;
      o.detail += "n=" + std::to_string(n) + " got " + std::to_string(got) + "; ";
    }
  }
  if (o.pass) o.detail = "3, 7, 15, 31, 63, 127 for n = 1..6";
  return o;
}

// 2. synthesize(analyze(d)) = d for random normalized d.
Outcome reachability() {
  Outcome o;
  const int per_n = 500;
  const auto t0 = Clock::now();
  std::ostringstream os;
  for (unsigned n = 1; n <= 6; ++n) {
    std::mt19937_64 rng(200 + n);
    int failures = 0, unreachable = 0;
    for (int t = 0; t < per_n; ++t) {
      const StateVector d(ref::random_state(rng, n));
      const auto r = analyze_report(d);
      const double err = max_abs_difference(synthesize(r.angles), d);
      if (!r.converged || !(err < 1e-9)) {
        ++failures;
        if (n == 2 && two_qubit_unreachable(d.coeffs())) ++unreachable;
      }
    }
    const int allowed = n <= 4 ? 0 : per_n / 100;
    if (failures > allowed) o.pass = false;
    os << "n=" << n << ": " << failures << "/" << per_n << " failed (allowed " << allowed
       << (n == 2 ? ", " + std::to_string(unreachable) + " provably unreachable" : "")
       << "); ";
  }
  // The certificate must never fire on a target that is reachable by construction.
  std::mt19937_64 rng(299);
  for (int t = 0; t < 2; ++t) {
    const AngleSet a(ref::random_angles(rng, 3), ref::random_angles(rng, 4));
    if (two_qubit_unreachable(synthesize(a).coeffs())) {
      o.pass = false;
      os << "unreachability certificate fired on a synthesized state; ";
    }
  }
  os << "runtime " << fmt(seconds_since(t0)) << " s";
  o.detail = os.str();
  return o;
}

// 3. exp(-i b theta / 2) = cos(theta/2) I - i sin(theta/2) b.
Outcome single_factor_identity() {
  std::mt19937_64 rng(301);
  double worst = 0.0;
  for (unsigned n = 1; n <= 4; ++n) {
    const Eigen::Index N = Eigen::Index{1} << n;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(N, N);
    for (std::uint64_t l = 0; l < static_cast<std::uint64_t>(N); ++l) {
      const Eigen::MatrixXcd b = build_b(l, n).matrix();
      const Eigen::VectorXd thetas = ref::random_angles(rng, 20, 2 * M_PI);
      for (double th : thetas) {
        const Eigen::MatrixXcd closed = std::cos(th / 2) * id - I * std::sin(th / 2) * b;
        const Eigen::MatrixXcd dense = ref::expm(Eigen::MatrixXcd(-0.5 * I * th * ref::ref_b(l, n)));
        worst = std::max(worst, ref::frob(closed, dense));
      }
    }
  }
  return {worst < 1e-10, "max Frobenius error " + fmt(worst) + " (limit 1e-10)"};
}

// 4. Product of commuting factors equals the exponential of the sum.
Outcome product_to_sum() {
  std::mt19937_64 rng(401);
  double worst_b = 0.0, worst_z = 0.0;
  for (unsigned n = 1; n <= 4; ++n) {
    const Eigen::Index N = Eigen::Index{1} << n;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(N, N);
    for (int t = 0; t < 10; ++t) {
      const Eigen::VectorXd th = ref::random_angles(rng, N - 1, 2 * M_PI);
      const Eigen::VectorXd ph = ref::random_angles(rng, N, 2 * M_PI);
      Eigen::MatrixXcd prod_b = id, sum_b = Eigen::MatrixXcd::Zero(N, N);
      for (Eigen::Index l = 1; l < N; ++l) {
        const Eigen::MatrixXcd b = build_b(static_cast<std::uint64_t>(l), n).matrix();
        prod_b = prod_b * (std::cos(th[l - 1] / 2) * id - I * std::sin(th[l - 1] / 2) * b);
        sum_b += th[l - 1] * ref::ref_b(static_cast<std::uint64_t>(l), n);
      }
      const Eigen::MatrixXcd exp_b = ref::expm(Eigen::MatrixXcd(-0.5 * I * sum_b));
      worst_b = std::max(worst_b, ref::frob(prod_b, exp_b));
      const AngleSet polar(th, Eigen::VectorXd::Zero(N));
      worst_b = std::max(worst_b, ref::frob(rotor_matrix(polar).matrix(), exp_b));

      Eigen::MatrixXcd prod_z = id, sum_z = Eigen::MatrixXcd::Zero(N, N);
      for (Eigen::Index l = 0; l < N; ++l) {
        const Eigen::MatrixXcd z = build_z(static_cast<std::uint64_t>(l), n).matrix();
        prod_z = prod_z * (std::cos(ph[l] / 2) * id - I * std::sin(ph[l] / 2) * z);
        sum_z += ph[l] * ref::ref_z(static_cast<std::uint64_t>(l), n);
      }
      const Eigen::MatrixXcd exp_z = ref::expm(Eigen::MatrixXcd(-0.5 * I * sum_z));
      worst_z = std::max(worst_z, ref::frob(prod_z, exp_z));
      const AngleSet azimuthal(Eigen::VectorXd::Zero(N - 1), ph);
      worst_z = std::max(worst_z, ref::frob(rotor_matrix(azimuthal).matrix(), exp_z));
    }
  }
  return {worst_b < 1e-10 && worst_z < 1e-10,
          "b-family " + fmt(worst_b) + ", z-family " + fmt(worst_z) + " (limit 1e-10)"};
}

// 5. Printed two-qubit matrices and first-column extraction.
Outcome printed_matrices() {
  Outcome o;
  const bool b1 = build_b(1, 2).matrix() ==
                  exact({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  const bool b2 = build_b(2, 2).matrix() ==
                  exact({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  const bool b3 = build_b(3, 2).matrix() ==
                  exact({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  const bool p = build_projector(2).matrix() ==
                 exact({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  std::mt19937_64 rng(501);
  bool pattern = true, column = true;
  const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  for (int t = 0; t < 100; ++t) {
    const Eigen::VectorXcd c = ref::random_complex(rng, 4);
    const Eigen::MatrixXcd g = group_element(c, BasisChoice::plain(2)).matrix();
    for (int r = 0; r < 4; ++r) {
      for (int k = 0; k < 4; ++k) pattern = pattern && g(r, k) == c[idx[r][k]];
    }
    Eigen::MatrixXcd first = Eigen::MatrixXcd::Zero(4, 4);
    first.col(0) = c;
    column = column && (g * build_projector(2).matrix() - first).cwiseAbs().maxCoeff() == 0.0;
  }
  o.pass = b1 && b2 && b3 && p && pattern && column;
  o.detail = std::string("b(1) ") + (b1 ? "ok" : "MISMATCH") + ", b(2) " + (b2 ? "ok" : "MISMATCH") +
             ", b(3) " + (b3 ? "ok" : "MISMATCH") + ", P " + (p ? "ok" : "MISMATCH") +
             ", symmetric pattern " + (pattern ? "ok" : "MISMATCH") + ", first column " +
             (column ? "ok" : "MISMATCH");
  return o;
}

// 6. Closed-form two-qubit coefficients on a theta grid.
Outcome coefficient_expansion() {
  const int g = 20;
  double worst = 0.0;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      for (int k = 0; k < g; ++k) {
        Eigen::VectorXd th(3);
        th << -2 * M_PI + 4 * M_PI * i / (g - 1), -2 * M_PI + 4 * M_PI * j / (g - 1),
            -2 * M_PI + 4 * M_PI * k / (g - 1);
        const double c1 = std::cos(th[0] / 2), c2 = std::cos(th[1] / 2), c3 = std::cos(th[2] / 2);
        const double s1 = std::sin(th[0] / 2), s2 = std::sin(th[1] / 2), s3 = std::sin(th[2] / 2);
        Eigen::VectorXcd expect(4);
        expect << c1 * c2 * c3 + I * s1 * s2 * s3, -I * (s1 * c2 * c3 - I * c1 * s2 * s3),
            -I * (s2 * c3 * c1 - I * c2 * s3 * s1), -I * (s3 * c1 * c2 - I * c3 * s1 * s2);
        worst = std::max(worst, (polar_coefficients(th) - expect).cwiseAbs().maxCoeff());
      }
    }
  }
  return {worst < 1e-12, "max error " + fmt(worst) + " over 8000 grid points (limit 1e-12)"};
}

// 7. alpha = sign matrix * phi and its inverse.
Outcome phase_system() {
  const int signs[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  bool patterns = true;
  for (int k = 0; k < 4; ++k) {
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(4);
    phi[k] = 1.0;
    const auto alpha = phases_from_phi(phi).alpha;
    for (int l = 0; l < 4; ++l) patterns = patterns && alpha[l] == signs[l][k];
  }
  std::mt19937_64 rng(701);
  double worst = 0.0;
  for (unsigned n = 0; n <= 6; ++n) {
    for (int t = 0; t < 20; ++t) {
      const Eigen::VectorXd phi = ref::random_angles(rng, Eigen::Index{1} << n);
      worst = std::max(worst,
                       (phi_from_phases(phases_from_phi(phi)) - phi).cwiseAbs().maxCoeff());
    }
  }
  return {patterns && worst < 1e-12, std::string("sign patterns ") +
                                         (patterns ? "exact" : "MISMATCH") +
                                         ", round-trip error " + fmt(worst) + " (limit 1e-12)"};
}

// 8. Singularity flag vs dense determinant.
Outcome singularity() {
  Eigen::VectorXcd plus(4), minus(4);
  plus << M_SQRT1_2, 0, 0, M_SQRT1_2;
  minus << M_SQRT1_2, 0, 0, -M_SQRT1_2;
  const bool bell = walsh_spectrum_singularity(plus).singular &&
                    walsh_spectrum_singularity(minus).singular;
  std::mt19937_64 rng(801);
  std::uniform_int_distribution<unsigned> pick_n(2, 4);
  int disagreements = 0, planted = 0;
  for (int t = 0; t < 1000; ++t) {
    const unsigned n = pick_n(rng);
    const Eigen::Index N = Eigen::Index{1} << n;
    Eigen::VectorXcd c;
    if (t % 2 == 0) {
      // Zero one Walsh component so the combination is singular.
      Eigen::VectorXcd w = ref::random_complex(rng, N);
      w[static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(N))] = 0.0;
      c = fwht_naive(w) / static_cast<double>(N);
      ++planted;
    } else {
      c = ref::random_complex(rng, N);
    }
    c /= c.norm();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
    for (Eigen::Index l = 0; l < N; ++l) m += c[l] * ref::ref_b(static_cast<std::uint64_t>(l), n);
    const bool dense = std::abs(m.determinant()) < 1e-10;
    if (dense != walsh_spectrum_singularity(c).singular) ++disagreements;
  }
  return {bell && disagreements == 0,
          std::string("Bell states ") + (bell ? "singular" : "NOT FLAGGED") + ", " +
              std::to_string(disagreements) + " disagreements in 1000 draws (" +
              std::to_string(planted) + " planted singular)"};
}

// 9. Antihermitian two-qubit Clifford basis.
Outcome antihermitian_basis() {
  const auto basis = BasisChoice::antihermitian_cl2();
  Eigen::VectorXcd bell(4);
  bell << M_SQRT1_2, 0, 0, M_SQRT1_2;
  const double uerr = unitarity_error(group_element(bell, basis).matrix());
  std::mt19937_64 rng(901);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Eigen::VectorXcd c = ref::random_complex(rng, 4);
    Eigen::MatrixXcd expect(4, 4);
    expect << c[0], I * c[1], I * c[2], -c[3],
              I * c[1], c[0], c[3], -I * c[2],
              I * c[2], -c[3], c[0], I * c[1],
              c[3], -I * c[2], I * c[1], c[0];
    worst = std::max(worst, (group_element(c, basis).matrix() - expect).cwiseAbs().maxCoeff());
  }
  return {uerr < 1e-12 && worst == 0.0,
          "unitarity error " + fmt(uerr) + " (limit 1e-12), pattern max deviation " + fmt(worst)};
}

// 10. e_j e_k + e_k e_j = 2 delta_jk.
Outcome clifford_generators() {
  int checked = 0, bad = 0;
  for (unsigned n = 1; n <= 5; ++n) {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(1 << n, 1 << n);
    for (unsigned j = 1; j <= n; ++j) {
      for (unsigned k = 1; k <= n; ++k) {
        const auto ej = build_e(j, n), ek = build_e(k, n);
        const Eigen::MatrixXcd ac = (ej * ek).matrix() + (ek * ej).matrix();
        ++checked;
        if (ac != (j == k ? 2.0 : 0.0) * id) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " pairs, " + std::to_string(bad) + " violations"};
}

// 11. Closed-form Hamiltonian spectrum vs dense eigensolver.
Outcome hamiltonian_spectrum() {
  std::mt19937_64 rng(1101);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst = 0.0, worst_edge = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const CoupledQubitParams p{u(rng), u(rng), u(rng), u(rng)};
    const Eigen::MatrixXcd h = build_hamiltonian(p).matrix();
    auto closed = eigenenergies(p);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const auto labelled = closed;
    std::sort(closed.begin(), closed.end());
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(closed[k] - es.eigenvalues()[k]));
    const Eigen::VectorXcd e0 = basis_state(0, 2).coeffs(), e3 = basis_state(3, 2).coeffs();
    worst_edge = std::max(worst_edge, (h * e0 - labelled[0] * e0).norm());
    worst_edge = std::max(worst_edge, (h * e3 - labelled[3] * e3).norm());
  }
  return {worst < 1e-10 && worst_edge == 0.0,
          "max eigenvalue error " + fmt(worst) + " (limit 1e-10), |0> and |3> residual " +
              fmt(worst_edge)};
}

// 12. transform(a, b) is unitary and maps a to b.
Outcome transform_contract() {
  Outcome o;
  std::ostringstream os;
  for (unsigned n = 2; n <= 3; ++n) {
    std::mt19937_64 rng(1200 + n);
    int failures = 0, no_convergence = 0;
    double worst_u = 0.0, worst_a = 0.0;
    for (int t = 0; t < 100; ++t) {
      const StateVector a(ref::random_state(rng, n));
      const StateVector b(ref::random_state(rng, n));
      try {
        const Eigen::MatrixXcd u = transform(a, b).matrix();
        const double ue = unitarity_error(u);
        const double ae = (u * a.coeffs() - b.coeffs()).norm();
        worst_u = std::max(worst_u, ue);
        worst_a = std::max(worst_a, ae);
        if (!(ue < 1e-10) || !(ae < 1e-8)) ++failures;
      } catch (const ConvergenceFailure &) {
        ++failures;
        ++no_convergence;
      }
    }
    if (failures > 0) o.pass = false;
    os << "n=" << n << ": " << failures << "/100 failed (" << no_convergence
       << " without convergence), max unitarity " << fmt(worst_u) << ", max action "
       << fmt(worst_a) << "; ";
  }
  o.detail = os.str();
  return o;
}

// 13. Analytic Jacobian vs central differences.
Outcome gradient_check() {
  std::mt19937_64 rng(1301);
  double worst = 0.0;
  for (unsigned n = 1; n <= 4; ++n) {
    const Eigen::Index N = Eigen::Index{1} << n;
    const MagnitudeObjective f(ref::random_state(rng, n).cwiseAbs2());
    for (int t = 0; t < 20; ++t) {
      const Eigen::VectorXd theta = ref::random_angles(rng, N - 1);
      const Eigen::MatrixXd j = f.jacobian(theta);
      Eigen::MatrixXd fd(N, N - 1);
      const double h = 1e-6;
      for (Eigen::Index m = 0; m < N - 1; ++m) {
        Eigen::VectorXd p = theta, q = theta;
        p[m] += h;
        q[m] -= h;
        fd.col(m) = (f.residuals(p) - f.residuals(q)) / (2 * h);
      }
      worst = std::max(worst, (j - fd).norm() / fd.norm());
    }
  }
  return {worst < 1e-5, "max relative error " + fmt(worst) + " (limit 1e-5)"};
}

// 14. fwht speed at n = 20 and agreement with the naive transform.
Outcome fwht_performance() {
  std::mt19937_64 rng(1401);
  Eigen::VectorXcd big = ref::random_complex(rng, Eigen::Index{1} << 20);
  const auto t0 = Clock::now();
  const Eigen::VectorXcd out = fwht(big);
  const double elapsed = seconds_since(t0);
  double worst = 0.0;
  for (unsigned n = 0; n <= 10; ++n) {
    const Eigen::VectorXcd v = ref::random_complex(rng, Eigen::Index{1} << n);
    const Eigen::VectorXcd naive = fwht_naive(v);
    worst = std::max(worst, (fwht(v) - naive).cwiseAbs().maxCoeff() /
                                std::max(1.0, naive.cwiseAbs().maxCoeff()));
  }
  return {elapsed < 1.0 && worst < 1e-12 && out.size() == big.size(),
          "n=20 in " + fmt(elapsed) + " s (limit 1 s), fast vs naive " + fmt(worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"parameter count", parameter_count},
      {"reachability round-trip", reachability},
      {"single-factor exponential", single_factor_identity},
      {"product-to-sum exponential", product_to_sum},
      {"printed two-qubit matrices", printed_matrices},
      {"two-qubit coefficient expansion", coefficient_expansion},
      {"alpha-phi linear system", phase_system},
      {"singularity flag", singularity},
      {"antihermitian Cl2 basis", antihermitian_basis},
      {"Clifford generators", clifford_generators},
      {"Hamiltonian spectrum", hamiltonian_spectrum},
      {"transform contract", transform_contract},
      {"Jacobian check", gradient_check},
      {"fwht performance", fwht_performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
