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

#include "qrotor/qrotor.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "qrotor/io.hpp"

struct qr_state {
  qrotor::StateVector value;
};

struct qr_angles {
  qrotor::AngleSet value;
};

struct qr_matrix {
  qrotor::OperatorMatrix value;
  std::string name;
};

struct qr_analysis {
  qrotor::AnalysisResult value;
  double input_norm = 1.0;
};

namespace {

thread_local std::string last_error;

qr_status fail(qr_status code, const char *what) {
  last_error = what;
  return code;
}

template <class F>
qr_status guarded(F &&f) noexcept {
  try {
    return f();
  } catch (const qrotor::Error &e) {
    return fail(static_cast<qr_status>(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(QR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(QR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QR_ERR_INTERNAL, "unknown error");
  }
}

void require(const void *p, const char *what) {
  if (p == nullptr) throw qrotor::InvalidInput(std::string(what) + " is null");
}

qrotor::io::Format to_format(qr_format fmt) {
  switch (fmt) {
    case QR_FORMAT_JSON: return qrotor::io::Format::json;
    case QR_FORMAT_CSV: return qrotor::io::Format::csv;
  }
  throw qrotor::InvalidInput("unknown output format");
}

qrotor::AnalyzeOptions to_options(const qr_analyze_options *opts) {
  qrotor::AnalyzeOptions o;
  if (opts != nullptr) {
    o.tol = opts->tol;
    o.zero_tol = opts->zero_tol;
    o.max_restarts = opts->max_restarts;
    o.max_iterations = opts->max_iterations;
    o.seed = opts->seed;
    o.reduce_angles = opts->reduce_angles != 0;
  }
  o.validate();
  return o;
}

std::vector<qrotor::io::Field> to_fields(const qr_field *extras, size_t n) {
  std::vector<qrotor::io::Field> out;
  if (n > 0) require(extras, "extras");
  for (size_t i = 0; i < n; ++i) {
    require(extras[i].key, "extra field key");
    out.push_back({extras[i].key, extras[i].value});
  }
  return out;
}

char *to_c_string(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

void write_out(char **out, const std::string &s) {
  require(out, "output pointer");
  *out = to_c_string(s);
}

qrotor::StateVector::Mode mode_of(int exact) {
  return exact ? qrotor::StateVector::Mode::exact : qrotor::StateVector::Mode::normalize;
}

void copy_complex(const Eigen::VectorXcd &v, double *re_im, size_t count) {
  require(re_im, "output buffer");
  if (count != static_cast<size_t>(v.size())) {
    throw qrotor::InvalidInput("buffer holds " + std::to_string(count) +
                               " entries, need " + std::to_string(v.size()));
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re_im[2 * i] = v[i].real();
    re_im[2 * i + 1] = v[i].imag();
  }
}

qrotor::CoupledQubitParams to_params(const qr_ham_params *p) {
  require(p, "Hamiltonian parameters");
  qrotor::CoupledQubitParams q{p->omega0, p->omega1, p->omega2, p->lambda};
  q.validate();
  return q;
}

}  // namespace

extern "C" {

const char *qr_version(void) { return "1.0.0"; }

const char *qr_last_error(void) { return last_error.c_str(); }

void qr_string_free(char *s) { std::free(s); }

void qr_analyze_options_init(qr_analyze_options *opts) {
  if (opts == nullptr) return;
  const qrotor::AnalyzeOptions d;
  opts->tol = d.tol;
  opts->zero_tol = d.zero_tol;
  opts->max_restarts = d.max_restarts;
  opts->max_iterations = d.max_iterations;
  opts->seed = d.seed;
  opts->reduce_angles = d.reduce_angles ? 1 : 0;
}

qr_status qr_state_from_json(const char *text, int exact, qr_state **out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new qr_state{qrotor::io::parse_state(text, mode_of(exact))};
    return QR_OK;
  });
}

qr_status qr_state_create(unsigned n, const double *re_im, size_t count, int exact,
                          qr_state **out) {
  return guarded([&] {
    require(re_im, "coefficients");
    require(out, "output pointer");
    if (n > qrotor::kMaxVectorQubits || count != (size_t{1} << n)) {
      throw qrotor::InvalidInput("coefficient count does not match n");
    }
    Eigen::VectorXcd c(static_cast<Eigen::Index>(count));
    for (size_t i = 0; i < count; ++i) {
      c[static_cast<Eigen::Index>(i)] = qrotor::cplx(re_im[2 * i], re_im[2 * i + 1]);
    }
    *out = new qr_state{qrotor::StateVector(std::move(c), mode_of(exact))};
    return QR_OK;
  });
}

qr_status qr_state_basis(unsigned n, uint64_t index, qr_state **out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new qr_state{qrotor::basis_state(index, n)};
    return QR_OK;
  });
}

void qr_state_free(qr_state *s) { delete s; }

unsigned qr_state_qubits(const qr_state *s) { return s ? s->value.qubits() : 0; }

double qr_state_input_norm(const qr_state *s) { return s ? s->value.input_norm() : 0.0; }

qr_status qr_state_coeffs(const qr_state *s, double *re_im, size_t count) {
  return guarded([&] {
    require(s, "state");
    copy_complex(s->value.coeffs(), re_im, count);
    return QR_OK;
  });
}

qr_status qr_state_distance(const qr_state *a, const qr_state *b, double *out) {
  return guarded([&] {
    require(a, "state a");
    require(b, "state b");
    require(out, "output pointer");
    *out = qrotor::max_abs_difference(a->value, b->value);
    return QR_OK;
  });
}

qr_status qr_state_write(const qr_state *s, qr_format fmt, const qr_field *extras,
                         size_t n_extras, char **out) {
  return guarded([&] {
    require(s, "state");
    const auto fields = to_fields(extras, n_extras);
    write_out(out, qrotor::io::write_state(s->value, to_format(fmt), fields));
    return QR_OK;
  });
}

qr_status qr_angles_from_json(const char *text, qr_angles **out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new qr_angles{qrotor::io::parse_angles(text)};
    return QR_OK;
  });
}

qr_status qr_angles_create(unsigned n, const double *theta, const double *phi,
                           qr_angles **out) {
  return guarded([&] {
    require(theta, "theta");
    require(phi, "phi");
    require(out, "output pointer");
    if (n > qrotor::kMaxVectorQubits) throw qrotor::InvalidInput("too many qubits");
    const Eigen::Index dim = Eigen::Index{1} << n;
    *out = new qr_angles{qrotor::AngleSet(Eigen::Map<const Eigen::VectorXd>(theta, dim - 1),
                                          Eigen::Map<const Eigen::VectorXd>(phi, dim))};
    return QR_OK;
  });
}

void qr_angles_free(qr_angles *a) { delete a; }

unsigned qr_angles_qubits(const qr_angles *a) { return a ? a->value.qubits() : 0; }

size_t qr_angles_count(const qr_angles *a) {
  return a ? static_cast<size_t>(a->value.parameter_count()) : 0;
}

qr_status qr_angles_get(const qr_angles *a, double *theta, double *phi) {
  return guarded([&] {
    require(a, "angles");
    require(theta, "theta buffer");
    require(phi, "phi buffer");
    Eigen::Map<Eigen::VectorXd>(theta, a->value.theta().size()) = a->value.theta();
    Eigen::Map<Eigen::VectorXd>(phi, a->value.phi().size()) = a->value.phi();
    return QR_OK;
  });
}

qr_status qr_angles_write(const qr_angles *a, qr_format fmt, char **out) {
  return guarded([&] {
    require(a, "angles");
    write_out(out, qrotor::io::write_angles(a->value, to_format(fmt)));
    return QR_OK;
  });
}

qr_status qr_synthesize(const qr_angles *a, qr_state **out) {
  return guarded([&] {
    require(a, "angles");
    require(out, "output pointer");
    *out = new qr_state{qrotor::synthesize(a->value)};
    return QR_OK;
  });
}

qr_status qr_synthesize_oracle_deviation(const qr_angles *a, double *out) {
  return guarded([&] {
    require(a, "angles");
    require(out, "output pointer");
    const Eigen::VectorXcd fast = qrotor::synthesize(a->value).coeffs();
    const Eigen::VectorXcd slow = qrotor::rotor_matrix_oracle(a->value).matrix().col(0);
    *out = (fast - slow).cwiseAbs().maxCoeff();
    return QR_OK;
  });
}

qr_status qr_rotor_oracle_deviation(const qr_angles *a, double *out) {
  return guarded([&] {
    require(a, "angles");
    require(out, "output pointer");
    *out = qrotor::frobenius_distance(qrotor::rotor_matrix(a->value).matrix(),
                                      qrotor::rotor_matrix_oracle(a->value).matrix());
    return QR_OK;
  });
}

qr_status qr_rotor_matrix(const qr_angles *a, qr_matrix **out) {
  return guarded([&] {
    require(a, "angles");
    require(out, "output pointer");
    *out = new qr_matrix{qrotor::rotor_matrix(a->value), "rotor"};
    return QR_OK;
  });
}

qr_status qr_analyze(const qr_state *target, const qr_analyze_options *opts,
                     qr_analysis **out) {
  return guarded([&] {
    require(target, "target state");
    require(out, "output pointer");
    auto *res = new qr_analysis{qrotor::analyze_report(target->value, to_options(opts)),
                                target->value.input_norm()};
    *out = res;
    if (!res->value.converged) {
      return fail(QR_ERR_CONVERGENCE,
                  qrotor::ConvergenceFailure(res->value).what());
    }
    return QR_OK;
  });
}

void qr_analysis_free(qr_analysis *r) { delete r; }

double qr_analysis_residual(const qr_analysis *r) { return r ? r->value.residual : 0.0; }

int qr_analysis_restarts(const qr_analysis *r) { return r ? r->value.restarts : 0; }

int qr_analysis_iterations(const qr_analysis *r) { return r ? r->value.iterations : 0; }

int qr_analysis_converged(const qr_analysis *r) { return r && r->value.converged ? 1 : 0; }

qr_status qr_analysis_angles(const qr_analysis *r, qr_angles **out) {
  return guarded([&] {
    require(r, "analysis");
    require(out, "output pointer");
    *out = new qr_angles{r->value.angles};
    return QR_OK;
  });
}

qr_status qr_analysis_write(const qr_analysis *r, qr_format fmt, char **out) {
  return guarded([&] {
    require(r, "analysis");
    write_out(out, qrotor::io::write_analysis(r->value, r->input_norm, to_format(fmt)));
    return QR_OK;
  });
}

qr_status qr_transform(const qr_state *a, const qr_state *b,
                       const qr_analyze_options *opts, qr_matrix **out) {
  return guarded([&] {
    require(a, "state a");
    require(b, "state b");
    require(out, "output pointer");
    *out = new qr_matrix{qrotor::transform(a->value, b->value, to_options(opts)),
                         "transform"};
    return QR_OK;
  });
}

qr_status qr_operator(const char *family, uint64_t index, unsigned n, qr_matrix **out) {
  return guarded([&] {
    require(family, "family");
    require(out, "output pointer");
    const std::string f = family;
    std::optional<qrotor::OperatorMatrix> m;
    if (f == "b") {
      m = qrotor::build_b(index, n);
    } else if (f == "z") {
      m = qrotor::build_z(index, n);
    } else if (f == "e") {
      if (index > n) throw qrotor::InvalidInput("Clifford generator index out of range");
      m = qrotor::build_e(static_cast<unsigned>(index), n);
    } else if (f == "P") {
      m = qrotor::build_projector(n);
    } else if (f == "sigma") {
      if (n != 1) throw qrotor::InvalidInput("Pauli matrices act on n = 1");
      if (index > 3) throw qrotor::InvalidInput("Pauli index must be 0..3");
      m = qrotor::pauli(static_cast<int>(index));
    } else {
      throw qrotor::InvalidInput("unknown operator family \"" + f + "\"");
    }
    *out = new qr_matrix{std::move(*m), qrotor::operator_name(f, index)};
    return QR_OK;
  });
}

void qr_matrix_free(qr_matrix *m) { delete m; }

unsigned qr_matrix_qubits(const qr_matrix *m) { return m ? m->value.qubits() : 0; }

const char *qr_matrix_name(const qr_matrix *m) { return m ? m->name.c_str() : ""; }

qr_status qr_matrix_entries(const qr_matrix *m, double *re_im, size_t count) {
  return guarded([&] {
    require(m, "matrix");
    const Eigen::MatrixXcd rowmajor = m->value.matrix().transpose();
    copy_complex(Eigen::Map<const Eigen::VectorXcd>(rowmajor.data(), rowmajor.size()),
                 re_im, count);
    return QR_OK;
  });
}

qr_status qr_matrix_unitarity_error(const qr_matrix *m, double *out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "output pointer");
    *out = qrotor::unitarity_error(m->value.matrix());
    return QR_OK;
  });
}

qr_status qr_matrix_action_error(const qr_matrix *u, const qr_state *a, const qr_state *b,
                                 double *out) {
  return guarded([&] {
    require(u, "matrix");
    require(a, "state a");
    require(b, "state b");
    require(out, "output pointer");
    if (u->value.dim() != a->value.dim() || a->value.dim() != b->value.dim()) {
      throw qrotor::InvalidInput("dimension mismatch between operator and states");
    }
    *out = (u->value.matrix() * a->value.coeffs() - b->value.coeffs()).norm();
    return QR_OK;
  });
}

qr_status qr_matrix_write(const qr_matrix *m, qr_format fmt, const qr_field *extras,
                          size_t n_extras, char **out) {
  return guarded([&] {
    require(m, "matrix");
    const auto fields = to_fields(extras, n_extras);
    write_out(out, qrotor::io::write_matrix(m->value, m->name, to_format(fmt), fields));
    return QR_OK;
  });
}

qr_status qr_walsh_spectrum(const char *state_json, double rel_tol, qr_format fmt,
                            int *singular, char **out) {
  return guarded([&] {
    require(state_json, "text");
    const double tol = rel_tol > 0.0 ? rel_tol : qrotor::kSingularityRelTol;
    const auto report =
        qrotor::walsh_spectrum_singularity(qrotor::io::parse_coefficients(state_json), tol);
    if (singular != nullptr) *singular = report.singular ? 1 : 0;
    write_out(out, qrotor::io::write_spectrum(report, to_format(fmt)));
    return QR_OK;
  });
}

qr_status qr_ham_params_from_json(const char *text, qr_ham_params *out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    const auto p = qrotor::io::parse_hamiltonian_params(text);
    *out = {p.omega0, p.omega1, p.omega2, p.lambda};
    return QR_OK;
  });
}

qr_status qr_ham_energies(const qr_ham_params *p, double energies[4]) {
  return guarded([&] {
    require(energies, "energies");
    const auto e = qrotor::eigenenergies(to_params(p));
    for (int i = 0; i < 4; ++i) energies[i] = e[static_cast<size_t>(i)];
    return QR_OK;
  });
}

qr_status qr_ham_report(const qr_ham_params *p, const qr_analyze_options *opts,
                        qr_format fmt, char **out) {
  return guarded([&] {
    const auto params = to_params(p);
    const auto spectrum = qrotor::eigenstates(params);
    const auto angles = qrotor::parametrize_eigenstates(params, to_options(opts));
    write_out(out, qrotor::io::write_hamiltonian_report(params, spectrum, angles,
                                                        to_format(fmt)));
    for (const auto &a : angles) {
      if (!a.converged) {
        return fail(QR_ERR_CONVERGENCE, qrotor::ConvergenceFailure(a).what());
      }
    }
    return QR_OK;
  });
}

}  // extern "C"
