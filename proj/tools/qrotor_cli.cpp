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


// qrotor command-line tool: batch front end over the C API.

#include <qrotor/qrotor.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr double kOracleLimit = 1e-10;

struct RunConfig {
  std::vector<std::string> inputs;
  std::string target;
  std::string output = "-";
  std::string format = "json";
  double tol = 0.0;
  double zero_tol = 0.0;
  int max_restarts = -1;
  std::uint64_t seed = 0;
  bool oracle = false;
  std::optional<unsigned> n;
  std::string family;
  std::uint64_t index = 0;
};

// Thrown to leave a subcommand with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void raise(qr_status st) {
  throw Exit{static_cast<int>(st), qr_last_error()};
}

void check(qr_status st) {
  if (st != QR_OK) raise(st);
}

std::string read_text(const std::string &path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{QR_ERR_INPUT, "cannot open input file " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string &path, const std::string &text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Exit{QR_ERR_INPUT, "cannot open output file " + path};
  out << text;
  if (!out) throw Exit{QR_ERR_INTERNAL, "failed writing " + path};
}

// Takes ownership of a library string.
std::string take(char *s) {
  std::string out = s ? s : "";
  qr_string_free(s);
  return out;
}

template <class T, void (*Free)(T *)>
struct Handle {
  T *p = nullptr;
  Handle() = default;
  Handle(const Handle &) = delete;
  Handle &operator=(const Handle &) = delete;
  ~Handle() { Free(p); }
  T **out() { return &p; }
  T *get() const { return p; }
};

using State = Handle<qr_state, qr_state_free>;
using Angles = Handle<qr_angles, qr_angles_free>;
using Matrix = Handle<qr_matrix, qr_matrix_free>;
using Analysis = Handle<qr_analysis, qr_analysis_free>;

qr_format format_of(const RunConfig &cfg) {
  return cfg.format == "csv" ? QR_FORMAT_CSV : QR_FORMAT_JSON;
}

qr_analyze_options options_of(const RunConfig &cfg) {
  qr_analyze_options o;
  qr_analyze_options_init(&o);
  if (cfg.tol > 0.0) o.tol = cfg.tol;
  if (cfg.zero_tol > 0.0) o.zero_tol = cfg.zero_tol;
  if (cfg.max_restarts >= 0) o.max_restarts = cfg.max_restarts;
  o.seed = cfg.seed;
  return o;
}

void check_qubits(const RunConfig &cfg, unsigned got, const std::string &what) {
  if (cfg.n && *cfg.n != got) {
    throw Exit{QR_ERR_INPUT, what + " declares n=" + std::to_string(got) +
                                 " but --n " + std::to_string(*cfg.n) + " was given"};
  }
}

const std::string &single_input(const RunConfig &cfg) {
  static const std::string stdin_path = "-";
  if (cfg.inputs.empty()) return stdin_path;
  if (cfg.inputs.size() > 1) throw Exit{QR_ERR_INPUT, "expected a single --input"};
  return cfg.inputs.front();
}

void load_state(const RunConfig &cfg, const std::string &path, State &s) {
  check(qr_state_from_json(read_text(path).c_str(), 0, s.out()));
  check_qubits(cfg, qr_state_qubits(s.get()), path);
  const double norm = qr_state_input_norm(s.get());
  if (std::abs(norm - 1.0) > 1e-6) {
    std::cerr << "warning: " << (path == "-" ? std::string("stdin") : path) << " has norm " << norm << "; renormalized\n";
  }
}

int cmd_synth(const RunConfig &cfg) {
  const std::string &path = single_input(cfg);
  Angles a;
  check(qr_angles_from_json(read_text(path).c_str(), a.out()));
  check_qubits(cfg, qr_angles_qubits(a.get()), path);
  State s;
  check(qr_synthesize(a.get(), s.out()));
  std::vector<qr_field> extras;
  double deviation = 0.0;
  if (cfg.oracle) {
    check(qr_synthesize_oracle_deviation(a.get(), &deviation));
    extras.push_back({"oracle_deviation", deviation});
  }
  char *text = nullptr;
  check(qr_state_write(s.get(), format_of(cfg), extras.data(), extras.size(), &text));
  write_text(cfg.output, take(text));
  if (cfg.oracle && !(deviation < kOracleLimit)) {
    throw Exit{QR_ERR_INTERNAL, "oracle deviation exceeds limit"};
  }
  return QR_OK;
}

int cmd_analyze(const RunConfig &cfg) {
  const std::string &path = single_input(cfg);
  State s;
  load_state(cfg, path, s);
  const qr_analyze_options opts = options_of(cfg);
  Analysis r;
  const qr_status st = qr_analyze(s.get(), &opts, r.out());
  if (st != QR_OK && st != QR_ERR_CONVERGENCE) raise(st);
  const std::string message = st == QR_OK ? "" : qr_last_error();
  char *text = nullptr;
  check(qr_analysis_write(r.get(), format_of(cfg), &text));
  write_text(cfg.output, take(text));
  if (st != QR_OK) throw Exit{st, message};
  return QR_OK;
}

int cmd_transform(const RunConfig &cfg) {
  std::vector<std::string> paths = cfg.inputs;
  if (!cfg.target.empty()) paths.push_back(cfg.target);
  if (paths.size() != 2) {
    throw Exit{QR_ERR_INPUT, "transform needs a source and a target state (-i A -i B)"};
  }
  State a, b;
  load_state(cfg, paths[0], a);
  load_state(cfg, paths[1], b);
  if (qr_state_qubits(a.get()) != qr_state_qubits(b.get())) {
    throw Exit{QR_ERR_INPUT, "source and target have different n"};
  }
  const qr_analyze_options opts = options_of(cfg);
  Matrix u;
  check(qr_transform(a.get(), b.get(), &opts, u.out()));
  double action = 0.0, unitarity = 0.0;
  check(qr_matrix_action_error(u.get(), a.get(), b.get(), &action));
  check(qr_matrix_unitarity_error(u.get(), &unitarity));
  const qr_field extras[] = {{"action_error", action}, {"unitarity_error", unitarity}};
  char *text = nullptr;
  check(qr_matrix_write(u.get(), format_of(cfg), extras, 2, &text));
  write_text(cfg.output, take(text));
  return QR_OK;
}

int cmd_spectrum(const RunConfig &cfg) {
  const std::string &path = single_input(cfg);
  const std::string text = read_text(path);
  if (cfg.n) {
    const auto doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_object() && doc.contains("n") && doc["n"].is_number_unsigned()) {
      check_qubits(cfg, doc["n"].get<unsigned>(), path);
    }
  }
  int singular = 0;
  char *out = nullptr;
  check(qr_walsh_spectrum(text.c_str(), 0.0, format_of(cfg), &singular, &out));
  write_text(cfg.output, take(out));
  return QR_OK;
}

int cmd_ops(const RunConfig &cfg) {
  unsigned n = 0;
  if (cfg.family == "sigma") {
    n = cfg.n.value_or(1);
  } else if (cfg.n) {
    n = *cfg.n;
  } else {
    throw Exit{QR_ERR_INPUT, "--n is required for operator family " + cfg.family};
  }
  Matrix m;
  check(qr_operator(cfg.family.c_str(), cfg.index, n, m.out()));
  char *text = nullptr;
  check(qr_matrix_write(m.get(), format_of(cfg), nullptr, 0, &text));
  write_text(cfg.output, take(text));
  return QR_OK;
}

int cmd_ham(const RunConfig &cfg) {
  const std::string &path = single_input(cfg);
  qr_ham_params p;
  check(qr_ham_params_from_json(read_text(path).c_str(), &p));
  if (cfg.n && *cfg.n != 2) throw Exit{QR_ERR_INPUT, "the coupled-qubit model has n=2"};
  const qr_analyze_options opts = options_of(cfg);
  char *text = nullptr;
  const qr_status st = qr_ham_report(&p, &opts, format_of(cfg), &text);
  if (st != QR_OK && st != QR_ERR_CONVERGENCE) raise(st);
  const std::string message = st == QR_OK ? "" : qr_last_error();
  write_text(cfg.output, take(text));
  if (st != QR_OK) throw Exit{st, message};
  return QR_OK;
}

void add_common(CLI::App *cmd, RunConfig &cfg, bool solver) {
  cmd->add_option("-i,--input", cfg.inputs, "input file ('-' for stdin)");
  cmd->add_option("-o,--output", cfg.output, "output file ('-' for stdout)");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--n", cfg.n, "expected number of qubits");
  cmd->add_flag("--oracle", cfg.oracle, "verify against the dense exponential path");
  if (solver) {
    cmd->add_option("--tol", cfg.tol, "componentwise residual tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--zero-tol", cfg.zero_tol, "magnitude below which a phase is free")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-restarts", cfg.max_restarts, "random restarts after the first start")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", cfg.seed, "restart RNG seed");
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"qrotor: rotor parametrization of n-qubit states"};
  app.set_version_flag("--version", std::string(qr_version()));
  app.require_subcommand(1);
  RunConfig cfg;

  auto *synth = app.add_subcommand("synth", "angle file -> state file");
  add_common(synth, cfg, false);
  auto *analyze = app.add_subcommand("analyze", "state file -> angle report");
  add_common(analyze, cfg, true);
  auto *transform = app.add_subcommand("transform", "unitary taking state A to state B");
  add_common(transform, cfg, true);
  transform->add_option("--target", cfg.target, "target state file");
  auto *spectrum = app.add_subcommand("spectrum", "Walsh spectrum and singularity flag");
  add_common(spectrum, cfg, false);
  auto *ops = app.add_subcommand("ops", "dump an operator matrix");
  add_common(ops, cfg, false);
  ops->add_option("family", cfg.family, "b, z, e, P or sigma")
      ->required()
      ->check(CLI::IsMember({"b", "z", "e", "P", "sigma"}));
  ops->add_option("index", cfg.index, "operator index");
  auto *ham = app.add_subcommand("ham", "coupled two-qubit Hamiltonian report");
  add_common(ham, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return QR_ERR_INPUT;
  }

  try {
    if (*synth) return cmd_synth(cfg);
    if (*analyze) return cmd_analyze(cfg);
    if (*transform) return cmd_transform(cfg);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*ops) return cmd_ops(cfg);
    if (*ham) return cmd_ham(cfg);
  } catch (const Exit &e) {
    std::cerr << "qrotor: " << e.message << "\n";
    return e.code;
  } catch (const std::exception &e) {
    std::cerr << "qrotor: " << e.what() << "\n";
    return QR_ERR_INTERNAL;
  }
  return QR_ERR_INPUT;
}
