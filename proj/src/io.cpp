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

#include "qrotor/io.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace qrotor::io {

namespace {

using nlohmann::json;

const std::array<const char *, 4> kLevelLabels = {"++", "mixed+", "mixed-", "--"};

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

const json &member(const json &obj, const char *key) {
  if (!obj.is_object()) throw InvalidInput("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return *it;
}

double as_number(const json &v, const char *what) {
  if (!v.is_number()) throw InvalidInput(std::string(what) + " must be a number");
  return v.get<double>();
}

long long as_qubits(const json &obj) {
  const json &v = member(obj, "n");
  if (!v.is_number_integer() || v.get<long long>() < 0 ||
      v.get<long long>() > static_cast<long long>(kMaxVectorQubits)) {
    throw InvalidInput("\"n\" must be an integer in 0.." + std::to_string(kMaxVectorQubits));
  }
  return v.get<long long>();
}

Eigen::VectorXd real_array(const json &v, const char *what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = as_number(v[i], what);
  }
  return out;
}

void check_declared_length(long long n, Eigen::Index got, Eigen::Index offset,
                           const char *what) {
  const Eigen::Index want = (Eigen::Index{1} << n) + offset;
  if (got != want) {
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(want) +
                       " entries for n=" + std::to_string(n) + ", got " +
                       std::to_string(got));
  }
}

AngleSet angles_from_json(const json &obj) {
  const long long n = as_qubits(obj);
  Eigen::VectorXd theta = real_array(member(obj, "theta"), "theta");
  Eigen::VectorXd phi = real_array(member(obj, "phi"), "phi");
  check_declared_length(n, theta.size(), -1, "theta");
  check_declared_length(n, phi.size(), 0, "phi");
  return AngleSet(std::move(theta), std::move(phi));
}

// Minimal streaming writer; callers are responsible for emitting valid
// structure, the writer handles commas and scalar formatting.
class JsonWriter {
 public:
  JsonWriter &begin_object() { return open('{'); }
  JsonWriter &end_object() { return close('}'); }
  JsonWriter &begin_array() { return open('['); }
  JsonWriter &end_array() { return close(']'); }

  JsonWriter &key(std::string_view k) {
    separator();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    after_key_ = true;
    return *this;
  }
  JsonWriter &value(double v) { return raw(format_double(v)); }
  JsonWriter &value(long long v) { return raw(std::to_string(v)); }
  JsonWriter &value(bool v) { return raw(v ? "true" : "false"); }
  JsonWriter &value(std::string_view s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    q += '"';
    return raw(q);
  }
  JsonWriter &value(cplx c) {
    begin_array();
    value(c.real());
    value(c.imag());
    return end_array();
  }
  JsonWriter &field(const Field &f) {
    key(f.key);
    std::visit([this](auto v) { value(v); }, f.value);
    return *this;
  }

  std::string str() const { return out_ + "\n"; }

 private:
  JsonWriter &raw(std::string_view s) {
    separator();
    out_ += s;
    return *this;
  }
  JsonWriter &open(char c) {
    separator();
    out_ += c;
    first_ = true;
    return *this;
  }
  JsonWriter &close(char c) {
    out_ += c;
    first_ = false;
    return *this;
  }
  void separator() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!first_) out_ += ',';
    first_ = false;
  }

  std::string out_;
  bool first_ = true;
  bool after_key_ = false;
};

class CsvWriter {
 public:
  CsvWriter() { out_ = "field,row,col,re,im\n"; }

  void scalar(std::string_view field, std::string_view v) { line(field, "", "", v, ""); }
  void scalar(std::string_view field, double v) { scalar(field, format_double(v)); }
  void complex(std::string_view field, long long row, long long col, cplx c) {
    line(field, std::to_string(row), col < 0 ? "" : std::to_string(col),
         format_double(c.real()), format_double(c.imag()));
  }
  void real(std::string_view field, long long row, double v) {
    line(field, std::to_string(row), "", format_double(v), "");
  }
  void extra(const Field &f) {
    std::visit(
        [&](auto v) {
          using T = decltype(v);
          if constexpr (std::is_same_v<T, bool>) {
            scalar(f.key, v ? "true" : "false");
          } else if constexpr (std::is_same_v<T, long long>) {
            scalar(f.key, std::to_string(v));
          } else {
            scalar(f.key, v);
          }
        },
        f.value);
  }
  std::string str() const { return out_; }

 private:
  void line(std::string_view a, std::string_view b, std::string_view c, std::string_view d,
            std::string_view e) {
    out_.append(a).append(",").append(b).append(",").append(c).append(",");
    out_.append(d).append(",").append(e).append("\n");
  }
  std::string out_;
};

void write_state_body(JsonWriter &w, const StateVector &s) {
  w.key("n").value(static_cast<long long>(s.qubits()));
  w.key("coeffs").begin_array();
  for (Eigen::Index l = 0; l < s.dim(); ++l) w.value(s[l]);
  w.end_array();
}

void write_angles_object(JsonWriter &w, const AngleSet &a) {
  w.begin_object();
  w.key("n").value(static_cast<long long>(a.qubits()));
  w.key("theta").begin_array();
  for (double t : a.theta()) w.value(t);
  w.end_array();
  w.key("phi").begin_array();
  for (double p : a.phi()) w.value(p);
  w.end_array();
  w.end_object();
}

void write_analysis_object(JsonWriter &w, const AnalysisResult &r, double input_norm) {
  w.begin_object();
  w.key("angles");
  write_angles_object(w, r.angles);
  w.key("residual").value(r.residual);
  w.key("restarts").value(static_cast<long long>(r.restarts));
  w.key("iterations").value(static_cast<long long>(r.iterations));
  w.key("converged").value(r.converged);
  w.key("input_norm").value(input_norm);
  w.key("renormalized").value(std::abs(input_norm - 1.0) > kRenormalizeThreshold);
  w.end_object();
}

void csv_angles(CsvWriter &w, const AngleSet &a, std::string_view prefix = "") {
  const std::string theta = std::string(prefix) + "theta";
  const std::string phi = std::string(prefix) + "phi";
  for (Eigen::Index l = 0; l < a.theta().size(); ++l) w.real(theta, l + 1, a.theta()[l]);
  for (Eigen::Index l = 0; l < a.phi().size(); ++l) w.real(phi, l, a.phi()[l]);
}

void csv_analysis(CsvWriter &w, const AnalysisResult &r, double input_norm) {
  csv_angles(w, r.angles);
  w.scalar("residual", r.residual);
  w.scalar("restarts", std::to_string(r.restarts));
  w.scalar("iterations", std::to_string(r.iterations));
  w.scalar("converged", r.converged ? "true" : "false");
  w.scalar("input_norm", input_norm);
  w.scalar("renormalized",
           std::abs(input_norm - 1.0) > kRenormalizeThreshold ? "true" : "false");
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) throw InvariantViolation("cannot serialize a non-finite value");
  char buf[32];
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Eigen::VectorXcd parse_coefficients(std::string_view text) {
  const json doc = parse_document(text);
  const long long n = as_qubits(doc);
  const json &arr = member(doc, "coeffs");
  if (!arr.is_array()) throw InvalidInput("\"coeffs\" must be an array");
  Eigen::VectorXcd c(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t l = 0; l < arr.size(); ++l) {
    const json &e = arr[l];
    if (!e.is_array() || e.size() != 2) {
      throw InvalidInput("coefficient " + std::to_string(l) + " must be [re, im]");
    }
    c[static_cast<Eigen::Index>(l)] = cplx(as_number(e[0], "re"), as_number(e[1], "im"));
  }
  check_declared_length(n, c.size(), 0, "coeffs");
  return c;
}

StateVector parse_state(std::string_view text, StateVector::Mode mode) {
  return StateVector(parse_coefficients(text), mode);
}

AngleSet parse_angles(std::string_view text) {
  const json doc = parse_document(text);
  if (doc.is_object() && doc.contains("angles")) return angles_from_json(doc["angles"]);
  return angles_from_json(doc);
}

CoupledQubitParams parse_hamiltonian_params(std::string_view text) {
  const json doc = parse_document(text);
  CoupledQubitParams p{as_number(member(doc, "omega0"), "omega0"),
                       as_number(member(doc, "omega1"), "omega1"),
                       as_number(member(doc, "omega2"), "omega2"),
                       as_number(member(doc, "lambda"), "lambda")};
  p.validate();
  return p;
}

std::string write_state(const StateVector &s, Format fmt, std::span<const Field> extras) {
  if (fmt == Format::csv) {
    CsvWriter w;
    for (Eigen::Index l = 0; l < s.dim(); ++l) w.complex("coeff", l, -1, s[l]);
    for (const Field &f : extras) w.extra(f);
    return w.str();
  }
  JsonWriter w;
  w.begin_object();
  write_state_body(w, s);
  for (const Field &f : extras) w.field(f);
  w.end_object();
  return w.str();
}

std::string write_angles(const AngleSet &a, Format fmt) {
  if (fmt == Format::csv) {
    CsvWriter w;
    csv_angles(w, a);
    return w.str();
  }
  JsonWriter w;
  write_angles_object(w, a);
  return w.str();
}

std::string write_analysis(const AnalysisResult &r, double input_norm, Format fmt) {
  if (fmt == Format::csv) {
    CsvWriter w;
    csv_analysis(w, r, input_norm);
    return w.str();
  }
  JsonWriter w;
  write_analysis_object(w, r, input_norm);
  return w.str();
}

std::string write_matrix(const OperatorMatrix &m, const std::string &name, Format fmt,
                         std::span<const Field> extras) {
  if (fmt == Format::csv) {
    CsvWriter w;
    for (Eigen::Index r = 0; r < m.dim(); ++r) {
      for (Eigen::Index c = 0; c < m.dim(); ++c) w.complex("entry", r, c, m(r, c));
    }
    for (const Field &f : extras) w.extra(f);
    return w.str();
  }
  JsonWriter w;
  w.begin_object();
  w.key("n").value(static_cast<long long>(m.qubits()));
  w.key("name").value(name);
  w.key("rows").begin_array();
  for (Eigen::Index r = 0; r < m.dim(); ++r) {
    w.begin_array();
    for (Eigen::Index c = 0; c < m.dim(); ++c) w.value(m(r, c));
    w.end_array();
  }
  w.end_array();
  for (const Field &f : extras) w.field(f);
  w.end_object();
  return w.str();
}

std::string write_spectrum(const SingularityReport &r, Format fmt) {
  const auto n = static_cast<long long>(
      qubits_for_length(static_cast<std::size_t>(r.spectrum.size())));
  if (fmt == Format::csv) {
    CsvWriter w;
    for (Eigen::Index k = 0; k < r.spectrum.size(); ++k) {
      w.complex("spectrum", k, -1, r.spectrum[k]);
    }
    w.scalar("singular", r.singular ? "true" : "false");
    return w.str();
  }
  JsonWriter w;
  w.begin_object();
  w.key("n").value(n);
  w.key("spectrum").begin_array();
  for (Eigen::Index k = 0; k < r.spectrum.size(); ++k) w.value(r.spectrum[k]);
  w.end_array();
  w.key("singular").value(r.singular);
  w.end_object();
  return w.str();
}

std::string write_hamiltonian_report(const CoupledQubitParams &p, const SpectrumReport &s,
                                     const std::array<AnalysisResult, 4> &angles,
                                     Format fmt) {
  bool all_converged = true;
  for (const auto &a : angles) all_converged = all_converged && a.converged;

  if (fmt == Format::csv) {
    CsvWriter w;
    w.scalar("omega0", p.omega0);
    w.scalar("omega1", p.omega1);
    w.scalar("omega2", p.omega2);
    w.scalar("lambda", p.lambda);
    w.scalar("delta", s.delta);
    for (std::size_t i = 0; i < 4; ++i) {
      const auto row = static_cast<long long>(i);
      w.real("energy", row, s.energies[i]);
      for (Eigen::Index l = 0; l < 4; ++l) {
        w.complex("eigenstate", row, l, s.eigenstates[i][l]);
      }
      const AngleSet &a = angles[i].angles;
      for (Eigen::Index l = 0; l < a.theta().size(); ++l) {
        w.complex("theta", row, l + 1, a.theta()[l]);
      }
      for (Eigen::Index l = 0; l < a.phi().size(); ++l) w.complex("phi", row, l, a.phi()[l]);
      w.real("residual", row, angles[i].residual);
    }
    w.scalar("converged", all_converged ? "true" : "false");
    return w.str();
  }

  JsonWriter w;
  w.begin_object();
  w.key("params").begin_object();
  w.key("omega0").value(p.omega0);
  w.key("omega1").value(p.omega1);
  w.key("omega2").value(p.omega2);
  w.key("lambda").value(p.lambda);
  w.end_object();
  w.key("delta").value(s.delta);
  w.key("labels").begin_array();
  for (const char *label : kLevelLabels) w.value(std::string_view(label));
  w.end_array();
  w.key("energies").begin_array();
  for (double e : s.energies) w.value(e);
  w.end_array();
  w.key("eigenstates").begin_array();
  for (const StateVector &v : s.eigenstates) {
    w.begin_object();
    write_state_body(w, v);
    w.end_object();
  }
  w.end_array();
  w.key("angles").begin_array();
  for (const AnalysisResult &a : angles) write_analysis_object(w, a, 1.0);
  w.end_array();
  w.key("converged").value(all_converged);
  w.end_object();
  return w.str();
}

}  // namespace qrotor::io
