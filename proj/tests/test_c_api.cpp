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


#include <qrotor/qrotor.h>

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

namespace {

std::string take(char *s) {
  std::string out = s ? s : "";
  qr_string_free(s);
  return out;
}

const char *kBell = R"({"n":2,"coeffs":[[0.7071067811865476,0],[0,0],[0,0],[0.7071067811865476,0]]})";

TEST(CApi, VersionAndOptions) {
  EXPECT_STRNE(qr_version(), "");
  qr_analyze_options o;
  qr_analyze_options_init(&o);
  EXPECT_EQ(o.tol, 1e-9);
  EXPECT_EQ(o.zero_tol, 1e-12);
  EXPECT_EQ(o.max_restarts, 32);
  EXPECT_EQ(o.seed, 0u);
}

TEST(CApi, StateLifecycle) {
  qr_state *s = nullptr;
  ASSERT_EQ(qr_state_from_json(kBell, 0, &s), QR_OK);
  EXPECT_EQ(qr_state_qubits(s), 2u);
  EXPECT_NEAR(qr_state_input_norm(s), 1.0, 1e-15);
  std::vector<double> c(8);
  ASSERT_EQ(qr_state_coeffs(s, c.data(), 4), QR_OK);
  EXPECT_NEAR(c[6], M_SQRT1_2, 1e-15);
  EXPECT_EQ(qr_state_coeffs(s, c.data(), 3), QR_ERR_INPUT);
  char *text = nullptr;
  ASSERT_EQ(qr_state_write(s, QR_FORMAT_JSON, nullptr, 0, &text), QR_OK);
  EXPECT_EQ(take(text).substr(0, 12), "{\"n\":2,\"coef");
  qr_state_free(s);
  qr_state_free(nullptr);
}

TEST(CApi, ErrorsCarryMessages) {
  qr_state *s = nullptr;
  EXPECT_EQ(qr_state_from_json("{", 0, &s), QR_ERR_INPUT);
  EXPECT_EQ(s, nullptr);
  EXPECT_STRNE(qr_last_error(), "");
  EXPECT_EQ(qr_state_from_json(R"({"n":1,"coeffs":[[2,0],[0,0]]})", 1, &s), QR_ERR_INPUT);
  EXPECT_EQ(qr_state_from_json(nullptr, 0, &s), QR_ERR_INPUT);
  EXPECT_EQ(qr_state_basis(2, 4, &s), QR_ERR_INPUT);
  qr_matrix *m = nullptr;
  EXPECT_EQ(qr_operator("x", 0, 2, &m), QR_ERR_INPUT);
  EXPECT_EQ(qr_operator("sigma", 1, 2, &m), QR_ERR_INPUT);
  EXPECT_EQ(qr_operator("e", 3, 2, &m), QR_ERR_INPUT);
}

TEST(CApi, SynthesizeAndAnalyze) {
  const double theta[3] = {0, 0, M_PI / 2};
  const double phi[4] = {0, 0, 0, 0};
  qr_angles *a = nullptr;
  ASSERT_EQ(qr_angles_create(2, theta, phi, &a), QR_OK);
  EXPECT_EQ(qr_angles_count(a), 7u);
  qr_state *s = nullptr;
  ASSERT_EQ(qr_synthesize(a, &s), QR_OK);
  std::vector<double> c(8);
  qr_state_coeffs(s, c.data(), 4);
  EXPECT_NEAR(c[0], M_SQRT1_2, 1e-15);
  EXPECT_NEAR(c[7], -M_SQRT1_2, 1e-15);
  double dev = 1.0;
  ASSERT_EQ(qr_synthesize_oracle_deviation(a, &dev), QR_OK);
  EXPECT_LT(dev, 1e-10);
  ASSERT_EQ(qr_rotor_oracle_deviation(a, &dev), QR_OK);
  EXPECT_LT(dev, 1e-10);

  qr_analyze_options o;
  qr_analyze_options_init(&o);
  qr_analysis *r = nullptr;
  ASSERT_EQ(qr_analyze(s, &o, &r), QR_OK);
  EXPECT_TRUE(qr_analysis_converged(r));
  EXPECT_LT(qr_analysis_residual(r), 1e-9);
  qr_angles *fit = nullptr;
  ASSERT_EQ(qr_analysis_angles(r, &fit), QR_OK);
  qr_state *again = nullptr;
  ASSERT_EQ(qr_synthesize(fit, &again), QR_OK);
  double dist = 1.0;
  ASSERT_EQ(qr_state_distance(s, again, &dist), QR_OK);
  EXPECT_LT(dist, 1e-9);
  for (auto *x : {s, again}) qr_state_free(x);
  qr_angles_free(a);
  qr_angles_free(fit);
  qr_analysis_free(r);
}

TEST(CApi, AnalyzeFailureStillReturnsReport) {
  const double d[8] = {1, 0, 1, 0, 1, 0, 0, 0};
  qr_state *s = nullptr;
  ASSERT_EQ(qr_state_create(2, d, 4, 0, &s), QR_OK);
  qr_analyze_options o;
  qr_analyze_options_init(&o);
  o.max_restarts = 2;
  qr_analysis *r = nullptr;
  EXPECT_EQ(qr_analyze(s, &o, &r), QR_ERR_CONVERGENCE);
  ASSERT_NE(r, nullptr);
  EXPECT_FALSE(qr_analysis_converged(r));
  EXPECT_EQ(qr_analysis_restarts(r), 2);
  char *text = nullptr;
  ASSERT_EQ(qr_analysis_write(r, QR_FORMAT_JSON, &text), QR_OK);
  EXPECT_NE(take(text).find("\"converged\":false"), std::string::npos);
  qr_analysis_free(r);
  qr_state_free(s);
}

TEST(CApi, OperatorsAndTransform) {
  qr_matrix *b3 = nullptr;
  ASSERT_EQ(qr_operator("b", 3, 2, &b3), QR_OK);
  EXPECT_STREQ(qr_matrix_name(b3), "b(3)");
  std::vector<double> e(32);
  ASSERT_EQ(qr_matrix_entries(b3, e.data(), 16), QR_OK);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) EXPECT_EQ(e[2 * (4 * r + c)], (r ^ c) == 3 ? 1.0 : 0.0);
  }
  qr_matrix_free(b3);

  qr_state *zero = nullptr, *bell = nullptr;
  ASSERT_EQ(qr_state_basis(2, 0, &zero), QR_OK);
  ASSERT_EQ(qr_state_from_json(kBell, 0, &bell), QR_OK);
  qr_analyze_options o;
  qr_analyze_options_init(&o);
  qr_matrix *u = nullptr;
  ASSERT_EQ(qr_transform(zero, bell, &o, &u), QR_OK);
  double err = 1.0;
  ASSERT_EQ(qr_matrix_action_error(u, zero, bell, &err), QR_OK);
  EXPECT_LT(err, 1e-8);
  ASSERT_EQ(qr_matrix_unitarity_error(u, &err), QR_OK);
  EXPECT_LT(err, 1e-10);
  qr_matrix_free(u);
  qr_state_free(zero);
  qr_state_free(bell);
}

TEST(CApi, SpectrumAndHamiltonian) {
  int singular = 0;
  char *text = nullptr;
  ASSERT_EQ(qr_walsh_spectrum(kBell, 0.0, QR_FORMAT_JSON, &singular, &text), QR_OK);
  EXPECT_EQ(singular, 1);
  EXPECT_NE(take(text).find("\"singular\":true"), std::string::npos);

  qr_ham_params p;
  ASSERT_EQ(qr_ham_params_from_json(R"({"omega0":1,"omega1":0.5,"omega2":0.2,"lambda":0})", &p),
            QR_OK);
  double en[4];
  ASSERT_EQ(qr_ham_energies(&p, en), QR_OK);
  EXPECT_DOUBLE_EQ(en[0], 1.7);
  EXPECT_DOUBLE_EQ(en[3], 0.3);
  qr_analyze_options o;
  qr_analyze_options_init(&o);
  ASSERT_EQ(qr_ham_report(&p, &o, QR_FORMAT_CSV, &text), QR_OK);
  EXPECT_EQ(take(text).rfind("field,row,col,re,im\n", 0), 0u);
}

}  // namespace
