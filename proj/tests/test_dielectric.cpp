// Copyright (c) 2026 The kerr-casimir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <complex>
#include <memory>

#include "doctest.h"
#include "approx.hpp"
#include "kcasimir/diagnostics.hpp"
#include "kcasimir/dielectric.hpp"
#include "kcasimir/quantities.hpp"
#include "support.hpp"

using namespace kcasimir;
using cd = std::complex<double>;

namespace {

// Real-frequency Drude response continued to omega = i*xi.
double drude_xx_oracle(double xi, const DrudeParams& p) {
  const cd w(0.0, xi);
  return std::real(1.0 - p.omega_p * p.omega_p / (w * (w + cd(0.0, p.inv_tau))));
}

double drude_xy_oracle(double xi, const DrudeParams& p) {
  const cd w(0.0, xi);
  const cd s = w + cd(0.0, p.inv_tau);
  return std::real(cd(0.0, -1.0) * p.omega_p * p.omega_p * p.omega_c / (w * s * s));
}

}  // namespace

TEST_CASE("Drude diagonal response") {
  const DrudeParams p;
  const double wp_tau = p.omega_p / p.inv_tau;
  CHECK(drude_eps_xx(p.inv_tau, p) == kctest::approx(1.0 + wp_tau * wp_tau / 2.0).epsilon(1e-14));
  CHECK(drude_eps_xx(1e6, p) - 1.0 < 1e-10);
  // omega << 1/tau: 1 + omega_p^2 tau / omega.
  const double w = 1e-4;
  CHECK(drude_eps_xx(w, p) == kctest::approx(1.0 + p.omega_p * p.omega_p / (p.inv_tau * w)).epsilon(0.02));
}

// The two quoted figures below are rounded or first-order statements that the
// exact model misses: 1 + (w_p tau)^2 / 2 = 1.12045e6, and at w = 1e-4 eV the
// off-diagonal sits (1 + w tau)^-2 = 0.970 below the low-frequency form.
// Kept as stated and allowed to fail.
TEST_CASE("quoted Drude figures" * doctest::may_fail()) {
  const DrudeParams p;
  CHECK(drude_eps_xx(p.inv_tau, p) == kctest::approx(1.1206e6).epsilon(1e-4));
  const double w = 1e-4;
  CHECK(drude_eps_xy(w, p) ==
        kctest::approx(p.omega_p * p.omega_p * p.omega_c / (p.inv_tau * p.inv_tau * w)).epsilon(0.02));
}

TEST_CASE("Drude off-diagonal response") {
  DrudeParams p;
  const double g = p.inv_tau;
  // omega = 1/tau: omega_p^2 omega_c tau^3 / 4 in energy units.
  CHECK(drude_eps_xy(g, p) ==
        kctest::approx(p.omega_p * p.omega_p * p.omega_c / (4.0 * g * g * g)).epsilon(1e-14));
  const double w = 1e-4;
  const double low = p.omega_p * p.omega_p * p.omega_c / (g * g * w);
  CHECK(drude_eps_xy(w, p) == kctest::approx(low / ((1.0 + w / g) * (1.0 + w / g))).epsilon(1e-14));
  p.omega_c = 1e-300;
  CHECK(drude_eps_xy(1.0, p) < 1e-290);
}

TEST_CASE("Drude forms agree with the continued real-frequency response") {
  kctest::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    DrudeParams p{gen.uniform(1.0, 20.0), gen.log_uniform(1e-4, 1e-1), gen.log_uniform(1e-3, 1e-1)};
    const double xi = gen.log_uniform(1e-6, 1e4);
    CHECK(drude_eps_xx(xi, p) == kctest::approx(drude_xx_oracle(xi, p)).epsilon(1e-12));
    CHECK(drude_eps_xy(xi, p) == kctest::approx(drude_xy_oracle(xi, p)).epsilon(1e-12));
  }
}

TEST_CASE("plasma diagonal response") {
  HybridParams p;
  CHECK(plasma_eps_xx(p.omega_p, p) == kctest::approx(2.0));
  CHECK(plasma_eps_xx(p.omega_p / 10, p) == kctest::approx(101.0));
  CHECK(plasma_eps_xx(p.omega_p * 10, p) == kctest::approx(1.01));
}

TEST_CASE("single-line off-diagonal response") {
  const HybridParams p;
  CHECK(hybrid_eps_xy(p.omega_0, p) == kctest::approx(p.eps_xy_eff / M_PI).epsilon(1e-14));
  const double lo = p.omega_0 / 1000;
  CHECK(hybrid_eps_xy(lo, p) == kctest::approx(2.0 / M_PI * p.omega_0 * p.eps_xy_eff / lo).epsilon(1e-5));
  const double hi = p.omega_0 * 1000;
  CHECK(hybrid_eps_xy(hi, p) ==
        kctest::approx(2.0 / M_PI * std::pow(p.omega_0, 3) * p.eps_xy_eff / std::pow(hi, 3)).epsilon(1e-5));
  CHECK(p.omega_star == kctest::approx(2.0 * std::exp(1.0) * 9.85));
}

TEST_CASE("non-positive frequencies are domain errors") {
  const DrudeParams d;
  const HybridParams h;
  CHECK_THROWS_AS(drude_eps_xx(0.0, d), DomainError);
  CHECK_THROWS_AS(drude_eps_xy(-1.0, d), DomainError);
  CHECK_THROWS_AS(plasma_eps_xx(0.0, h), DomainError);
  CHECK_THROWS_AS(hybrid_eps_xy(-2.0, h), DomainError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DrudeModel(DrudeParams{-1.0, 1e-3, 1e-2}), ValidationError);
  CHECK_THROWS_AS(DrudeModel(DrudeParams{9.85, 0.0, 1e-2}), ValidationError);
  CHECK_THROWS_AS(HybridModel(HybridParams{9.85, 3.9, 0.0}), ValidationError);
  {
    WarningCapture cap;
    DrudeModel ok{DrudeParams{}};
    CHECK(cap.messages().empty());
  }
  {
    WarningCapture cap;
    DrudeModel odd{DrudeParams{9.85, 0.1, 0.01}};  // omega_c tau = 10
    CHECK(cap.contains("omega_c*tau"));
  }
}

TEST_CASE("property: shipped models are monotone with eps_xx >= 1") {
  kctest::Gen gen(2026);
  for (int trial = 0; trial < 50; ++trial) {
    const DrudeModel drude(DrudeParams{gen.uniform(1.0, 20.0), gen.log_uniform(1e-4, 1e-2),
                                       gen.log_uniform(1e-2, 1e-1)});
    const HybridModel hybrid(
        HybridParams::with_default_cutoff(gen.uniform(1.0, 20.0), gen.uniform(0.5, 8.0), gen.log_uniform(1e-3, 1e-1)));
    for (const DielectricResponse* m : {static_cast<const DielectricResponse*>(&drude),
                                        static_cast<const DielectricResponse*>(&hybrid)}) {
      double prev = INFINITY;
      for (double w = 1e-5; w < 1e5; w *= 1.7) {
        const double e = m->eps_xx(w);
        CHECK(e >= 1.0);
        CHECK(e - 1.0 > 0.0);
        CHECK(e < prev);
        CHECK(m->eps_xy(w) > 0.0);
        prev = e;
      }
      CHECK(m->eps_xy(1e8) < 1e-12);
      // Deterministic pure function.
      CHECK(m->eps_xx(0.37) == m->eps_xx(0.37));
    }
  }
}

TEST_CASE("reversing the magnetization negates eps_xy only") {
  auto inner = std::make_shared<DrudeModel>(DrudeParams{});
  const ScaledOffDiagonal rev(inner, -1.0);
  for (double w : {1e-3, 0.1, 10.0}) {
    CHECK(rev.eps_xx(w) == inner->eps_xx(w));
    CHECK(rev.eps_xy(w) == -inner->eps_xy(w));
  }
}
