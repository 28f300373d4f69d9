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

#include <cmath>
#include <memory>

#include "doctest.h"
#include "approx.hpp"
#include "kcasimir/asymptotics.hpp"
#include "kcasimir/diagnostics.hpp"
#include "kcasimir/lifshitz.hpp"
#include "kcasimir/quantities.hpp"
#include "support.hpp"

using namespace kcasimir;

namespace {

const DrudeModel& drude() {
  static const DrudeModel m{DrudeParams{}};
  return m;
}

const HybridModel& hybrid() {
  static const HybridModel m{HybridParams{}};
  return m;
}

struct NoMagnetoOptics final : DielectricResponse {
  double eps_xx(double w) const override { return drude().eps_xx(w); }
  double eps_xy(double) const override { return 0.0; }
};

}  // namespace

TEST_CASE("no off-diagonal response means no magnetic interaction") {
  const NoMagnetoOptics m;
  const InteractionResult p = interaction(same_mirrors(m), 50.0, Configuration::polar);
  CHECK(p.delta_E == 0.0);
  CHECK(p.delta_F == 0.0);
  const InteractionResult i = interaction(same_mirrors(m), 50.0, Configuration::in_plane);
  CHECK(i.delta_E == 0.0);
  CHECK(i.delta_F == 0.0);
  CHECK(*i.e1 == 0.0);
  CHECK(*i.f2 == 0.0);
  CHECK_FALSE(sign_change_distance(same_mirrors(m), 10.0, 200.0).has_value());
}

TEST_CASE("prefactor and measure reproduce the degenerate closed form") {
  // With r_ss = r_pp = 0 and rsp2 frozen to kappa the polar energy integrand
  // is kappa x^2 e^-x, whose integral is 2 kappa.
  const double kappa = 0.37, d = 12.0;
  const QuadResult raw = quad2d([&](double x, double) { return kappa * x * x * std::exp(-x); }, {});
  const double e = term_prefactor(Term::energy_polar, d) * raw.value;
  CHECK(e == kctest::approx(-PhysicalConstants::hbar_c * kappa / (4.0 * M_PI * M_PI * d * d * d)).epsilon(1e-6));
}

TEST_CASE("signs of every term for the shipped models") {
  for (const DielectricResponse* m : {static_cast<const DielectricResponse*>(&drude()),
                                      static_cast<const DielectricResponse*>(&hybrid())}) {
    for (double d : {2.0, 30.0, 700.0}) {
      const InteractionResult p = interaction(same_mirrors(*m), d, Configuration::polar);
      CHECK(p.delta_E < 0.0);
      CHECK(p.delta_F < 0.0);
      CHECK_FALSE(p.e1.has_value());
      const InteractionResult i = interaction(same_mirrors(*m), d, Configuration::in_plane);
      CHECK(*i.e1 <= 0.0);
      CHECK(*i.e2 >= 0.0);
      CHECK(i.delta_E == kctest::approx(*i.e1 + *i.e2));
      CHECK(i.delta_F == kctest::approx(*i.f1 + *i.f2));
      CHECK(i.err_estimate < 1e-5);
    }
  }
}

TEST_CASE("Drude quadrature near the intermediate closed forms at 500 nm") {
  const DrudeParams p;
  const double d = 500.0;
  const InteractionResult pol = interaction(same_mirrors(drude()), d, Configuration::polar);
  const AsymptoticPrediction ap = drude_predict(p, d, Configuration::polar, Regime::drude_intermediate);
  CHECK(pol.delta_E / ap.delta_E->value == kctest::approx(1.0).epsilon(0.25));
  CHECK(pol.delta_F / ap.delta_F.value == kctest::approx(1.0).epsilon(0.25));
  const InteractionResult inp = interaction(same_mirrors(drude()), d, Configuration::in_plane);
  const AsymptoticPrediction ai = drude_predict(p, d, Configuration::in_plane, Regime::drude_intermediate);
  CHECK(inp.delta_E / ai.delta_E->value == kctest::approx(1.0).epsilon(0.25));
  CHECK(inp.delta_F / ai.delta_F.value == kctest::approx(1.0).epsilon(0.25));
}

TEST_CASE("clean Drude metal approaches the retarded closed forms") {
  // Collisions pushed far below every frequency of interest isolate the
  // c/omega_p << D << c tau behaviour.
  DrudeParams p;
  p.inv_tau = 1e-6;
  p.omega_c = 1e-7;
  WarningCapture quiet;
  const DrudeModel m(p);
  const double d = 1e5;
  const auto pol = interaction(same_mirrors(m), d, Configuration::polar);
  const auto ap = drude_predict(p, d, Configuration::polar, Regime::drude_intermediate);
  CHECK(pol.delta_F / ap.delta_F.value == kctest::approx(1.0).epsilon(0.02));
  const auto inp = interaction(same_mirrors(m), d, Configuration::in_plane);
  const auto ai = drude_predict(p, d, Configuration::in_plane, Regime::drude_intermediate);
  CHECK(*inp.e1 / ai.e1->value == kctest::approx(1.0).epsilon(0.02));
  CHECK(*inp.e2 / ai.e2->value == kctest::approx(1.0).epsilon(0.02));
  CHECK(*inp.f1 / ai.f1->value == kctest::approx(1.0).epsilon(0.02));
  CHECK(*inp.f2 / ai.f2->value == kctest::approx(1.0).epsilon(0.02));
}

TEST_CASE("short-distance transversal term converges to its closed form") {
  const DrudeParams p;
  const auto inp = interaction(same_mirrors(drude()), 0.01, Configuration::in_plane);
  const auto a = drude_predict(p, 0.01, Configuration::in_plane, Regime::drude_short);
  CHECK(*inp.e2 / a.e2->value == kctest::approx(1.0).epsilon(0.01));
  CHECK(*inp.f2 / a.f2->value == kctest::approx(1.0).epsilon(0.01));
}

TEST_CASE("fixed-grid oracle reproduces the polar energy at 500 nm") {
  const double d = 500.0;
  const auto f = lifshitz_integrand(Term::energy_polar, same_mirrors(drude()), d);
  const QuadResult adaptive = quad2d(f, QuadratureSettings{});
  const double grid = kctest::trapezoid_2d(f, 60.0, 2000);
  CHECK(kctest::rel_diff(adaptive.value, grid) < 1e-3);
}

TEST_CASE("forces are minus the distance derivative of the energies") {
  for (double d : {3.0, 150.0}) {
    for (Configuration c : {Configuration::polar, Configuration::in_plane}) {
      const auto r = interaction(same_mirrors(drude()), d, c);
      const double h = d / 200.0;
      if (c == Configuration::polar) {
        auto energy = [&](double t) { return energy_polar(same_mirrors(drude()), t).delta_E; };
        CHECK(kctest::rel_diff(r.delta_F, -kctest::derivative_5pt(energy, d, h)) < 5e-3);
      } else {
        auto e1 = [&](double t) { return *energy_inplane(same_mirrors(drude()), t).e1; };
        auto e2 = [&](double t) { return *energy_inplane(same_mirrors(drude()), t).e2; };
        CHECK(kctest::rel_diff(*r.f1, -kctest::derivative_5pt(e1, d, h)) < 5e-3);
        CHECK(kctest::rel_diff(*r.f2, -kctest::derivative_5pt(e2, d, h)) < 5e-3);
      }
    }
  }
}

TEST_CASE("energy scales with the square of the off-diagonal strength") {
  auto base = std::make_shared<HybridModel>(HybridParams{});
  const ScaledOffDiagonal scaled(base, 3.0);
  const double e0 = energy_polar(same_mirrors(*base), 20.0).delta_E;
  const double e1 = energy_polar(same_mirrors(scaled), 20.0).delta_E;
  CHECK(e1 / e0 == kctest::approx(9.0).epsilon(1e-5));
}

TEST_CASE("reversing one mirror flips the interaction") {
  auto base = std::make_shared<DrudeModel>(DrudeParams{});
  const ScaledOffDiagonal reversed(base, -1.0);
  for (Configuration c : {Configuration::polar, Configuration::in_plane}) {
    const auto same = interaction(MirrorPair{*base, *base}, 25.0, c);
    const auto flip = interaction(MirrorPair{*base, reversed}, 25.0, c);
    CHECK(flip.delta_E == kctest::approx(-same.delta_E).epsilon(1e-12));
    CHECK(flip.delta_F == kctest::approx(-same.delta_F).epsilon(1e-12));
  }
}

TEST_CASE("mirror order does not matter") {
  const auto ab = interaction(MirrorPair{drude(), hybrid()}, 40.0, Configuration::in_plane);
  const auto ba = interaction(MirrorPair{hybrid(), drude()}, 40.0, Configuration::in_plane);
  CHECK(ab.delta_E == kctest::approx(ba.delta_E).epsilon(1e-12));
  CHECK(ab.delta_F == kctest::approx(ba.delta_F).epsilon(1e-12));
}

TEST_CASE("in-plane sign change of the Drude mirrors") {
  const auto root = sign_change_distance(same_mirrors(drude()), 10.0, 200.0);
  REQUIRE(root.has_value());
  CHECK(*root > 20.0);
  CHECK(*root < 80.0);
  const double below = force_inplane(same_mirrors(drude()), 10.0).delta_F;
  const double above = force_inplane(same_mirrors(drude()), 200.0).delta_F;
  CHECK(below * above < 0.0);
}

TEST_CASE("hybrid mirrors never change sign") {
  CHECK_FALSE(sign_change_distance(same_mirrors(hybrid()), 1.0, 1e4).has_value());
}

TEST_CASE("monotone tail over the last decade") {
  for (const DielectricResponse* m : {static_cast<const DielectricResponse*>(&drude()),
                                      static_cast<const DielectricResponse*>(&hybrid())}) {
    for (Configuration c : {Configuration::polar, Configuration::in_plane}) {
      double prev = INFINITY;
      for (double d = 1000.0; d <= 10000.0 * 1.0001; d *= std::sqrt(10.0) / 1.5) {
        const double e = std::abs(interaction(same_mirrors(*m), d, c).delta_E);
        CHECK(e < prev);
        prev = e;
      }
    }
  }
}

TEST_CASE("err_estimate is honest under tolerance halving") {
  QuadratureSettings s1, s2;
  s1.rel_tol = 1e-5;
  s2.rel_tol = 5e-6;
  int total = 0, honest = 0;
  for (double d = 1.0; d < 1e4; d *= 2.2) {
    for (Configuration c : {Configuration::polar, Configuration::in_plane}) {
      const auto a = interaction(same_mirrors(drude()), d, c, s1);
      const auto b = interaction(same_mirrors(drude()), d, c, s2);
      const double scale = c == Configuration::polar
                               ? std::abs(a.delta_F)
                               : std::max(std::abs(*a.f1), std::abs(*a.f2));
      ++total;
      if (std::abs(a.delta_F - b.delta_F) <= a.err_estimate * scale) ++honest;
    }
  }
  CHECK(honest >= 0.95 * total);
}

TEST_CASE("starved quadrature reports the best estimate") {
  QuadratureSettings s;
  s.max_subdivisions = 2;
  s.rel_tol = 1e-8;
  try {
    interaction(same_mirrors(drude()), 5.0, Configuration::polar, s);
    FAIL("expected InteractionConvergenceError");
  } catch (const InteractionConvergenceError& e) {
    CHECK_FALSE(e.best().converged);
    CHECK(e.best().delta_F < 0.0);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(interaction(same_mirrors(drude()), 0.0, Configuration::polar), DomainError);
  CHECK_THROWS_AS(sign_change_distance(same_mirrors(drude()), 100.0, 10.0), ValidationError);
}
