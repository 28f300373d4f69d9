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

#include "doctest.h"
#include "approx.hpp"
#include "kcasimir/diagnostics.hpp"
#include "kcasimir/geometry.hpp"
#include "kcasimir/lifshitz.hpp"
#include "kcasimir/optical_data.hpp"
#include "kcasimir/synthetic.hpp"
#include "support.hpp"

using namespace kcasimir;

TEST_CASE("plate-lens conversion") {
  const LensGeometry lens(100.0);
  CHECK(plate_lens_force(lens, EnergyPerArea{0.0}, 50.0).femtonewton == 0.0);
  // 2 pi R dE with R = 1e5 nm: eV/nm^2 * nm = eV/nm = 1.602176634e-10 N.
  const double f = plate_lens_force(lens, EnergyPerArea{-1e-9}, 50.0).femtonewton;
  CHECK(f == kctest::approx(-2.0 * M_PI * 1e5 * 1e-9 * 1.602176634e-19 / 1e-9 * 1e15).epsilon(1e-14));
  CHECK(PlateLensForce::systematic == 0.10);
}

TEST_CASE("force is linear in the radius") {
  kctest::Gen g(5);
  for (int i = 0; i < 25; ++i) {
    const double r = g.log_uniform(10.0, 1e4);
    const EnergyPerArea e{g.uniform(-1e-6, 1e-6)};
    const double one = plate_lens_force(LensGeometry(r), e, 1.0).femtonewton;
    const double two = plate_lens_force(LensGeometry(2.0 * r), e, 1.0).femtonewton;
    CHECK(two == kctest::approx(2.0 * one).epsilon(1e-15));
  }
}

TEST_CASE("lens validation and the proximity warning") {
  CHECK_THROWS_AS(LensGeometry(0.0), ValidationError);
  CHECK_THROWS_AS(LensGeometry(-3.0), ValidationError);
  CHECK_THROWS_AS(LensGeometry{INFINITY}, ValidationError);
  WarningCapture capture;
  plate_lens_force(LensGeometry(1.0), EnergyPerArea{1e-9}, 5.0);
  CHECK(capture.messages().empty());
  plate_lens_force(LensGeometry(1.0), EnergyPerArea{1e-9}, 20.0);
  CHECK(capture.contains("0.01"));
}

TEST_CASE("iron-like lens forces: magnitude and configuration ratio") {
  const synthetic::FeLikeRecipe r;
  const TabulatedMaterial m = build_cache(
      TabulatedMaterial(synthetic::fe_like_xx_table(r), synthetic::fe_like_tail(r),
                        synthetic::fe_like_xy_table(r)),
      16);
  const LensGeometry lens(100.0);
  const double polar =
      plate_lens_force(lens, EnergyPerArea{energy_polar(same_mirrors(m), 50.0).delta_E}, 50.0)
          .femtonewton;
  const double inplane =
      plate_lens_force(lens, EnergyPerArea{energy_inplane(same_mirrors(m), 50.0).delta_E}, 50.0)
          .femtonewton;
  CHECK(std::abs(polar) > 3.0);
  CHECK(std::abs(polar) < 30.0);
  const double ratio = std::abs(polar / inplane);
  CHECK(ratio > 10.0);
  CHECK(ratio < 1000.0);
}
