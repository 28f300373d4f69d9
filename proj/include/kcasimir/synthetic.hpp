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

#pragma once

#include "kcasimir/optical_data.hpp"

namespace kcasimir::synthetic {

/// Im eps_xx of the Drude model, omega_p^2 inv_tau / (w (w^2 + inv_tau^2)),
/// sampled log-uniformly over [lo, hi] eV.
OpticalTable drude_loss_table(double omega_p, double inv_tau, double lo, double hi,
                              int points_per_decade);

/// Re eps_xy of a normalized Lorentzian absorption line of full width
/// `width` and area omega_0 * eps_xy_eff, sampled on [omega_0 - 50 width,
/// omega_0 + 50 width]. Approaches the single-line model as width -> 0.
OpticalTable lorentzian_xy_table(double omega_0, double eps_xy_eff, double width, int points);

/// Shape parameters of the iron-like demo dataset. The loss function is a
/// Drude term plus an interband continuum ~ w^-3/2 switched on near
/// `onset` and rolled off above `rolloff`; Re eps_xy is a single broad
/// positive band on [0.1, 6] eV.
struct FeLikeRecipe {
  double omega_p = 3.5;
  double inv_tau = 0.019;
  double interband_strength = 40.0;
  double onset = 0.05;
  double rolloff = 1500.0;
  double xx_lo = 4e-3;
  double xx_hi = 1e4;
  double xy_amplitude = 0.5;
  double xy_center = 1.2;
  double xy_lo = 0.1;
  double xy_hi = 6.0;
  int points_per_decade = 40;
};

double fe_like_im_eps_xx(double omega, const FeLikeRecipe& r = {});
double fe_like_re_eps_xy(double omega, const FeLikeRecipe& r = {});

OpticalTable fe_like_xx_table(const FeLikeRecipe& r = {});
OpticalTable fe_like_xy_table(const FeLikeRecipe& r = {});
DrudeTail fe_like_tail(const FeLikeRecipe& r = {});

}  // namespace kcasimir::synthetic
