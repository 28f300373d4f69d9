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

#include "kcasimir/synthetic.hpp"

#include <cmath>
#include <numbers>

#include "kcasimir/quantities.hpp"

namespace kcasimir::synthetic {

namespace {

Eigen::ArrayXd log_grid(double lo, double hi, int points_per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || points_per_decade < 1) {
    throw ValidationError("log grid requires 0 < lo < hi and points_per_decade >= 1");
  }
  const int n = static_cast<int>(std::ceil(std::log10(hi / lo) * points_per_decade)) + 1;
  return Eigen::ArrayXd::LinSpaced(n, std::log(lo), std::log(hi)).exp();
}

}  // namespace

OpticalTable drude_loss_table(double omega_p, double inv_tau, double lo, double hi,
                              int points_per_decade) {
  const Eigen::ArrayXd w = log_grid(lo, hi, points_per_decade);
  const Eigen::ArrayXd v = omega_p * omega_p * inv_tau / (w * (w.square() + inv_tau * inv_tau));
  return OpticalTable(TableKind::im_eps_xx, w, v, "synthetic drude loss");
}

OpticalTable lorentzian_xy_table(double omega_0, double eps_xy_eff, double width, int points) {
  if (!(width > 0.0) || !(omega_0 > 50.0 * width) || points < 3) {
    throw ValidationError("lorentzian table needs 0 < 50*width < omega_0 and >= 3 points");
  }
  const Eigen::ArrayXd w =
      Eigen::ArrayXd::LinSpaced(points, omega_0 - 50.0 * width, omega_0 + 50.0 * width);
  const double half = 0.5 * width;
  const Eigen::ArrayXd v =
      omega_0 * eps_xy_eff * (half / std::numbers::pi) / ((w - omega_0).square() + half * half);
  return OpticalTable(TableKind::re_eps_xy, w, v, "synthetic lorentzian line");
}

double fe_like_im_eps_xx(double omega, const FeLikeRecipe& r) {
  const double g = r.inv_tau;
  const double drude = r.omega_p * r.omega_p * g / (omega * (omega * omega + g * g));
  const double s = omega / r.onset;
  const double on = s * s / (1.0 + s * s);
  const double off = 1.0 / (1.0 + std::pow(omega / r.rolloff, 2));
  return drude + r.interband_strength * std::pow(omega, -1.5) * on * off;
}

double fe_like_re_eps_xy(double omega, const FeLikeRecipe& r) {
  // Log-normal band, one decade wide.
  const double u = std::log(omega / r.xy_center);
  return r.xy_amplitude * std::exp(-u * u / 2.0);
}

OpticalTable fe_like_xx_table(const FeLikeRecipe& r) {
  const Eigen::ArrayXd w = log_grid(r.xx_lo, r.xx_hi, r.points_per_decade);
  const Eigen::ArrayXd v = w.unaryExpr([&](double x) { return fe_like_im_eps_xx(x, r); });
  return OpticalTable(TableKind::im_eps_xx, w, v, "fe-like synthetic Im eps_xx");
}

OpticalTable fe_like_xy_table(const FeLikeRecipe& r) {
  const Eigen::ArrayXd w = log_grid(r.xy_lo, r.xy_hi, r.points_per_decade);
  const Eigen::ArrayXd v = w.unaryExpr([&](double x) { return fe_like_re_eps_xy(x, r); });
  return OpticalTable(TableKind::re_eps_xy, w, v, "fe-like synthetic Re eps_xy");
}

DrudeTail fe_like_tail(const FeLikeRecipe& r) { return DrudeTail{r.omega_p, r.inv_tau}; }

}  // namespace kcasimir::synthetic
