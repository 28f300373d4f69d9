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

#include <string_view>

namespace kcasimir {

enum class Configuration { polar, in_plane };

std::string_view to_string(Configuration c);
Configuration configuration_from_string(std::string_view s);

/// Point on the imaginary frequency / imaginary perpendicular wavevector
/// plane: omega = hbar*omega and kc = hbar*c*k_perp, both in eV, with
/// 0 < omega <= kc.
struct KPoint {
  double omega;
  double kc;
};

/// Reflection data of one mirror at one KPoint. The magneto-optical
/// quantities are squares, stored as reals with explicit sign.
struct MoCoefficients {
  double r_ss = 0.0;
  double r_pp = 0.0;
  double rsp2 = 0.0;   // (r_sp)^2; >= 0 polar, <= 0 in-plane
  double drpp2 = 0.0;  // (Delta r_pp)^2; zero polar, <= 0 in-plane
  double xi = 0.0;     // eV
};

/// Amplitude-level reflection data used to form two-mirror products.
///
/// The in-plane amplitudes r_sp and Delta r_pp are purely imaginary on the
/// integration domain; `rsp_inplane` and `drpp_inplane` hold their imaginary
/// parts, so the product of two mirrors' amplitudes is minus the product of
/// these reals. `one_plus_rss` (= 1 + r_ss) and `one_minus_rpp` (= 1 - r_pp)
/// keep full precision near the perfect-mirror limit.
struct Amplitudes {
  double one_plus_rss;
  double one_minus_rpp;
  double rsp_polar;
  double rsp_inplane;
  double drpp_inplane;
};

double xi(const KPoint& pt, double eps_xx);

struct Fresnel {
  double r_ss;
  double r_pp;
};
Fresnel fresnel(const KPoint& pt, double eps_xx);

double rsp2_polar(const KPoint& pt, double eps_xx, double eps_xy);
double rsp2_inplane(const KPoint& pt, double eps_xx, double eps_xy);
double drpp2_inplane(const KPoint& pt, double eps_xx, double eps_xy);

MoCoefficients mo_coefficients(const KPoint& pt, double eps_xx, double eps_xy, Configuration c);

Amplitudes amplitudes(const KPoint& pt, double eps_xx, double eps_xy);

}  // namespace kcasimir
