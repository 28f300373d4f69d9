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

#include "kcasimir/reflection.hpp"

#include <cmath>
#include <string>

#include "kcasimir/quantities.hpp"

namespace kcasimir {

std::string_view to_string(Configuration c) {
  return c == Configuration::polar ? "polar" : "in-plane";
}

Configuration configuration_from_string(std::string_view s) {
  if (s == "polar") return Configuration::polar;
  if (s == "in-plane" || s == "inplane" || s == "in_plane") return Configuration::in_plane;
  throw ValidationError("unknown configuration '" + std::string(s) +
                        "' (expected polar or in-plane)");
}

namespace {

void check_point(const KPoint& pt) {
  if (!(pt.omega > 0.0) || !(pt.kc > 0.0)) {
    throw DomainError("KPoint requires omega > 0 and kc > 0");
  }
}

// kc^2 - omega^2 >= 0 on the integration domain; tiny negative values from
// rounding on the light line are clamped.
double light_line_gap(const KPoint& pt) {
  if (pt.omega > pt.kc * (1.0 + 1e-12)) {
    throw DomainError("in-plane coefficients require omega <= kc");
  }
  return std::max(0.0, (pt.kc - pt.omega) * (pt.kc + pt.omega));
}

}  // namespace

double xi(const KPoint& pt, double eps_xx) {
  check_point(pt);
  if (!(eps_xx >= 1.0)) {
    throw DomainError("xi requires eps_xx >= 1, got " + std::to_string(eps_xx));
  }
  return std::sqrt(pt.omega * pt.omega * (eps_xx - 1.0) + pt.kc * pt.kc);
}

Fresnel fresnel(const KPoint& pt, double eps_xx) {
  const double x = xi(pt, eps_xx);
  return Fresnel{(pt.kc - x) / (pt.kc + x), (eps_xx * pt.kc - x) / (eps_xx * pt.kc + x)};
}

Amplitudes amplitudes(const KPoint& pt, double eps_xx, double eps_xy) {
  const double x = xi(pt, eps_xx);
  const double kc = pt.kc;
  const double s_den = kc + x;
  const double p_den = eps_xx * kc + x;
  const double root = std::sqrt(std::max(0.0, (kc - pt.omega) * (kc + pt.omega)));
  Amplitudes a{};
  a.one_plus_rss = 2.0 * kc / s_den;
  a.one_minus_rpp = 2.0 * x / p_den;
  a.rsp_polar = -kc * pt.omega * eps_xy / (s_den * p_den);
  a.rsp_inplane = -root * pt.omega * eps_xy * kc / (s_den * p_den * x);
  a.drpp_inplane = 2.0 * root * eps_xy * kc / (p_den * p_den);
  return a;
}

double rsp2_polar(const KPoint& pt, double eps_xx, double eps_xy) {
  const double x = xi(pt, eps_xx);
  const double num = pt.kc * pt.omega * eps_xy;
  const double den = (pt.kc + x) * (eps_xx * pt.kc + x);
  const double r = num / den;
  return r * r;
}

double rsp2_inplane(const KPoint& pt, double eps_xx, double eps_xy) {
  const double gap = light_line_gap(pt);
  const double x = xi(pt, eps_xx);
  const double amp = pt.omega * eps_xy * pt.kc / ((pt.kc + x) * (eps_xx * pt.kc + x) * x);
  return -gap * amp * amp;
}

double drpp2_inplane(const KPoint& pt, double eps_xx, double eps_xy) {
  const double gap = light_line_gap(pt);
  const double x = xi(pt, eps_xx);
  const double p_den = eps_xx * pt.kc + x;
  const double amp = eps_xy * pt.kc / (p_den * p_den);
  return -4.0 * gap * amp * amp;
}

MoCoefficients mo_coefficients(const KPoint& pt, double eps_xx, double eps_xy, Configuration c) {
  MoCoefficients m;
  const Fresnel f = fresnel(pt, eps_xx);
  m.r_ss = f.r_ss;
  m.r_pp = f.r_pp;
  m.xi = xi(pt, eps_xx);
  if (c == Configuration::polar) {
    m.rsp2 = rsp2_polar(pt, eps_xx, eps_xy);
    m.drpp2 = 0.0;
  } else {
    m.rsp2 = rsp2_inplane(pt, eps_xx, eps_xy);
    m.drpp2 = drpp2_inplane(pt, eps_xx, eps_xy);
  }
  return m;
}

}  // namespace kcasimir
