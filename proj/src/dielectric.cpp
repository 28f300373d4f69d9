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

#include "kcasimir/dielectric.hpp"

#include <cmath>
#include <string>

#include "kcasimir/diagnostics.hpp"
#include "kcasimir/quantities.hpp"

namespace kcasimir {

namespace {

void require_positive_frequency(double omega, const char* what) {
  if (!(omega > 0.0)) {
    throw DomainError(std::string(what) + ": imaginary frequency must be > 0 eV, got " +
                      std::to_string(omega));
  }
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string(name) + " must be finite and > 0, got " + std::to_string(v));
  }
}

}  // namespace

void DrudeParams::validate() const {
  require_positive(omega_p, "omega_p");
  require_positive(omega_c, "omega_c");
  require_positive(inv_tau, "inv_tau");
  // omega_c*tau = omega_c/inv_tau and omega_p*tau = omega_p/inv_tau.
  if (!(omega_c < inv_tau && inv_tau < omega_p)) {
    warn("Drude parameters violate omega_c*tau << 1 << omega_p*tau (omega_c*tau = " +
         std::to_string(omega_c / inv_tau) + ", omega_p*tau = " + std::to_string(omega_p / inv_tau) +
         ")");
  }
}

HybridParams HybridParams::with_default_cutoff(double omega_p, double omega_0, double eps_xy_eff) {
  return HybridParams{omega_p, omega_0, eps_xy_eff, 2.0 * std::numbers::e * omega_p};
}

void HybridParams::validate() const {
  require_positive(omega_p, "omega_p");
  require_positive(omega_0, "omega_0");
  require_positive(eps_xy_eff, "eps_xy_eff");
  require_positive(omega_star, "omega_star");
}

// With gamma = hbar/tau, omega_p^2 tau / (omega (1 + omega tau)) becomes
// omega_p^2 / (omega (omega + gamma)) in energy units.
double drude_eps_xx(double omega, const DrudeParams& p) {
  require_positive_frequency(omega, "drude_eps_xx");
  return 1.0 + p.omega_p * p.omega_p / (omega * (omega + p.inv_tau));
}

double drude_eps_xy(double omega, const DrudeParams& p) {
  require_positive_frequency(omega, "drude_eps_xy");
  const double s = omega + p.inv_tau;
  return p.omega_p * p.omega_p * p.omega_c / (omega * s * s);
}

double plasma_eps_xx(double omega, const HybridParams& p) {
  require_positive_frequency(omega, "plasma_eps_xx");
  const double r = p.omega_p / omega;
  return 1.0 + r * r;
}

double hybrid_eps_xy(double omega, const HybridParams& p) {
  require_positive_frequency(omega, "hybrid_eps_xy");
  const double w0 = p.omega_0;
  return (2.0 / std::numbers::pi) * w0 * w0 * w0 * p.eps_xy_eff /
         (omega * (w0 * w0 + omega * omega));
}

DrudeModel::DrudeModel(const DrudeParams& p) : p_(p) { p_.validate(); }

HybridModel::HybridModel(const HybridParams& p) : p_(p) { p_.validate(); }

ScaledOffDiagonal::ScaledOffDiagonal(std::shared_ptr<const DielectricResponse> inner, double factor)
    : inner_(std::move(inner)), factor_(factor) {
  if (!inner_) throw ValidationError("ScaledOffDiagonal: null inner response");
}

}  // namespace kcasimir
