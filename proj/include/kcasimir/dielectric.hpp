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

#include <memory>
#include <numbers>

namespace kcasimir {

/// Dielectric tensor of a magnetized mirror on the imaginary frequency axis.
///
/// `omega` is hbar*omega in eV and must be > 0. eps_xx(i omega) is real and
/// >= 1; eps_xy(i omega) is real and changes sign with the magnetization.
class DielectricResponse {
 public:
  virtual ~DielectricResponse() = default;
  virtual double eps_xx(double omega) const = 0;
  virtual double eps_xy(double omega) const = 0;
};

/// Drude parameters, all energies in eV: plasma (hbar*omega_p), cyclotron
/// (hbar*omega_c) and relaxation rate (hbar/tau).
struct DrudeParams {
  double omega_p = 9.85;
  double omega_c = 5.9e-3;
  double inv_tau = 6.58e-3;

  /// Throws ValidationError unless every field is > 0. Warns when the usual
  /// ordering omega_c*tau << 1 << omega_p*tau does not hold.
  void validate() const;
};

/// Plasma-model diagonal plus a single absorption line off-diagonal.
struct HybridParams {
  double omega_p = 9.85;
  double omega_0 = 3.9;
  double eps_xy_eff = 1.5e-2;
  /// Logarithmic cutoff used by the short-distance closed forms.
  double omega_star = 2.0 * std::numbers::e * 9.85;

  static HybridParams with_default_cutoff(double omega_p, double omega_0, double eps_xy_eff);
  void validate() const;
};

double drude_eps_xx(double omega, const DrudeParams& p);
double drude_eps_xy(double omega, const DrudeParams& p);
double plasma_eps_xx(double omega, const HybridParams& p);
double hybrid_eps_xy(double omega, const HybridParams& p);

class DrudeModel final : public DielectricResponse {
 public:
  explicit DrudeModel(const DrudeParams& p);
  double eps_xx(double omega) const override { return drude_eps_xx(omega, p_); }
  double eps_xy(double omega) const override { return drude_eps_xy(omega, p_); }
  const DrudeParams& params() const { return p_; }

 private:
  DrudeParams p_;
};

class HybridModel final : public DielectricResponse {
 public:
  explicit HybridModel(const HybridParams& p);
  double eps_xx(double omega) const override { return plasma_eps_xx(omega, p_); }
  double eps_xy(double omega) const override { return hybrid_eps_xy(omega, p_); }
  const HybridParams& params() const { return p_; }

 private:
  HybridParams p_;
};

/// Wraps another response and multiplies eps_xy by `factor`. A factor of -1
/// models a mirror with reversed magnetization; 0 switches magneto-optics off.
class ScaledOffDiagonal final : public DielectricResponse {
 public:
  ScaledOffDiagonal(std::shared_ptr<const DielectricResponse> inner, double factor);
  double eps_xx(double omega) const override { return inner_->eps_xx(omega); }
  double eps_xy(double omega) const override { return factor_ * inner_->eps_xy(omega); }

 private:
  std::shared_ptr<const DielectricResponse> inner_;
  double factor_;
};

}  // namespace kcasimir
