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

#include <Eigen/Core>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "kcasimir/dielectric.hpp"
#include "kcasimir/reflection.hpp"

namespace kcasimir {

enum class Regime { drude_long, drude_intermediate, drude_short, hybrid_long, hybrid_short };

std::string_view to_string(Regime r);
Regime regime_from_string(std::string_view s);

/// Regime containing D for the given parameters. Drude: long above c*tau,
/// short below c/omega_p. Hybrid: split at c/omega_p.
Regime classify(const DrudeParams& p, double distance_nm);
Regime classify(const HybridParams& p, double distance_nm);

/// Regime boundaries in nm: c*tau and c/omega_p.
double drude_long_boundary_nm(const DrudeParams& p);
double plasma_length_nm(double omega_p);

/// Which physical quantity a closed form describes.
enum class Quantity { energy, force, energy_1, energy_2, force_1, force_2 };

enum class Special { none, zeta3, zeta4, series };

/// One closed-form coefficient: (num/den) pi^pi_power sqrt(2)^sqrt2_power
/// times an optional special constant. The dimensional scale and the
/// D-dependence live in the prediction code; `group` names the formula
/// family and `id` the quantity within it.
struct Coefficient {
  std::string_view group;
  Quantity quantity;
  long num;
  long den;
  int pi_power;
  int sqrt2_power;
  Special special;

  double value() const;
  std::string id() const;
};

/// The complete table, each coefficient listed once.
std::span<const Coefficient> coefficient_table();

/// Lookup by group and quantity; throws std::out_of_range if absent.
const Coefficient& coefficient(std::string_view group, Quantity q);

struct AsymptoticValue {
  double value = 0.0;     // eV/nm^2 or eV/nm^3
  std::string formula_id;  // group/quantity, or a sum of two ids
};

struct AsymptoticPrediction {
  Regime regime = Regime::drude_long;
  Configuration config = Configuration::polar;
  double distance_nm = 0.0;
  std::optional<AsymptoticValue> delta_E;
  AsymptoticValue delta_F;
  std::optional<AsymptoticValue> e1, e2, f1, f2;
};

/// Closed-form prediction in the requested regime. A regime that does not
/// contain D only triggers a warning. The hybrid short-distance energies
/// need D < c/omega_star; with `with_energy` false they are skipped and
/// only forces are returned.
AsymptoticPrediction drude_predict(const DrudeParams& p, double distance_nm, Configuration config,
                                   Regime regime);
AsymptoticPrediction hybrid_predict(const HybridParams& p, double distance_nm,
                                    Configuration config, Regime regime, bool with_energy = true);

/// sum_{n>=0} (4n+3)!! / ((n+1)(4n+6)!!), summed once by term ratios.
double series_s();

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;  // signed: value ~ prefactor * D^exponent
  double residual = 0.0;   // RMS of ln-residuals
  Eigen::Index points = 0;
};

/// Least-squares line through (ln D, ln|v|). Requires >= 4 points of one
/// sign spanning at least half a decade in D (a factor of 3).
PowerLawFit fit_power_law(const Eigen::ArrayXd& distance_nm, const Eigen::ArrayXd& value);

}  // namespace kcasimir
