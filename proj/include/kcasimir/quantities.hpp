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

#include <stdexcept>
#include <string>

namespace kcasimir {

// Internal unit system: every frequency is carried as the energy hbar*omega
// in eV, every length in nm. Energies per area are eV/nm^2 and forces per
// area eV/nm^3.
struct PhysicalConstants {
  // CODATA hbar*c in eV*nm.
  static constexpr double hbar_c = 197.3269804;
  // 1 eV/nm^2 = 1.602176634e-19 J / 1e-18 m^2.
  static constexpr double ev_per_nm2_to_joule_per_m2 = 0.1602176634;
  // 1 eV/nm^3 = 1.602176634e-19 J / 1e-27 m^3 = 1.602176634e8 Pa.
  static constexpr double ev_per_nm3_to_pascal = 1.602176634e8;
  static constexpr double pascal_to_millinewton_per_m2 = 1.0e3;
  // 1 eV = 1.602176634e-19 J, used by the plate-lens conversion.
  static constexpr double electronvolt_to_joule = 1.602176634e-19;
  static constexpr double zeta3 = 1.2020569031595942854;
  static constexpr double zeta4 = 1.0823232337111381915;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plate separation in nm, strictly positive.
class Distance {
 public:
  explicit Distance(double nm);
  double nm() const { return nm_; }

 private:
  double nm_;
};

/// Energy per unit area in eV/nm^2.
struct EnergyPerArea {
  double ev_per_nm2 = 0.0;
  double joule_per_m2() const;
};

/// Force per unit area (plate-plate) in eV/nm^3.
struct ForcePerArea {
  double ev_per_nm3 = 0.0;
  double millinewton_per_m2() const;
};

double to_si_energy_per_area(double ev_per_nm2);
double to_si_force_per_area(double ev_per_nm3);
double from_si_energy_per_area(double joule_per_m2);
double from_si_force_per_area(double millinewton_per_m2);

}  // namespace kcasimir
