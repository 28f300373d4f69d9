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

#include "kcasimir/quantities.hpp"

#include <cmath>

namespace kcasimir {

namespace {
constexpr double kForceFactor = PhysicalConstants::ev_per_nm3_to_pascal *
                                PhysicalConstants::pascal_to_millinewton_per_m2;
}

Distance::Distance(double nm) : nm_(nm) {
  if (!(nm > 0.0) || !std::isfinite(nm)) {
    throw DomainError("distance must be finite and > 0 nm, got " + std::to_string(nm));
  }
}

double EnergyPerArea::joule_per_m2() const { return to_si_energy_per_area(ev_per_nm2); }

double ForcePerArea::millinewton_per_m2() const { return to_si_force_per_area(ev_per_nm3); }

double to_si_energy_per_area(double ev_per_nm2) {
  return ev_per_nm2 * PhysicalConstants::ev_per_nm2_to_joule_per_m2;
}

double to_si_force_per_area(double ev_per_nm3) { return ev_per_nm3 * kForceFactor; }

double from_si_energy_per_area(double joule_per_m2) {
  return joule_per_m2 / PhysicalConstants::ev_per_nm2_to_joule_per_m2;
}

double from_si_force_per_area(double millinewton_per_m2) {
  return millinewton_per_m2 / kForceFactor;
}

}  // namespace kcasimir
