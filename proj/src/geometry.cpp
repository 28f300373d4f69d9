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

#include "kcasimir/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kcasimir/diagnostics.hpp"

namespace kcasimir {

LensGeometry::LensGeometry(double radius_um) : radius_um_(radius_um) {
  if (!std::isfinite(radius_um) || !(radius_um > 0.0)) {
    throw ValidationError("lens radius must be a finite positive number of micrometres, got " +
                          std::to_string(radius_um));
  }
}

PlateLensForce plate_lens_force(const LensGeometry& g, EnergyPerArea delta_e, double distance_nm) {
  if (!std::isfinite(delta_e.ev_per_nm2) || !std::isfinite(distance_nm)) {
    throw ValidationError("plate_lens_force requires finite inputs");
  }
  const double radius_nm = g.radius_um() * 1e3;
  if (distance_nm / radius_nm > 0.01) {
    warn("proximity approximation: D/R = " + std::to_string(distance_nm / radius_nm) +
         " exceeds 0.01");
  }
  // eV/nm^2 * nm = eV/nm = 1.602176634e-10 N = 1.602176634e5 fN.
  const double ev_per_nm_to_fn = PhysicalConstants::electronvolt_to_joule * 1e9 * 1e15;
  return PlateLensForce{2.0 * std::numbers::pi * radius_nm * delta_e.ev_per_nm2 * ev_per_nm_to_fn};
}

}  // namespace kcasimir
