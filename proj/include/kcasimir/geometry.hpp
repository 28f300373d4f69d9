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

#include "kcasimir/quantities.hpp"

namespace kcasimir {

/// Lens-shaped mirror facing a plate; radius of curvature in micrometres.
class LensGeometry {
 public:
  explicit LensGeometry(double radius_um);
  double radius_um() const { return radius_um_; }

 private:
  double radius_um_;
};

/// Total plate-lens force in femtonewtons. Kept distinct from the
/// plate-plate ForcePerArea so the two cannot be mixed.
struct PlateLensForce {
  double femtonewton = 0.0;
  /// Relative systematic uncertainty of the proximity approximation.
  static constexpr double systematic = 0.10;
};

/// Proximity-force estimate 2 pi R dE(D). Warns when D/R > 0.01.
PlateLensForce plate_lens_force(const LensGeometry& g, EnergyPerArea delta_e, double distance_nm);

}  // namespace kcasimir
