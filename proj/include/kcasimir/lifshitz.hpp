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

#include <optional>
#include <stdexcept>
#include <string>

#include "kcasimir/dielectric.hpp"
#include "kcasimir/quadrature.hpp"
#include "kcasimir/reflection.hpp"

namespace kcasimir {

/// Two mirrors facing each other. For identical mirrors pass the same
/// response twice; squared reflection amplitudes then become products of
/// the two mirrors' amplitudes.
struct MirrorPair {
  const DielectricResponse& a;
  const DielectricResponse& b;
};

/// The six magnetic Casimir double integrals.
enum class Term { energy_polar, force_polar, energy_longitudinal, energy_transversal,
                  force_longitudinal, force_transversal };

/// Magnetic Casimir interaction (AF minus FM) per unit area at one distance.
///
/// Totals that were not requested are NaN. The in-plane decomposition into
/// the longitudinal (e1, f1) and transversal (e2, f2) Kerr terms is absent
/// for the polar configuration. `err_estimate` is relative to the largest
/// computed magnitude.
struct InteractionResult {
  double distance_nm = 0.0;
  Configuration config = Configuration::polar;
  double delta_E = 0.0;  // eV/nm^2
  double delta_F = 0.0;  // eV/nm^3
  std::optional<double> e1, e2, f1, f2;
  double err_estimate = 0.0;
  bool converged = true;
};

class InteractionConvergenceError : public ConvergenceError {
 public:
  InteractionConvergenceError(const std::string& what, InteractionResult best)
      : ConvergenceError(what, best.delta_E, best.err_estimate), best_(std::move(best)) {}
  const InteractionResult& best() const { return best_; }

 private:
  InteractionResult best_;
};

/// Dimensionless integrand of `term` in x = 2 k_perp D, y = omega/(k_perp c);
/// integrating it over (0, x_max] x [0, 1] and multiplying by
/// term_prefactor(term, D) gives the physical quantity.
Integrand2D lifshitz_integrand(Term term, MirrorPair mirrors, double distance_nm);

/// Prefactor in eV/nm^2 (energies) or eV/nm^3 (forces), including sign.
double term_prefactor(Term term, double distance_nm);

/// Prefactor times the quad2d integral of the term; throws ConvergenceError.
QuadResult evaluate_term(Term term, MirrorPair mirrors, double distance_nm,
                         const QuadratureSettings& settings);

InteractionResult energy_polar(MirrorPair mirrors, double distance_nm,
                               const QuadratureSettings& settings = {});
InteractionResult force_polar(MirrorPair mirrors, double distance_nm,
                              const QuadratureSettings& settings = {});
InteractionResult energy_inplane(MirrorPair mirrors, double distance_nm,
                                 const QuadratureSettings& settings = {});
InteractionResult force_inplane(MirrorPair mirrors, double distance_nm,
                                const QuadratureSettings& settings = {});

/// Energy and force together; on budget exhaustion throws
/// InteractionConvergenceError carrying the best estimates.
InteractionResult interaction(MirrorPair mirrors, double distance_nm, Configuration config,
                              const QuadratureSettings& settings = {});

/// Identical-mirror conveniences.
inline MirrorPair same_mirrors(const DielectricResponse& m) { return MirrorPair{m, m}; }

/// Distance at which the in-plane force changes sign inside [d_lo, d_hi],
/// located to three significant figures, or nullopt when no sign change is
/// bracketed. The bracket is scanned on a log grid with `scan_per_decade`
/// points; when several sign changes are found the smallest is returned and
/// a warning is emitted.
std::optional<double> sign_change_distance(MirrorPair mirrors, double d_lo, double d_hi,
                                           const QuadratureSettings& settings = {},
                                           int scan_per_decade = 4);

}  // namespace kcasimir
