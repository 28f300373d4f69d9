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

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcasimir {

struct QuadratureSettings {
  double rel_tol = 1e-6;
  double abs_tol = 1e-30;
  /// Upper limit of the damped axis; e^{-x_max} bounds the neglected tail.
  double x_max = 60.0;
  /// Interval bisections allowed per one-dimensional adaptive pass.
  int max_subdivisions = 2000;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = true;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_value, double achieved_error)
      : std::runtime_error(what), best_value_(best_value), achieved_error_(achieved_error) {}
  double best_value() const { return best_value_; }
  double achieved_error() const { return achieved_error_; }

 private:
  double best_value_;
  double achieved_error_;
};

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double x, double y)>;

/// Globally adaptive 15-point Gauss-Kronrod quadrature over [a, b], seeded
/// with the given breakpoints (which must lie strictly inside (a, b) and be
/// increasing). Nodes never touch the endpoints. Never throws on budget
/// exhaustion; check `converged`.
QuadResult integrate_adaptive(const Integrand1D& f, double a, double b, double rel_tol,
                              double abs_tol, int max_subdivisions,
                              std::span<const double> breakpoints = {});

/// Geometric breakpoints a*ratio^k strictly inside (0, b); seeds adaptive
/// passes whose integrands have structure at several decades near zero.
std::vector<double> geometric_breakpoints(double b, double smallest, double ratio = 10.0);

/// Nested adaptive Gauss-Kronrod: outer over x in (0, x_max], inner over
/// y in [0, 1]. The returned error adds the propagated inner errors to the
/// outer estimate. Does not throw on budget exhaustion.
QuadResult quad2d_nothrow(const Integrand2D& f, const QuadratureSettings& s);

/// As quad2d_nothrow, but throws ConvergenceError (carrying the best
/// estimate) when any pass exhausts its subdivision budget.
QuadResult quad2d(const Integrand2D& f, const QuadratureSettings& s);

}  // namespace kcasimir
