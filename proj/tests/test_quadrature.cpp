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

#include <cmath>

#include "doctest.h"
#include "approx.hpp"
#include "kcasimir/quadrature.hpp"
#include "kcasimir/quantities.hpp"
#include "support.hpp"

using namespace kcasimir;

TEST_CASE("one-dimensional adaptive rule on closed forms") {
  const QuadResult a = integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, 40.0, 1e-12, 0.0, 200);
  CHECK(a.converged);
  CHECK(a.value == kctest::approx(-std::expm1(-40.0)).epsilon(1e-12));

  // Integrable endpoint singularity: nodes never touch x = 0.
  const QuadResult b = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-9, 0.0, 500);
  CHECK(b.converged);
  CHECK(b.value == kctest::approx(2.0).epsilon(1e-8));

  const double bps[] = {1e-3, 1e-2, 1e-1};
  const QuadResult c = integrate_adaptive([](double x) { return 1.0 / (1e-6 + x * x); }, 0.0, 1.0, 1e-10, 0.0, 500, bps);
  CHECK(c.value == kctest::approx(std::atan(1e3) * 1e3).epsilon(1e-9));
  CHECK(c.error <= 1e-10 * std::abs(c.value) * 10);
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  auto wild = [](double x) { return std::sin(1.0 / (x + 1e-9)); };
  const QuadResult r = integrate_adaptive(wild, 0.0, 1.0, 1e-13, 0.0, 5);
  CHECK_FALSE(r.converged);
  CHECK(r.error > 0.0);
}

TEST_CASE("geometric breakpoints lie strictly inside the interval") {
  const auto bps = geometric_breakpoints(60.0, 60.0 * 1e-9);
  REQUIRE(bps.size() == 9);
  CHECK(bps.front() == kctest::approx(6e-8));
  CHECK(bps.back() == kctest::approx(6.0));
  for (std::size_t i = 1; i < bps.size(); ++i) CHECK(bps[i] > bps[i - 1]);
}

TEST_CASE("quad2d on separable closed forms") {
  const QuadratureSettings s;
  const QuadResult a = quad2d([](double x, double) { return x * x * std::exp(-x); }, s);
  CHECK(a.value == kctest::approx(2.0).epsilon(1e-6));
  const QuadResult b = quad2d([](double x, double y) { return x * x * y * y * std::exp(-x); }, s);
  CHECK(b.value == kctest::approx(2.0 / 3.0).epsilon(1e-6));
  const QuadResult z = quad2d([](double, double) { return 0.0; }, s);
  CHECK(z.value == 0.0);
  CHECK(z.error == 0.0);
}

TEST_CASE("quad2d agrees with the fixed-grid oracle on a non-separable integrand") {
  auto f = [](double x, double y) { return x * x * std::exp(-x) * y / (1.0 + x * y * y); };
  const QuadResult a = quad2d(f, QuadratureSettings{});
  const double oracle = kctest::trapezoid_2d(f, 60.0, 2000);
  CHECK(kctest::rel_diff(a.value, oracle) < 1e-4);
}

TEST_CASE("quad2d throws with the best estimate when starved") {
  QuadratureSettings s;
  s.max_subdivisions = 1;
  s.rel_tol = 1e-10;
  auto f = [](double x, double y) { return std::exp(-x) * std::sin(40.0 * x * y); };
  try {
    quad2d(f, s);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.best_value()));
    CHECK(e.achieved_error() > 0.0);
  }
}

TEST_CASE("settings validation") {
  QuadratureSettings s;
  s.rel_tol = 0.5;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s = {};
  s.x_max = 10.0;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s = {};
  s.max_subdivisions = 0;
  CHECK_THROWS_AS(s.validate(), ValidationError);
}
