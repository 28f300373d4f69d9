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

#include "kcasimir/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "kcasimir/quantities.hpp"

namespace kcasimir {

namespace {

// 15-point Kronrod abscissae (non-negative half) and weights; the embedded
// 7-point Gauss rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Sample {
  double value;
  double error;  // error already present in the sample (nested passes)
};

struct Interval {
  double a, b;
  double value;
  double error;       // Gauss-Kronrod estimate for this interval
  double propagated;  // weighted sample errors inside this interval
  bool operator<(const Interval& o) const { return error + propagated < o.error + o.propagated; }
};

template <typename F>
Interval gk15(const F& f, double a, double b, int& evals) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Sample fc = f(center);
  double resk = fc.value * kWgk[7];
  double resg = fc.value * kWg[3];
  double resabs = std::abs(resk);
  double prop = kWgk[7] * fc.error;
  std::array<double, 8> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Sample lo = f(center - dx);
    const Sample hi = f(center + dx);
    f1[j] = lo.value;
    f2[j] = hi.value;
    resk += kWgk[j] * (lo.value + hi.value);
    resabs += kWgk[j] * (std::abs(lo.value) + std::abs(hi.value));
    prop += kWgk[j] * (lo.error + hi.error);
    if (j % 2 == 1) resg += kWg[j / 2] * (lo.value + hi.value);
  }
  evals += 15;
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc.value - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  resasc *= std::abs(half);
  resabs *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  // QUADPACK scaling of the raw Kronrod-Gauss difference.
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  return Interval{a, b, resk * half, err, prop * std::abs(half)};
}

template <typename F>
QuadResult adaptive(const F& f, double a, double b, double rel_tol, double abs_tol,
                    int max_subdivisions, std::span<const double> breakpoints) {
  QuadResult out;
  std::priority_queue<Interval> heap;
  double total = 0.0, total_err = 0.0;
  double lo = a;
  auto push = [&](const Interval& iv) {
    total += iv.value;
    total_err += iv.error + iv.propagated;
    heap.push(iv);
  };
  for (double bp : breakpoints) {
    if (bp <= lo || bp >= b) continue;
    push(gk15(f, lo, bp, out.evaluations));
    lo = bp;
  }
  push(gk15(f, lo, b, out.evaluations));

  int subdivisions = 0;
  while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (subdivisions >= max_subdivisions) {
      out.converged = false;
      break;
    }
    Interval worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval at floating-point resolution; further splitting is useless.
      out.converged = false;
      break;
    }
    heap.pop();
    total -= worst.value;
    total_err -= worst.error + worst.propagated;
    push(gk15(f, worst.a, mid, out.evaluations));
    push(gk15(f, mid, worst.b, out.evaluations));
    ++subdivisions;
  }
  // Re-sum to shed accumulated rounding from the running updates.
  total = 0.0;
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error + heap.top().propagated;
    heap.pop();
  }
  out.value = total;
  out.error = total_err;
  return out;
}

}  // namespace

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) {
    throw ValidationError("quadrature.rel_tol: must lie in (0, 1e-2], got " + std::to_string(rel_tol));
  }
  if (!(abs_tol >= 0.0)) throw ValidationError("quadrature.abs_tol: must be >= 0");
  if (!(x_max >= 30.0)) {
    throw ValidationError("quadrature.x_max: must be >= 30, got " + std::to_string(x_max));
  }
  if (max_subdivisions < 1) throw ValidationError("quadrature.max_subdivisions: must be >= 1");
}

QuadResult integrate_adaptive(const Integrand1D& f, double a, double b, double rel_tol,
                              double abs_tol, int max_subdivisions,
                              std::span<const double> breakpoints) {
  auto wrapped = [&f](double x) { return Sample{f(x), 0.0}; };
  return adaptive(wrapped, a, b, rel_tol, abs_tol, max_subdivisions, breakpoints);
}

std::vector<double> geometric_breakpoints(double b, double smallest, double ratio) {
  std::vector<double> bps;
  for (double v = b / ratio; v >= smallest; v /= ratio) bps.push_back(v);
  std::reverse(bps.begin(), bps.end());
  return bps;
}

QuadResult quad2d_nothrow(const Integrand2D& f, const QuadratureSettings& s) {
  s.validate();
  static const std::vector<double> y_breaks = geometric_breakpoints(1.0, 1e-8);
  const std::vector<double> x_breaks = geometric_breakpoints(s.x_max, s.x_max * 1e-9);

  bool inner_converged = true;
  int evaluations = 0;
  auto run = [&](double inner_rel, double inner_abs, double outer_rel, double outer_abs) {
    auto inner = [&](double x) {
      auto fy = [&](double y) { return f(x, y); };
      auto wrapped = [&fy](double y) { return Sample{fy(y), 0.0}; };
      const QuadResult r =
          adaptive(wrapped, 0.0, 1.0, inner_rel, inner_abs, s.max_subdivisions, y_breaks);
      evaluations += r.evaluations;
      inner_converged = inner_converged && r.converged;
      return Sample{r.value, r.error};
    };
    return adaptive(inner, 0.0, s.x_max, outer_rel, outer_abs, s.max_subdivisions, x_breaks);
  };

  // A coarse pass fixes the absolute scale so that the inner passes do not
  // chase relative accuracy where the integrand is negligible.
  const QuadResult rough = run(1e-4, s.abs_tol, 1e-3, s.abs_tol);
  const double scale = std::abs(rough.value);
  const double inner_abs = std::max(s.abs_tol, 0.25 * s.rel_tol * scale / s.x_max);
  inner_converged = true;
  QuadResult fine = run(0.25 * s.rel_tol, inner_abs, 0.5 * s.rel_tol, s.abs_tol);
  fine.converged = fine.converged && inner_converged;
  fine.evaluations = evaluations;
  return fine;
}

QuadResult quad2d(const Integrand2D& f, const QuadratureSettings& s) {
  QuadResult r = quad2d_nothrow(f, s);
  if (!r.converged) {
    throw ConvergenceError("quad2d: subdivision budget exhausted (value " + std::to_string(r.value) +
                               ", error " + std::to_string(r.error) + ")",
                           r.value, r.error);
  }
  return r;
}

}  // namespace kcasimir
