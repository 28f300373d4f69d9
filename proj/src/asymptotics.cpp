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

#include "kcasimir/asymptotics.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kcasimir/diagnostics.hpp"
#include "kcasimir/quantities.hpp"

namespace kcasimir {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;
using Q = Quantity;
using S = Special;

// clang-format off
constexpr std::array<Coefficient, 30> kTable{{
    // Drude, D >> c tau; scale (w_c^2 / (w_p^2 g)) (hbar c)^2
    {"drude-long-polar", Q::energy, -3, 16, -2, 0, S::zeta3},
    {"drude-long-polar", Q::force, -3, 4, -2, 0, S::zeta3},
    // Drude, D >> c/w_p, in-plane; scale (w_c^2 / w_p^4) (hbar c)^3
    {"drude-retarded-inplane", Q::energy_1, -1, 4, -2, 0, S::zeta4},
    {"drude-retarded-inplane", Q::energy_2, 1, 10, -2, 0, S::zeta4},
    {"drude-retarded-inplane", Q::energy, -3, 20, -2, 0, S::zeta4},
    {"drude-retarded-inplane", Q::force_1, -5, 4, -2, 0, S::zeta4},
    {"drude-retarded-inplane", Q::force_2, 1, 2, -2, 0, S::zeta4},
    {"drude-retarded-inplane", Q::force, -3, 4, -2, 0, S::zeta4},
    // Drude, c/w_p << D << c tau; scale (w_c^2 / w_p^2) hbar c
    {"drude-intermediate-polar", Q::energy, -1, 24, 0, 0, S::none},
    {"drude-intermediate-polar", Q::force, -1, 8, 0, 0, S::none},
    // Drude, D << c/w_p; scale w_c^2 sqrt(w_p) / (hbar c)^(3/2)
    {"drude-short-polar", Q::energy, -1, 16, -1, -1, S::none},
    {"drude-short-polar", Q::force, -1, 32, -1, -1, S::none},
    {"drude-short-inplane", Q::energy_1, -1, 96, -1, -1, S::none},
    {"drude-short-inplane", Q::force_1, -1, 192, -1, -1, S::none},
    // scale w_c^2 / w_p
    {"drude-short-inplane", Q::energy_2, 1, 16, -1, -1, S::series},
    {"drude-short-inplane", Q::force_2, 1, 8, -1, -1, S::series},
    // hybrid, D >> c/w_p; polar scale w_0^2 eps^2 (hbar c)^5 / w_p^6
    {"hybrid-long-polar", Q::energy, -1, 210, 2, 0, S::none},
    {"hybrid-long-polar", Q::force, -1, 30, 2, 0, S::none},
    // in-plane scale w_0^2 eps^2 (hbar c)^7 / w_p^8
    {"hybrid-long-inplane", Q::energy_1, -1, 1050, 4, 0, S::none},
    {"hybrid-long-inplane", Q::force_1, -9, 1050, 4, 0, S::none},
    {"hybrid-long-inplane", Q::energy_2, 1, 945, 4, 0, S::none},
    {"hybrid-long-inplane", Q::force_2, 1, 105, 4, 0, S::none},
    {"hybrid-long-inplane", Q::energy, 1, 9450, 4, 0, S::none},
    {"hybrid-long-inplane", Q::force, 1, 1050, 4, 0, S::none},
    // hybrid, D << c/w_p; scale w_0^6 eps^2 / (w_p + sqrt2 w_0)^3 / (hbar c)^2
    {"hybrid-short-polar", Q::energy, -1, 4, -3, -1, S::none},
    {"hybrid-short-polar", Q::force, -1, 4, -3, -1, S::none},
    {"hybrid-short-inplane", Q::energy_1, -1, 8, -3, -1, S::none},
    {"hybrid-short-inplane", Q::force_1, -1, 8, -3, -1, S::none},
    // scale w_0^6 eps^2 (w_p + 5 sqrt2 w_0) / (w_p (w_p + sqrt2 w_0)^5)
    {"hybrid-short-inplane", Q::energy_2, 1, 64, -3, -1, S::none},
    {"hybrid-short-inplane", Q::force_2, 1, 32, -3, -1, S::none},
}};
// clang-format on

std::string_view quantity_tag(Quantity q) {
  switch (q) {
    case Q::energy: return "dE";
    case Q::force: return "dF";
    case Q::energy_1: return "dE1";
    case Q::energy_2: return "dE2";
    case Q::force_1: return "dF1";
    case Q::force_2: return "dF2";
  }
  return "?";
}

AsymptoticValue eval(std::string_view group, Quantity q, double scale) {
  const Coefficient& c = coefficient(group, q);
  return AsymptoticValue{c.value() * scale, c.id()};
}

AsymptoticValue sum(const AsymptoticValue& a, const AsymptoticValue& b) {
  return AsymptoticValue{a.value + b.value, a.formula_id + "+" + b.formula_id};
}

void check_regime(Regime requested, Regime actual, double d) {
  if (requested != actual) {
    warn("asymptotic formula for regime " + std::string(to_string(requested)) +
         " evaluated at D = " + std::to_string(d) + " nm, which lies in regime " +
         std::string(to_string(actual)));
  }
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::drude_long: return "drude-long";
    case Regime::drude_intermediate: return "drude-intermediate";
    case Regime::drude_short: return "drude-short";
    case Regime::hybrid_long: return "hybrid-long";
    case Regime::hybrid_short: return "hybrid-short";
  }
  return "?";
}

Regime regime_from_string(std::string_view s) {
  for (Regime r : {Regime::drude_long, Regime::drude_intermediate, Regime::drude_short,
                   Regime::hybrid_long, Regime::hybrid_short}) {
    if (s == to_string(r)) return r;
  }
  throw ValidationError("unknown regime '" + std::string(s) + "'");
}

double drude_long_boundary_nm(const DrudeParams& p) { return PhysicalConstants::hbar_c / p.inv_tau; }

double plasma_length_nm(double omega_p) { return PhysicalConstants::hbar_c / omega_p; }

Regime classify(const DrudeParams& p, double distance_nm) {
  const double d = Distance(distance_nm).nm();
  if (d > drude_long_boundary_nm(p)) return Regime::drude_long;
  if (d < plasma_length_nm(p.omega_p)) return Regime::drude_short;
  return Regime::drude_intermediate;
}

Regime classify(const HybridParams& p, double distance_nm) {
  const double d = Distance(distance_nm).nm();
  return d > plasma_length_nm(p.omega_p) ? Regime::hybrid_long : Regime::hybrid_short;
}

double Coefficient::value() const {
  double v = static_cast<double>(num) / static_cast<double>(den);
  v *= std::pow(pi, pi_power) * std::pow(sqrt2, sqrt2_power);
  switch (special) {
    case S::none: break;
    case S::zeta3: v *= PhysicalConstants::zeta3; break;
    case S::zeta4: v *= PhysicalConstants::zeta4; break;
    case S::series: v *= series_s(); break;
  }
  return v;
}

std::string Coefficient::id() const {
  return std::string(group) + "/" + std::string(quantity_tag(quantity));
}

std::span<const Coefficient> coefficient_table() {
  return kTable;
}

const Coefficient& coefficient(std::string_view group, Quantity q) {
  for (const Coefficient& c : coefficient_table()) {
    if (c.group == group && c.quantity == q) return c;
  }
  throw std::out_of_range("no closed form " + std::string(group) + "/" +
                          std::string(quantity_tag(q)));
}

AsymptoticPrediction drude_predict(const DrudeParams& p, double distance_nm, Configuration config,
                                   Regime regime) {
  const double d = Distance(distance_nm).nm();
  if (regime != Regime::drude_long && regime != Regime::drude_intermediate &&
      regime != Regime::drude_short) {
    throw ValidationError("drude_predict: regime " + std::string(to_string(regime)) +
                          " is not a Drude regime");
  }
  check_regime(regime, classify(p, d), d);
  const double hc = PhysicalConstants::hbar_c;
  const double wc2 = p.omega_c * p.omega_c;
  const double wp = p.omega_p;
  AsymptoticPrediction out;
  out.regime = regime;
  out.config = config;
  out.distance_nm = d;

  if (regime == Regime::drude_short) {
    const double root = wc2 * std::sqrt(wp) / std::pow(hc, 1.5);
    const double sq = std::sqrt(d);
    if (config == Configuration::polar) {
      out.delta_E = eval("drude-short-polar", Q::energy, root / sq);
      out.delta_F = eval("drude-short-polar", Q::force, root / (d * sq));
    } else {
      const double inv = wc2 / wp;
      out.e1 = eval("drude-short-inplane", Q::energy_1, root / sq);
      out.f1 = eval("drude-short-inplane", Q::force_1, root / (d * sq));
      out.e2 = eval("drude-short-inplane", Q::energy_2, inv / (d * d));
      out.f2 = eval("drude-short-inplane", Q::force_2, inv / (d * d * d));
      out.delta_E = sum(*out.e1, *out.e2);
      out.delta_F = sum(*out.f1, *out.f2);
    }
    return out;
  }

  if (config == Configuration::in_plane) {
    const double scale = wc2 / (wp * wp * wp * wp) * hc * hc * hc;
    const double d5 = std::pow(d, 5);
    out.e1 = eval("drude-retarded-inplane", Q::energy_1, scale / d5);
    out.e2 = eval("drude-retarded-inplane", Q::energy_2, scale / d5);
    out.f1 = eval("drude-retarded-inplane", Q::force_1, scale / (d5 * d));
    out.f2 = eval("drude-retarded-inplane", Q::force_2, scale / (d5 * d));
    out.delta_E = eval("drude-retarded-inplane", Q::energy, scale / d5);
    out.delta_F = eval("drude-retarded-inplane", Q::force, scale / (d5 * d));
  } else if (regime == Regime::drude_long) {
    const double scale = wc2 / (wp * wp * p.inv_tau) * hc * hc;
    const double d4 = std::pow(d, 4);
    out.delta_E = eval("drude-long-polar", Q::energy, scale / d4);
    out.delta_F = eval("drude-long-polar", Q::force, scale / (d4 * d));
  } else {
    const double scale = wc2 / (wp * wp) * hc;
    out.delta_E = eval("drude-intermediate-polar", Q::energy, scale / (d * d * d));
    out.delta_F = eval("drude-intermediate-polar", Q::force, scale / (d * d * d * d));
  }
  return out;
}

AsymptoticPrediction hybrid_predict(const HybridParams& p, double distance_nm,
                                    Configuration config, Regime regime, bool with_energy) {
  const double d = Distance(distance_nm).nm();
  if (regime != Regime::hybrid_long && regime != Regime::hybrid_short) {
    throw ValidationError("hybrid_predict: regime " + std::string(to_string(regime)) +
                          " is not a hybrid regime");
  }
  check_regime(regime, classify(p, d), d);
  const double hc = PhysicalConstants::hbar_c;
  const double w0 = p.omega_0, wp = p.omega_p;
  const double e2 = p.eps_xy_eff * p.eps_xy_eff;
  AsymptoticPrediction out;
  out.regime = regime;
  out.config = config;
  out.distance_nm = d;

  if (regime == Regime::hybrid_long) {
    if (config == Configuration::polar) {
      const double scale = w0 * w0 * e2 * std::pow(hc, 5) / std::pow(wp, 6);
      if (with_energy) out.delta_E = eval("hybrid-long-polar", Q::energy, scale / std::pow(d, 7));
      out.delta_F = eval("hybrid-long-polar", Q::force, scale / std::pow(d, 8));
    } else {
      const double scale = w0 * w0 * e2 * std::pow(hc, 7) / std::pow(wp, 8);
      const double d9 = std::pow(d, 9);
      if (with_energy) {
        out.e1 = eval("hybrid-long-inplane", Q::energy_1, scale / d9);
        out.e2 = eval("hybrid-long-inplane", Q::energy_2, scale / d9);
        out.delta_E = eval("hybrid-long-inplane", Q::energy, scale / d9);
      }
      out.f1 = eval("hybrid-long-inplane", Q::force_1, scale / (d9 * d));
      out.f2 = eval("hybrid-long-inplane", Q::force_2, scale / (d9 * d));
      out.delta_F = eval("hybrid-long-inplane", Q::force, scale / (d9 * d));
    }
    return out;
  }

  const double s = wp + sqrt2 * w0;
  const double w06 = std::pow(w0, 6);
  const double scale = w06 * e2 / (s * s * s) / (hc * hc);
  double log_term = 0.0;
  if (with_energy) {
    const double arg = hc / (p.omega_star * d);
    if (!(arg > 1.0)) {
      throw DomainError("short-distance hybrid energy needs D < c/omega_star = " +
                        std::to_string(hc / p.omega_star) + " nm (omega_star = " +
                        std::to_string(p.omega_star) + " eV), got D = " + std::to_string(d) +
                        " nm");
    }
    log_term = std::log(arg);
  }
  if (config == Configuration::polar) {
    if (with_energy) out.delta_E = eval("hybrid-short-polar", Q::energy, scale * log_term);
    out.delta_F = eval("hybrid-short-polar", Q::force, scale / d);
  } else {
    const double scale2 = w06 * e2 * (wp + 5.0 * sqrt2 * w0) / (wp * std::pow(s, 5));
    if (with_energy) {
      out.e1 = eval("hybrid-short-inplane", Q::energy_1, scale * log_term);
      out.e2 = eval("hybrid-short-inplane", Q::energy_2, scale2 / (d * d));
      out.delta_E = sum(*out.e1, *out.e2);
    }
    out.f1 = eval("hybrid-short-inplane", Q::force_1, scale / d);
    out.f2 = eval("hybrid-short-inplane", Q::force_2, scale2 / (d * d * d));
    out.delta_F = sum(*out.f1, *out.f2);
  }
  return out;
}

double series_s() {
  static const double value = [] {
    // t_0 = 3!!/6!! = 1/16; t_{n+1}/t_n = (4n+5)(4n+7)(n+1) / ((4n+8)(4n+10)(n+2)).
    double term = 3.0 / 48.0;
    double total = 0.0;
    for (long n = 0; term >= 1e-12; ++n) {
      total += term;
      const double a = 4.0 * n;
      term *= (a + 5.0) * (a + 7.0) * (n + 1.0) / ((a + 8.0) * (a + 10.0) * (n + 2.0));
    }
    return total;
  }();
  return value;
}

PowerLawFit fit_power_law(const Eigen::ArrayXd& distance_nm, const Eigen::ArrayXd& value) {
  const Eigen::Index n = distance_nm.size();
  if (n != value.size()) throw ValidationError("fit_power_law: length mismatch");
  if (n < 4) throw ValidationError("fit_power_law needs at least 4 points, got " + std::to_string(n));
  if (!(distance_nm > 0.0).all()) throw ValidationError("fit_power_law: distances must be > 0");
  const bool positive = (value > 0.0).all();
  if (!positive && !(value < 0.0).all()) {
    throw ValidationError(
        "fit_power_law: values change sign (or vanish); split the data at the sign change and fit "
        "each side separately");
  }
  // Half a decade, read as a factor of three so that windows like [1, 3] nm qualify.
  if (distance_nm.maxCoeff() / distance_nm.minCoeff() < 3.0 * (1.0 - 1e-9)) {
    throw ValidationError("fit_power_law: distances must span at least a factor of 3");
  }
  Eigen::MatrixXd a(n, 2);
  a.col(0) = distance_nm.log().matrix();
  a.col(1).setOnes();
  const Eigen::VectorXd y = value.abs().log().matrix();
  const Eigen::Vector2d c = a.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd r = y - a * c;
  PowerLawFit fit;
  fit.exponent = c[0];
  fit.prefactor = (positive ? 1.0 : -1.0) * std::exp(c[1]);
  fit.residual = std::sqrt(r.squaredNorm() / static_cast<double>(n));
  fit.points = n;
  return fit;
}

}  // namespace kcasimir
