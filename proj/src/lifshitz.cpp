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

#include "kcasimir/lifshitz.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "kcasimir/diagnostics.hpp"
#include "kcasimir/quantities.hpp"

namespace kcasimir {

namespace {

using std::numbers::pi;

struct PairAmplitudes {
  // 1 - r^A r^B for the diagonal amplitudes.
  double one_minus_pss;
  double one_minus_ppp;
  double pss;
  double ppp;
  double rsp_polar;    // r_sp^A r_sp^B
  double rsp_inplane;  // (r_sp^A r_sp^B), real and <= 0 for identical mirrors
  double drpp;         // Delta r_pp^A Delta r_pp^B
};

// 1 - (1 - a)(1 - b) without cancellation when a, b are small.
double one_minus_product(double a, double b) { return a + b - a * b; }

PairAmplitudes pair_amplitudes(MirrorPair m, const KPoint& pt) {
  const double exx_a = m.a.eps_xx(pt.omega);
  const double exy_a = m.a.eps_xy(pt.omega);
  const Amplitudes a = amplitudes(pt, exx_a, exy_a);
  const Amplitudes b = (&m.a == &m.b) ? a
                                      : amplitudes(pt, m.b.eps_xx(pt.omega), m.b.eps_xy(pt.omega));
  PairAmplitudes p{};
  p.one_minus_pss = one_minus_product(a.one_plus_rss, b.one_plus_rss);
  p.one_minus_ppp = one_minus_product(a.one_minus_rpp, b.one_minus_rpp);
  p.pss = 1.0 - p.one_minus_pss;
  p.ppp = 1.0 - p.one_minus_ppp;
  p.rsp_polar = a.rsp_polar * b.rsp_polar;
  // Both in-plane amplitudes are purely imaginary: i*u times i*v = -u*v.
  p.rsp_inplane = -a.rsp_inplane * b.rsp_inplane;
  p.drpp = -a.drpp_inplane * b.drpp_inplane;
  return p;
}

}  // namespace

double term_prefactor(Term term, double distance_nm) {
  const double d = Distance(distance_nm).nm();
  const double hc = PhysicalConstants::hbar_c;
  const double d3 = d * d * d;
  // Measure: dk k dw = (c x^2 / 8 D^3) dx dy and dk k^2 dw = (c x^3 / 16 D^4) dx dy.
  switch (term) {
    case Term::energy_polar: return -hc / (8.0 * pi * pi * d3);
    case Term::force_polar: return -hc / (8.0 * pi * pi * d3 * d);
    case Term::energy_longitudinal: return hc / (16.0 * pi * pi * d3);
    case Term::energy_transversal: return -hc / (32.0 * pi * pi * d3);
    case Term::force_longitudinal: return hc / (16.0 * pi * pi * d3 * d);
    case Term::force_transversal: return -hc / (32.0 * pi * pi * d3 * d);
  }
  return 0.0;
}

Integrand2D lifshitz_integrand(Term term, MirrorPair mirrors, double distance_nm) {
  const double d = Distance(distance_nm).nm();
  const double kc_per_x = PhysicalConstants::hbar_c / (2.0 * d);
  return [term, mirrors, kc_per_x](double x, double y) -> double {
    const double kc = kc_per_x * x;
    const double omega = y * kc;
    // Every shipped model drives the integrand to zero on these edges.
    if (!(omega > 0.0) || !(kc > 0.0)) return 0.0;
    const PairAmplitudes p = pair_amplitudes(mirrors, KPoint{omega, kc});
    const double q = std::exp(-x);
    const double one_minus_q = -std::expm1(-x);
    const double den_ss = one_minus_q + q * p.one_minus_pss;
    const double den_pp = one_minus_q + q * p.one_minus_ppp;
    const double x2 = x * x;
    switch (term) {
      case Term::energy_polar:
        return x2 * p.rsp_polar * q / (den_ss * den_pp);
      case Term::energy_longitudinal:
        return x2 * p.rsp_inplane * q / (den_ss * den_pp);
      case Term::energy_transversal:
        return x2 * p.drpp * q / (den_pp * den_pp);
      case Term::force_polar:
      case Term::force_longitudinal: {
        // 1 - Pss Ppp q^2 = (1 - q^2) + q^2 (1 - Pss Ppp)
        const double q2 = q * q;
        const double num = -std::expm1(-2.0 * x) +
                           q2 * one_minus_product(p.one_minus_pss, p.one_minus_ppp);
        const double den = den_ss * den_pp;
        const double mo = term == Term::force_polar ? p.rsp_polar : p.rsp_inplane;
        return x2 * x * mo * q * num / (den * den);
      }
      case Term::force_transversal:
        return x2 * x * p.drpp * q * (1.0 + p.ppp * q) / (den_pp * den_pp * den_pp);
    }
    return 0.0;
  };
}

QuadResult evaluate_term(Term term, MirrorPair mirrors, double distance_nm,
                         const QuadratureSettings& settings) {
  const QuadResult raw = quad2d_nothrow(lifshitz_integrand(term, mirrors, distance_nm), settings);
  const double pref = term_prefactor(term, distance_nm);
  QuadResult out = raw;
  out.value = pref * raw.value;
  out.error = std::abs(pref) * raw.error;
  if (!out.converged) {
    throw ConvergenceError("term quadrature did not converge at D = " +
                               std::to_string(distance_nm) + " nm",
                           out.value, out.error);
  }
  return out;
}

namespace {

struct TermValue {
  double value;
  double error;
  bool converged;
};

TermValue run_term(Term term, MirrorPair mirrors, double d, const QuadratureSettings& s) {
  const QuadResult raw = quad2d_nothrow(lifshitz_integrand(term, mirrors, d), s);
  const double pref = term_prefactor(term, d);
  return TermValue{pref * raw.value, std::abs(pref) * raw.error, raw.converged};
}

double relative(double err, double scale) { return scale > 0.0 ? err / scale : err; }

InteractionResult compute(MirrorPair mirrors, double d, Configuration config, bool want_energy,
                          bool want_force, const QuadratureSettings& s) {
  Distance checked(d);
  s.validate();
  InteractionResult r;
  r.distance_nm = checked.nm();
  r.config = config;
  r.delta_E = std::nan("");
  r.delta_F = std::nan("");
  double err_rel = 0.0;
  bool converged = true;

  auto accumulate = [&](const TermValue& t, double scale) {
    err_rel = std::max(err_rel, relative(t.error, scale));
    converged = converged && t.converged;
  };

  if (config == Configuration::polar) {
    if (want_energy) {
      const TermValue e = run_term(Term::energy_polar, mirrors, d, s);
      r.delta_E = e.value;
      accumulate(e, std::abs(e.value));
    }
    if (want_force) {
      const TermValue f = run_term(Term::force_polar, mirrors, d, s);
      r.delta_F = f.value;
      accumulate(f, std::abs(f.value));
    }
  } else {
    if (want_energy) {
      const TermValue e1 = run_term(Term::energy_longitudinal, mirrors, d, s);
      const TermValue e2 = run_term(Term::energy_transversal, mirrors, d, s);
      r.e1 = e1.value;
      r.e2 = e2.value;
      r.delta_E = e1.value + e2.value;
      // The two Kerr terms cancel partially; errors are relative to the
      // larger term so that a vanishing total does not inflate them.
      const double scale = std::max(std::abs(e1.value), std::abs(e2.value));
      accumulate(TermValue{0.0, e1.error + e2.error, e1.converged && e2.converged}, scale);
    }
    if (want_force) {
      const TermValue f1 = run_term(Term::force_longitudinal, mirrors, d, s);
      const TermValue f2 = run_term(Term::force_transversal, mirrors, d, s);
      r.f1 = f1.value;
      r.f2 = f2.value;
      r.delta_F = f1.value + f2.value;
      const double scale = std::max(std::abs(f1.value), std::abs(f2.value));
      accumulate(TermValue{0.0, f1.error + f2.error, f1.converged && f2.converged}, scale);
    }
  }
  r.err_estimate = err_rel;
  r.converged = converged;
  if (!converged) {
    throw InteractionConvergenceError(
        "quadrature budget exhausted at D = " + std::to_string(d) + " nm (" +
            std::string(to_string(config)) + ")",
        r);
  }
  return r;
}

}  // namespace

InteractionResult energy_polar(MirrorPair m, double d, const QuadratureSettings& s) {
  return compute(m, d, Configuration::polar, true, false, s);
}

InteractionResult force_polar(MirrorPair m, double d, const QuadratureSettings& s) {
  return compute(m, d, Configuration::polar, false, true, s);
}

InteractionResult energy_inplane(MirrorPair m, double d, const QuadratureSettings& s) {
  return compute(m, d, Configuration::in_plane, true, false, s);
}

InteractionResult force_inplane(MirrorPair m, double d, const QuadratureSettings& s) {
  return compute(m, d, Configuration::in_plane, false, true, s);
}

InteractionResult interaction(MirrorPair m, double d, Configuration config,
                              const QuadratureSettings& s) {
  return compute(m, d, config, true, true, s);
}

std::optional<double> sign_change_distance(MirrorPair mirrors, double d_lo, double d_hi,
                                           const QuadratureSettings& settings,
                                           int scan_per_decade) {
  static_cast<void>(Distance{d_lo});
  static_cast<void>(Distance{d_hi});
  if (!(d_lo < d_hi)) throw ValidationError("sign_change_distance requires d_lo < d_hi");
  if (scan_per_decade < 1) throw ValidationError("scan_per_decade must be >= 1");

  auto force = [&](double d) { return force_inplane(mirrors, d, settings).delta_F; };

  const double decades = std::log10(d_hi / d_lo);
  const int n = std::max(2, static_cast<int>(std::ceil(decades * scan_per_decade)) + 1);
  std::vector<double> ds(n), fs(n);
  for (int i = 0; i < n; ++i) {
    ds[i] = d_lo * std::pow(d_hi / d_lo, static_cast<double>(i) / (n - 1));
    fs[i] = force(ds[i]);
  }
  // Brackets join consecutive non-zero samples of opposite sign; exact zeros
  // in between are skipped, so an identically vanishing force has no root.
  std::vector<std::pair<int, int>> brackets;
  int prev = -1;
  for (int i = 0; i < n; ++i) {
    if (fs[i] == 0.0) continue;
    if (prev >= 0 && (fs[prev] < 0.0) != (fs[i] < 0.0)) brackets.emplace_back(prev, i);
    prev = i;
  }
  if (brackets.empty()) return std::nullopt;
  if (brackets.size() > 1) {
    warn("sign_change_distance: " + std::to_string(brackets.size()) +
         " sign changes bracketed in [" + std::to_string(d_lo) + ", " + std::to_string(d_hi) +
         "] nm; reporting the smallest");
  }
  const auto [first, second] = brackets.front();
  if (second > first + 1) return ds[first + 1];
  double lo = ds[first], hi = ds[second];
  double f_lo = fs[first];
  // Geometric bisection until the bracket pins three significant figures.
  while (hi / lo - 1.0 > 2e-4) {
    const double mid = std::sqrt(lo * hi);
    const double f_mid = force(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

}  // namespace kcasimir
