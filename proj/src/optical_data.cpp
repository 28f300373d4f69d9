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

#include "kcasimir/optical_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

#include "kcasimir/diagnostics.hpp"
#include "kcasimir/quadrature.hpp"
#include "kcasimir/quantities.hpp"

namespace kcasimir {

namespace {

using std::numbers::pi;

constexpr int kSegmentBudget = 200;

bool same_sign_nonzero(double a, double b) { return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0); }

// Piecewise model of one table segment [w0, w1]: power law through the two
// end values when they share a sign, straight line otherwise.
struct Segment {
  double w0, w1, v0, v1;
  bool power;
  double slope;  // log-log slope when `power`

  Segment(double w0_, double w1_, double v0_, double v1_)
      : w0(w0_), w1(w1_), v0(v0_), v1(v1_), power(same_sign_nonzero(v0_, v1_)), slope(0.0) {
    if (power) slope = std::log(v1 / v0) / std::log(w1 / w0);
  }

  double operator()(double w) const {
    if (power) return v0 * std::pow(w / w0, slope);
    return v0 + (v1 - v0) * (w - w0) / (w1 - w0);
  }
};

Segment segment(const OpticalTable& t, Eigen::Index i) {
  return Segment(t.omega()[i], t.omega()[i + 1], t.value()[i], t.value()[i + 1]);
}

// int_{w0}^{w1} f(t) t^k / (t^2 + omega^2) dt, integrated in ln t so that
// the kernel peak at t = omega stays smooth.
double segment_kernel_integral(const Segment& s, int k, double omega, double rel_tol) {
  auto integrand = [&](double u) {
    const double t = std::exp(u);
    return s(t) * std::pow(t, k + 1) / (t * t + omega * omega);
  };
  const QuadResult r = integrate_adaptive(integrand, std::log(s.w0), std::log(s.w1), rel_tol, 0.0,
                                          kSegmentBudget);
  return r.value;
}

// int_A^inf (t/A)^s t^k / (t^2 + omega^2) dt, s + k < 1. With u = A/t and
// w = u^q (q = 1 - s - k) the integrand becomes bounded on [0, 1].
double power_tail_above(double a, double s, int k, double omega, double rel_tol) {
  const double q = 1.0 - s - k;
  auto integrand = [&](double w) { return 1.0 / (a * a + omega * omega * std::pow(w, 2.0 / q)); };
  const QuadResult r = integrate_adaptive(integrand, 0.0, 1.0, rel_tol, 0.0, kSegmentBudget);
  return std::pow(a, k + 1) / q * r.value;
}

// int_0^B (t/B)^s t^k / (t^2 + omega^2) dt, s + k > -1.
double power_tail_below(double b, double s, int k, double omega, double rel_tol) {
  const double q = s + k + 1.0;
  auto integrand = [&](double w) { return 1.0 / (b * b * std::pow(w, 2.0 / q) + omega * omega); };
  const QuadResult r = integrate_adaptive(integrand, 0.0, 1.0, rel_tol, 0.0, kSegmentBudget);
  return std::pow(b, k + 1) / q * r.value;
}

// int_0^B omega_p^2 g / ((t^2 + g^2)(t^2 + omega^2)) dt in closed form.
double drude_tail_integral(const DrudeTail& d, double b, double omega) {
  const double g = d.inv_tau;
  const double wp2 = d.omega_p * d.omega_p;
  const double diff = omega * omega - g * g;
  if (std::abs(diff) > 1e-5 * (omega * omega + g * g)) {
    return wp2 * g * (std::atan(b / g) / g - std::atan(b / omega) / omega) / diff;
  }
  // omega ~ g: int dt / (t^2 + a^2)^2 with a^2 = g*omega.
  const double a = std::sqrt(g * omega);
  return wp2 * g * (b / (2.0 * a * a * (b * b + a * a)) + std::atan(b / a) / (2.0 * a * a * a));
}

void require_positive_omega(double omega, const char* what) {
  if (!(omega > 0.0)) {
    throw DomainError(std::string(what) + ": omega must be > 0 eV, got " + std::to_string(omega));
  }
}

Eigen::ArrayXd pchip_slopes(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  const Eigen::Index n = x.size();
  Eigen::ArrayXd d = Eigen::ArrayXd::Zero(n);
  if (n == 2) {
    d.setConstant((y[1] - y[0]) / (x[1] - x[0]));
    return d;
  }
  const Eigen::ArrayXd h = x.tail(n - 1) - x.head(n - 1);
  const Eigen::ArrayXd delta = (y.tail(n - 1) - y.head(n - 1)) / h;
  for (Eigen::Index k = 1; k + 1 < n; ++k) {
    if (delta[k - 1] * delta[k] <= 0.0) continue;
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    d[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (std::signbit(s) != std::signbit(d0) || d0 == 0.0) {
      s = 0.0;
    } else if (std::signbit(d0) != std::signbit(d1) && std::abs(s) > 3.0 * std::abs(d0)) {
      s = 3.0 * d0;
    }
    return s;
  };
  d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

ImaginaryAxisCache::Channel make_channel(const Eigen::ArrayXd& log_x, const Eigen::ArrayXd& v) {
  using Mode = ImaginaryAxisCache::Channel::Mode;
  ImaginaryAxisCache::Channel c;
  if ((v > 0.0).all()) {
    c.mode = Mode::log_positive;
    c.y = v.log();
  } else if ((v < 0.0).all()) {
    c.mode = Mode::log_negative;
    c.y = (-v).log();
  } else {
    c.mode = Mode::linear;
    c.y = v;
  }
  c.slope = pchip_slopes(log_x, c.y);
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

OpticalTable::OpticalTable(TableKind kind, Eigen::ArrayXd omega, Eigen::ArrayXd value,
                           std::string source_label)
    : kind_(kind), omega_(std::move(omega)), value_(std::move(value)), label_(std::move(source_label)) {
  if (omega_.size() != value_.size()) throw ValidationError("optical table: column length mismatch");
  if (omega_.size() < 2) throw ValidationError("optical table needs at least 2 points");
  if (!omega_.isFinite().all() || !value_.isFinite().all()) {
    throw ValidationError("optical table contains non-finite entries");
  }
  if (omega_[0] <= 0.0) throw ValidationError("optical table frequencies must be > 0 eV");
  for (Eigen::Index i = 1; i < omega_.size(); ++i) {
    if (!(omega_[i] > omega_[i - 1])) {
      throw ValidationError("optical table frequencies must be strictly increasing");
    }
  }
  if (kind_ == TableKind::im_eps_xx && (value_ < 0.0).any()) {
    throw ValidationError("Im eps_xx table must be non-negative (absorptive medium)");
  }
}

double OpticalTable::interpolate(double omega) const {
  if (omega < omega_[0] || omega > omega_[size() - 1]) {
    throw DomainError("OpticalTable::interpolate outside table range");
  }
  const auto* begin = omega_.data();
  const auto* end = begin + size();
  Eigen::Index i = std::upper_bound(begin, end, omega) - begin - 1;
  i = std::clamp<Eigen::Index>(i, 0, size() - 2);
  return segment(*this, i)(omega);
}

OpticalTable load_table(std::istream& in, TableKind kind, std::string source_label) {
  std::vector<std::pair<double, double>> rows;
  std::vector<int> line_of;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    double w = 0.0, v = 0.0;
    std::string extra;
    if (!(ss >> w >> v) || (ss >> extra)) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected two numeric columns 'omega_eV value', got '" + line + "'",
                       line_no);
    }
    rows.emplace_back(w, v);
    line_of.push_back(line_no);
  }
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].first < rows[b].first; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (rows[order[k]].first == rows[order[k - 1]].first) {
      throw ParseError("line " + std::to_string(line_of[order[k]]) + ": duplicate omega " +
                           std::to_string(rows[order[k]].first) + " eV (also on line " +
                           std::to_string(line_of[order[k - 1]]) + ")",
                       line_of[order[k]]);
    }
  }
  Eigen::ArrayXd w(rows.size()), v(rows.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    w[static_cast<Eigen::Index>(k)] = rows[order[k]].first;
    v[static_cast<Eigen::Index>(k)] = rows[order[k]].second;
  }
  return OpticalTable(kind, std::move(w), std::move(v), std::move(source_label));
}

OpticalTable load_table_file(const std::string& path, TableKind kind) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open optical table '" + path + "'");
  return load_table(in, kind, path);
}

void DrudeTail::validate() const {
  if (!(omega_p > 0.0) || !(inv_tau > 0.0)) {
    throw ValidationError("Drude tail requires omega_p > 0 and inv_tau > 0");
  }
}

// ---------------------------------------------------------------------------

TabulatedMaterial::TabulatedMaterial(OpticalTable table_xx, std::optional<DrudeTail> tail_xx,
                                     OpticalTable table_xy, KkOptions options)
    : table_xx_(std::move(table_xx)),
      tail_(tail_xx),
      table_xy_(std::move(table_xy)),
      options_(options),
      below_warned_(std::make_shared<std::once_flag>()),
      above_warned_(std::make_shared<std::once_flag>()) {
  if (table_xx_.kind() != TableKind::im_eps_xx) {
    throw ValidationError("TabulatedMaterial: diagonal table must be of kind im-eps-xx");
  }
  if (table_xy_.kind() != TableKind::re_eps_xy) {
    throw ValidationError("TabulatedMaterial: off-diagonal table must be of kind re-eps-xy");
  }
  if (tail_) tail_->validate();
  if (!(options_.upper_tail_cutoff > table_xx_.omega()[table_xx_.size() - 1])) {
    throw ValidationError("upper_tail_cutoff must exceed the last tabulated frequency");
  }
}

double kk_xx_imag_axis(const TabulatedMaterial& m, double omega) {
  require_positive_omega(omega, "kk_xx_imag_axis");
  const OpticalTable& t = m.table_xx();
  const KkOptions& o = m.options();
  const Eigen::Index n = t.size();
  double sum = 0.0;
  if (m.tail_xx()) sum += drude_tail_integral(*m.tail_xx(), t.omega()[0], omega);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    sum += segment_kernel_integral(segment(t, i), 1, omega, o.rel_tol);
  }
  // Continue the last segment as a power law above the data.
  const Segment last = segment(t, n - 2);
  const double w_end = t.omega()[n - 1];
  const double v_end = t.value()[n - 1];
  if (last.power && v_end != 0.0) {
    if (std::isinf(o.upper_tail_cutoff)) {
      if (last.slope < 0.0) {
        sum += v_end * power_tail_above(w_end, last.slope, 1, omega, o.rel_tol);
      }
    } else {
      Segment ext(w_end, o.upper_tail_cutoff, v_end,
                  v_end * std::pow(o.upper_tail_cutoff / w_end, last.slope));
      sum += segment_kernel_integral(ext, 1, omega, o.rel_tol);
    }
  }
  return 1.0 + (2.0 / pi) * sum;
}

double kk_xy_imag_axis(const TabulatedMaterial& m, double omega) {
  require_positive_omega(omega, "kk_xy_imag_axis");
  const OpticalTable& t = m.table_xy();
  const KkOptions& o = m.options();
  const Eigen::Index n = t.size();
  double sum = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    sum += segment_kernel_integral(segment(t, i), 2, omega, o.rel_tol);
  }
  if (o.xy_tail == XyTailPolicy::power_law) {
    const Segment first = segment(t, 0);
    if (first.power && first.slope + 3.0 > 0.0) {
      sum += t.value()[0] * power_tail_below(t.omega()[0], first.slope, 2, omega, o.rel_tol);
    }
    const Segment last = segment(t, n - 2);
    if (last.power && last.slope + 1.0 < 0.0) {
      sum += t.value()[n - 1] * power_tail_above(t.omega()[n - 1], last.slope, 2, omega, o.rel_tol);
    }
  }
  return 2.0 / (pi * omega) * sum;
}

// ---------------------------------------------------------------------------

ImaginaryAxisCache::ImaginaryAxisCache(Eigen::ArrayXd omega, Eigen::ArrayXd eps_xx,
                                       Eigen::ArrayXd eps_xy)
    : omega_(std::move(omega)), eps_xx_(std::move(eps_xx)), eps_xy_(std::move(eps_xy)) {
  if (omega_.size() < 2 || eps_xx_.size() != omega_.size() || eps_xy_.size() != omega_.size()) {
    throw ValidationError("imaginary-axis cache: inconsistent grid");
  }
  log_omega_ = omega_.log();
  xx_minus_one_ = make_channel(log_omega_, (eps_xx_ - 1.0).max(0.0));
  xy_ = make_channel(log_omega_, eps_xy_);
}

double ImaginaryAxisCache::interp(const Channel& c, double omega) const {
  const double u = std::log(omega);
  const Eigen::Index n = log_omega_.size();
  const auto* begin = log_omega_.data();
  Eigen::Index i = std::upper_bound(begin, begin + n, u) - begin - 1;
  i = std::clamp<Eigen::Index>(i, 0, n - 2);
  const double h = log_omega_[i + 1] - log_omega_[i];
  const double t = (u - log_omega_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double y = (2 * t3 - 3 * t2 + 1) * c.y[i] + (t3 - 2 * t2 + t) * h * c.slope[i] +
                   (-2 * t3 + 3 * t2) * c.y[i + 1] + (t3 - t2) * h * c.slope[i + 1];
  switch (c.mode) {
    case Channel::Mode::log_positive: return std::exp(y);
    case Channel::Mode::log_negative: return -std::exp(y);
    case Channel::Mode::linear: return y;
  }
  return y;
}

double ImaginaryAxisCache::interp_xx(double omega) const {
  return 1.0 + std::max(0.0, interp(xx_minus_one_, omega));
}

double ImaginaryAxisCache::interp_xy(double omega) const { return interp(xy_, omega); }

double TabulatedMaterial::cached(double omega, bool xx) const {
  const ImaginaryAxisCache& c = *cache_;
  const Eigen::Index n = c.omega().size();
  const double lo = c.omega()[0];
  const double hi = c.omega()[n - 1];
  if (omega < lo) {
    std::call_once(*below_warned_, [&] {
      warn("tabulated material queried below " + std::to_string(lo) +
           " eV; clamped to the lowest cached value");
    });
    return xx ? c.eps_xx()[0] : c.eps_xy()[0];
  }
  if (omega > hi) {
    std::call_once(*above_warned_, [&] {
      warn("tabulated material queried above " + std::to_string(hi) +
           " eV; continued as a power law of the last cache interval");
    });
    const Eigen::ArrayXd& v = xx ? Eigen::ArrayXd(c.eps_xx() - 1.0) : c.eps_xy();
    const double a = v[n - 2], b = v[n - 1];
    if (!same_sign_nonzero(a, b)) return xx ? 1.0 + std::max(0.0, b) : b;
    const double slope = std::log(b / a) / std::log(c.omega()[n - 1] / c.omega()[n - 2]);
    const double ext = b * std::pow(omega / hi, slope);
    return xx ? 1.0 + ext : ext;
  }
  return xx ? c.interp_xx(omega) : c.interp_xy(omega);
}

double TabulatedMaterial::eps_xx(double omega) const {
  require_positive_omega(omega, "TabulatedMaterial::eps_xx");
  return cache_ ? cached(omega, true) : kk_xx_imag_axis(*this, omega);
}

double TabulatedMaterial::eps_xy(double omega) const {
  require_positive_omega(omega, "TabulatedMaterial::eps_xy");
  return cache_ ? cached(omega, false) : kk_xy_imag_axis(*this, omega);
}

TabulatedMaterial build_cache(TabulatedMaterial m, int points_per_decade) {
  if (points_per_decade < 8) {
    throw ValidationError("build_cache: points_per_decade must be >= 8, got " +
                          std::to_string(points_per_decade));
  }
  const double decades = std::log10(TabulatedMaterial::kCacheHigh / TabulatedMaterial::kCacheLow);
  const int n = static_cast<int>(std::lround(decades * points_per_decade)) + 1;
  Eigen::ArrayXd w(n), exx(n), exy(n);
  for (int j = 0; j < n; ++j) {
    w[j] = TabulatedMaterial::kCacheLow * std::pow(10.0, static_cast<double>(j) / points_per_decade);
  }
  w[n - 1] = TabulatedMaterial::kCacheHigh;
  m.cache_.reset();
  for (int j = 0; j < n; ++j) {
    exx[j] = kk_xx_imag_axis(m, w[j]);
    exy[j] = kk_xy_imag_axis(m, w[j]);
  }
  m.cache_ = std::make_shared<const ImaginaryAxisCache>(std::move(w), std::move(exx), std::move(exy));
  return m;
}

}  // namespace kcasimir
