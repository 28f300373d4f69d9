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

#include <Eigen/Core>
#include <istream>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "kcasimir/dielectric.hpp"

namespace kcasimir {

enum class TableKind { im_eps_xx, re_eps_xy };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Real-frequency optical data: strictly increasing photon energies (eV)
/// and dimensionless values. Loss tables (im_eps_xx) must be non-negative.
class OpticalTable {
 public:
  OpticalTable(TableKind kind, Eigen::ArrayXd omega, Eigen::ArrayXd value,
               std::string source_label = {});

  TableKind kind() const { return kind_; }
  const Eigen::ArrayXd& omega() const { return omega_; }
  const Eigen::ArrayXd& value() const { return value_; }
  const std::string& source_label() const { return label_; }
  Eigen::Index size() const { return omega_.size(); }

  /// Value at a real frequency inside the table range, with power-law
  /// interpolation between same-sign non-zero neighbours and linear
  /// interpolation otherwise.
  double interpolate(double omega) const;

 private:
  TableKind kind_;
  Eigen::ArrayXd omega_;
  Eigen::ArrayXd value_;
  std::string label_;
};

/// Parse whitespace-separated "omega_eV value" rows. Blank lines and lines
/// starting with '#' are skipped; rows are sorted by omega. Throws
/// ParseError (with line number) on malformed rows or duplicate abscissae
/// and ValidationError for fewer than two points.
OpticalTable load_table(std::istream& in, TableKind kind, std::string source_label = {});
OpticalTable load_table_file(const std::string& path, TableKind kind);

/// Low-frequency Drude continuation of a loss table: Im eps_xx(w) =
/// omega_p^2 inv_tau / (w (w^2 + inv_tau^2)).
struct DrudeTail {
  double omega_p;
  double inv_tau;
  void validate() const;
};

/// What to do with Re eps_xy outside the measured support.
enum class XyTailPolicy { truncate, power_law };

struct KkOptions {
  /// Upper limit of the above-range power-law continuation of the loss
  /// table (eV); infinity integrates the continuation to infinity.
  double upper_tail_cutoff = std::numeric_limits<double>::infinity();
  XyTailPolicy xy_tail = XyTailPolicy::truncate;
  double rel_tol = 1e-10;
};

/// Imaginary-axis cache: log grid of eps_xx and eps_xy with monotone cubic
/// (PCHIP) interpolation in log-log space.
class ImaginaryAxisCache {
 public:
  ImaginaryAxisCache(Eigen::ArrayXd omega, Eigen::ArrayXd eps_xx, Eigen::ArrayXd eps_xy);
  const Eigen::ArrayXd& omega() const { return omega_; }
  const Eigen::ArrayXd& eps_xx() const { return eps_xx_; }
  const Eigen::ArrayXd& eps_xy() const { return eps_xy_; }

  /// Interpolated value; `omega` must lie within the grid.
  double interp_xx(double omega) const;
  double interp_xy(double omega) const;

  struct Channel {
    enum class Mode { log_positive, log_negative, linear } mode;
    Eigen::ArrayXd y;      // transformed values
    Eigen::ArrayXd slope;  // PCHIP derivatives
  };

 private:
  double interp(const Channel& c, double omega) const;

  Eigen::ArrayXd omega_, eps_xx_, eps_xy_;
  Eigen::ArrayXd log_omega_;
  Channel xx_minus_one_, xy_;
};

/// A mirror described by tabulated optical data, transformed to the
/// imaginary axis with the causality relations.
class TabulatedMaterial final : public DielectricResponse {
 public:
  static constexpr double kCacheLow = 1e-5;
  static constexpr double kCacheHigh = 1e4;

  TabulatedMaterial(OpticalTable table_xx, std::optional<DrudeTail> tail_xx,
                    OpticalTable table_xy, KkOptions options = {});

  const OpticalTable& table_xx() const { return table_xx_; }
  const OpticalTable& table_xy() const { return table_xy_; }
  const std::optional<DrudeTail>& tail_xx() const { return tail_; }
  const KkOptions& options() const { return options_; }
  bool has_cache() const { return cache_ != nullptr; }
  const ImaginaryAxisCache* cache() const { return cache_.get(); }

  /// Cached values when a cache is present; direct transforms otherwise.
  /// Queries below the cache range are clamped to the lowest node and
  /// above it continued as a power law; both emit one warning per material.
  double eps_xx(double omega) const override;
  double eps_xy(double omega) const override;

  friend TabulatedMaterial build_cache(TabulatedMaterial m, int points_per_decade);

 private:
  double cached(double omega, bool xx) const;

  OpticalTable table_xx_;
  std::optional<DrudeTail> tail_;
  OpticalTable table_xy_;
  KkOptions options_;
  std::shared_ptr<const ImaginaryAxisCache> cache_;
  std::shared_ptr<std::once_flag> below_warned_, above_warned_;
};

/// eps_xx(i omega) = 1 + (2/pi) int_0^inf dw' w' Im eps_xx(w') / (w'^2 + omega^2).
double kk_xx_imag_axis(const TabulatedMaterial& m, double omega);

/// eps_xy(i omega) = (2/(pi omega)) int dw' w'^2 Re eps_xy(w') / (w'^2 + omega^2),
/// restricted to the table support unless the power-law tail policy is set.
double kk_xy_imag_axis(const TabulatedMaterial& m, double omega);

/// Tabulate both transforms on a log grid over [1e-5, 1e4] eV.
TabulatedMaterial build_cache(TabulatedMaterial m, int points_per_decade);

}  // namespace kcasimir
