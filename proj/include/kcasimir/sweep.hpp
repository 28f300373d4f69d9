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

#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "kcasimir/asymptotics.hpp"
#include "kcasimir/dielectric.hpp"
#include "kcasimir/lifshitz.hpp"
#include "kcasimir/optical_data.hpp"
#include "kcasimir/quadrature.hpp"

namespace kcasimir {

enum class ModelKind { drude, hybrid, tabulated };
enum class ConfigSelection { polar, in_plane, both };
enum class OutputKind { csv, json, asymptotes };

struct TabulatedSpec {
  std::string eps_xx_file;
  std::string eps_xy_file;
  std::optional<DrudeTail> tail;
  int points_per_decade = 16;
  XyTailPolicy xy_tail = XyTailPolicy::truncate;
  double upper_tail_cutoff = std::numeric_limits<double>::infinity();
};

struct SweepSpec {
  double d_min = 1.0;
  double d_max = 10000.0;
  int points_per_decade = 8;
};

/// Power-law fit window [d_lo, d_hi] in nm, applied to each configuration.
struct FitWindow {
  double d_lo;
  double d_hi;
};

/// Everything a sweep needs. Every field has a default, so an empty JSON
/// document reproduces the Drude figure parameters over [1 nm, 10 um].
struct RunConfig {
  ModelKind model = ModelKind::drude;
  DrudeParams drude;
  HybridParams hybrid;
  TabulatedSpec tabulated;
  ConfigSelection configuration = ConfigSelection::both;
  SweepSpec sweep;
  QuadratureSettings quadrature;
  std::vector<FitWindow> fit_windows;
  std::vector<OutputKind> outputs{OutputKind::csv};
};

/// Field-precise configuration error, e.g. "sweep.d_min: must be > 0".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse a JSON document; relative table paths resolve against `base_dir`.
RunConfig parse_run_config(const nlohmann::json& doc, const std::string& base_dir = {});
RunConfig load_run_config(const std::string& path);
void validate(const RunConfig& cfg);

/// Resolved configuration (defaults filled in), as embedded in reports.
nlohmann::json to_json(const RunConfig& cfg);

/// FNV-1a 64-bit hash of the resolved configuration, 16 hex digits.
std::string config_hash(const RunConfig& cfg);

std::string_view to_string(ModelKind m);
std::vector<Configuration> configurations(ConfigSelection s);

/// Build the mirror material (tables loaded and cached for tabulated).
std::shared_ptr<const DielectricResponse> make_material(const RunConfig& cfg);

/// Log-spaced distances from d_min to d_max inclusive.
std::vector<double> sweep_distances(const SweepSpec& s);

/// Worker count: KERR_CASIMIR_THREADS when set and positive, otherwise the
/// hardware concurrency.
int worker_count();

struct WindowFit {
  Configuration config;
  std::string label;  // regime name or "window"
  double d_lo;
  double d_hi;
  std::optional<PowerLawFit> fit;
  std::string note;  // why no fit was produced
};

struct AsymptoteComparison {
  double distance_nm;
  Configuration config;
  Regime regime;
  std::string quantity;  // dE, dF, dE1, ...
  std::string formula_id;
  double numeric;
  double asymptotic;
  double ratio;
  bool deep;     // at least a decade from every regime boundary
  bool flagged;  // deep and ratio outside [0.5, 2]
};

struct SweepReport {
  RunConfig config;
  std::string hash;
  std::vector<InteractionResult> rows;  // sorted by D, polar before in-plane
  std::vector<WindowFit> fits;
  std::optional<double> sign_change_nm;
  std::vector<AsymptoteComparison> comparisons;
  std::vector<std::string> warnings;
  bool all_converged = true;
};

/// Compute every (distance, configuration) point concurrently. Points whose
/// quadrature budget runs out are kept with their best estimate and
/// `converged == false`.
SweepReport run_sweep(const RunConfig& cfg, int threads = 0);

/// Quadrature versus closed form for every row; throws ConfigError for the
/// tabulated model, which has no closed forms.
std::vector<AsymptoteComparison> compare_asymptotics(const RunConfig& cfg,
                                                     const std::vector<InteractionResult>& rows);

inline constexpr const char* kCsvHeader =
    "D_nm,config,deltaE_eV_nm2,deltaF_eV_nm3,deltaE_J_m2,deltaF_mN_m2,E1,E2,F1,F2,err";

void emit_csv(const SweepReport& report, std::ostream& out);
nlohmann::json report_json(const SweepReport& report);
void emit_json(const SweepReport& report, std::ostream& out);
void emit_comparisons_csv(const std::vector<AsymptoteComparison>& rows, std::ostream& out);

}  // namespace kcasimir
