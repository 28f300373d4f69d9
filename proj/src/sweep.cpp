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

#include "kcasimir/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "kcasimir/diagnostics.hpp"
#include "kcasimir/quantities.hpp"

namespace kcasimir {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// JSON reading with field paths in every message.

class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail("", "expected a JSON object");
  }

  void allow(std::initializer_list<std::string_view> keys) const {
    for (const auto& [k, v] : j_.items()) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        std::string known;
        for (auto key : keys) known += (known.empty() ? "" : ", ") + std::string(key);
        fail(k, "unknown field (known: " + known + ")");
      }
    }
  }

  bool has(const char* key) const { return j_.contains(key); }

  double number(const char* key, double fallback) const {
    if (!j_.contains(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_number()) fail(key, "expected a number, got " + v.dump());
    return v.get<double>();
  }

  int integer(const char* key, int fallback) const {
    if (!j_.contains(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_number_integer()) fail(key, "expected an integer, got " + v.dump());
    return v.get<int>();
  }

  std::string text(const char* key, const std::string& fallback) const {
    if (!j_.contains(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_string()) fail(key, "expected a string, got " + v.dump());
    return v.get<std::string>();
  }

  const json& raw(const char* key) const { return j_.at(key); }
  std::string path(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  [[noreturn]] void fail(std::string_view key, const std::string& msg) const {
    const std::string where = key.empty() ? (path_.empty() ? "config" : path_) : path(key);
    throw ConfigError(where + ": " + msg);
  }

 private:
  const json& j_;
  std::string path_;
};

ModelKind model_from_string(const std::string& s, const Section& sec) {
  if (s == "drude") return ModelKind::drude;
  if (s == "hybrid") return ModelKind::hybrid;
  if (s == "tabulated") return ModelKind::tabulated;
  sec.fail("model", "expected drude, hybrid or tabulated, got '" + s + "'");
}

ConfigSelection selection_from_string(const std::string& s, const Section& sec) {
  if (s == "polar") return ConfigSelection::polar;
  if (s == "in-plane") return ConfigSelection::in_plane;
  if (s == "both") return ConfigSelection::both;
  sec.fail("configuration", "expected polar, in-plane or both, got '" + s + "'");
}

std::string_view to_string(ConfigSelection s) {
  switch (s) {
    case ConfigSelection::polar: return "polar";
    case ConfigSelection::in_plane: return "in-plane";
    case ConfigSelection::both: return "both";
  }
  return "?";
}

std::string_view to_string(OutputKind o) {
  switch (o) {
    case OutputKind::csv: return "csv";
    case OutputKind::json: return "json";
    case OutputKind::asymptotes: return "asymptotes";
  }
  return "?";
}

std::string resolve_path(const std::string& p, const std::string& base_dir) {
  if (p.empty() || base_dir.empty()) return p;
  const std::filesystem::path path(p);
  return path.is_absolute() ? p : (std::filesystem::path(base_dir) / path).lexically_normal().string();
}

template <class F>
void rethrow_as_config(const std::string& field, F&& f) {
  try {
    f();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field.empty() ? std::string(e.what()) : field + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

double sign_of(double v) { return v < 0.0 ? -1.0 : (v > 0.0 ? 1.0 : 0.0); }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

struct RegimeWindow {
  std::string label;
  double lo;
  double hi;
};

std::vector<RegimeWindow> regime_windows(const RunConfig& cfg) {
  const double inf = std::numeric_limits<double>::infinity();
  switch (cfg.model) {
    case ModelKind::drude: {
      const double a = plasma_length_nm(cfg.drude.omega_p);
      const double b = drude_long_boundary_nm(cfg.drude);
      return {{"drude-short", 0.0, a}, {"drude-intermediate", a, b}, {"drude-long", b, inf}};
    }
    case ModelKind::hybrid: {
      const double a = plasma_length_nm(cfg.hybrid.omega_p);
      return {{"hybrid-short", 0.0, a}, {"hybrid-long", a, inf}};
    }
    case ModelKind::tabulated: return {{"sweep", 0.0, inf}};
  }
  return {};
}

// Fit delta_F over rows of one configuration inside [lo, hi], one fit per
// run of constant sign.
void fit_window(const std::vector<InteractionResult>& rows, Configuration c, const std::string& label,
                double lo, double hi, std::vector<WindowFit>& out) {
  std::vector<std::vector<const InteractionResult*>> runs;
  for (const auto& r : rows) {
    if (r.config != c || r.distance_nm < lo || r.distance_nm > hi) continue;
    if (runs.empty() || sign_of(runs.back().back()->delta_F) != sign_of(r.delta_F)) runs.emplace_back();
    runs.back().push_back(&r);
  }
  if (runs.empty()) {
    out.push_back(WindowFit{c, label, lo, hi, std::nullopt, "no sweep points in window"});
    return;
  }
  for (const auto& run : runs) {
    WindowFit w{c, label + (runs.size() > 1 ? " (sign run)" : ""), run.front()->distance_nm,
                run.back()->distance_nm, std::nullopt, {}};
    Eigen::ArrayXd d(static_cast<Eigen::Index>(run.size())), v(d.size());
    for (std::size_t i = 0; i < run.size(); ++i) {
      d[static_cast<Eigen::Index>(i)] = run[i]->distance_nm;
      v[static_cast<Eigen::Index>(i)] = run[i]->delta_F;
    }
    try {
      w.fit = fit_power_law(d, v);
    } catch (const ValidationError& e) {
      w.note = e.what();
    }
    out.push_back(std::move(w));
  }
}

std::optional<double> locate_sign_change(const std::vector<InteractionResult>& rows,
                                         MirrorPair mirrors, const QuadratureSettings& s) {
  const InteractionResult* prev = nullptr;
  for (const auto& r : rows) {
    if (r.config != Configuration::in_plane) continue;
    if (prev && sign_of(prev->delta_F) * sign_of(r.delta_F) < 0.0) {
      try {
        return sign_change_distance(mirrors, prev->distance_nm, r.distance_nm, s, 1);
      } catch (const ConvergenceError& e) {
        warn(std::string("sign change refinement did not converge: ") + e.what());
        return std::sqrt(prev->distance_nm * r.distance_nm);
      }
    }
    prev = &r;
  }
  return std::nullopt;
}

bool deep_inside(double d, double lo, double hi) {
  return d >= 10.0 * lo && d <= hi / 10.0;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(ModelKind m) {
  switch (m) {
    case ModelKind::drude: return "drude";
    case ModelKind::hybrid: return "hybrid";
    case ModelKind::tabulated: return "tabulated";
  }
  return "?";
}

std::vector<Configuration> configurations(ConfigSelection s) {
  switch (s) {
    case ConfigSelection::polar: return {Configuration::polar};
    case ConfigSelection::in_plane: return {Configuration::in_plane};
    case ConfigSelection::both: return {Configuration::polar, Configuration::in_plane};
  }
  return {};
}

RunConfig parse_run_config(const json& doc, const std::string& base_dir) {
  RunConfig cfg;
  const Section top(doc, "");
  top.allow({"model", "drude", "hybrid", "tabulated", "configuration", "sweep", "quadrature",
             "fit_windows", "outputs"});
  cfg.model = model_from_string(top.text("model", "drude"), top);
  cfg.configuration = selection_from_string(top.text("configuration", "both"), top);

  if (top.has("drude")) {
    const Section s(top.raw("drude"), "drude");
    s.allow({"omega_p", "omega_c", "inv_tau"});
    cfg.drude.omega_p = s.number("omega_p", cfg.drude.omega_p);
    cfg.drude.omega_c = s.number("omega_c", cfg.drude.omega_c);
    cfg.drude.inv_tau = s.number("inv_tau", cfg.drude.inv_tau);
  }
  if (top.has("hybrid")) {
    const Section s(top.raw("hybrid"), "hybrid");
    s.allow({"omega_p", "omega_0", "eps_xy_eff", "omega_star"});
    cfg.hybrid.omega_p = s.number("omega_p", cfg.hybrid.omega_p);
    cfg.hybrid.omega_0 = s.number("omega_0", cfg.hybrid.omega_0);
    cfg.hybrid.eps_xy_eff = s.number("eps_xy_eff", cfg.hybrid.eps_xy_eff);
    // The cut-off follows omega_p unless given explicitly.
    cfg.hybrid.omega_star = s.number(
        "omega_star", HybridParams::with_default_cutoff(cfg.hybrid.omega_p, cfg.hybrid.omega_0,
                                                        cfg.hybrid.eps_xy_eff)
                          .omega_star);
  }
  if (top.has("tabulated")) {
    const Section s(top.raw("tabulated"), "tabulated");
    s.allow({"eps_xx_file", "eps_xy_file", "tail", "points_per_decade", "xy_tail",
             "upper_tail_cutoff"});
    auto& t = cfg.tabulated;
    t.eps_xx_file = resolve_path(s.text("eps_xx_file", ""), base_dir);
    t.eps_xy_file = resolve_path(s.text("eps_xy_file", ""), base_dir);
    t.points_per_decade = s.integer("points_per_decade", t.points_per_decade);
    const std::string policy = s.text("xy_tail", "truncate");
    if (policy == "truncate") {
      t.xy_tail = XyTailPolicy::truncate;
    } else if (policy == "power-law") {
      t.xy_tail = XyTailPolicy::power_law;
    } else {
      s.fail("xy_tail", "expected truncate or power-law, got '" + policy + "'");
    }
    if (s.has("upper_tail_cutoff") && !s.raw("upper_tail_cutoff").is_null()) {
      t.upper_tail_cutoff = s.number("upper_tail_cutoff", t.upper_tail_cutoff);
    }
    if (s.has("tail") && !s.raw("tail").is_null()) {
      const Section tail(s.raw("tail"), "tabulated.tail");
      tail.allow({"omega_p", "inv_tau"});
      if (!tail.has("omega_p") || !tail.has("inv_tau")) {
        tail.fail("", "both omega_p and inv_tau are required");
      }
      t.tail = DrudeTail{tail.number("omega_p", 0.0), tail.number("inv_tau", 0.0)};
    }
  }
  if (top.has("sweep")) {
    const Section s(top.raw("sweep"), "sweep");
    s.allow({"d_min", "d_max", "points_per_decade"});
    cfg.sweep.d_min = s.number("d_min", cfg.sweep.d_min);
    cfg.sweep.d_max = s.number("d_max", cfg.sweep.d_max);
    cfg.sweep.points_per_decade = s.integer("points_per_decade", cfg.sweep.points_per_decade);
  }
  if (top.has("quadrature")) {
    const Section s(top.raw("quadrature"), "quadrature");
    s.allow({"rel_tol", "abs_tol", "x_max", "max_subdivisions"});
    cfg.quadrature.rel_tol = s.number("rel_tol", cfg.quadrature.rel_tol);
    cfg.quadrature.abs_tol = s.number("abs_tol", cfg.quadrature.abs_tol);
    cfg.quadrature.x_max = s.number("x_max", cfg.quadrature.x_max);
    cfg.quadrature.max_subdivisions = s.integer("max_subdivisions", cfg.quadrature.max_subdivisions);
  }
  if (top.has("fit_windows")) {
    const json& arr = top.raw("fit_windows");
    if (!arr.is_array()) top.fail("fit_windows", "expected an array of [d_lo, d_hi] pairs");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const json& w = arr[i];
      if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number()) {
        top.fail("fit_windows[" + std::to_string(i) + "]", "expected [d_lo, d_hi] in nm");
      }
      cfg.fit_windows.push_back(FitWindow{w[0].get<double>(), w[1].get<double>()});
    }
  }
  if (top.has("outputs")) {
    const json& arr = top.raw("outputs");
    if (!arr.is_array()) top.fail("outputs", "expected an array of csv, json, asymptotes");
    cfg.outputs.clear();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string field = "outputs[" + std::to_string(i) + "]";
      if (!arr[i].is_string()) top.fail(field, "expected a string");
      const auto v = arr[i].get<std::string>();
      if (v == "csv") {
        cfg.outputs.push_back(OutputKind::csv);
      } else if (v == "json") {
        cfg.outputs.push_back(OutputKind::json);
      } else if (v == "asymptotes") {
        cfg.outputs.push_back(OutputKind::asymptotes);
      } else {
        top.fail(field, "expected csv, json or asymptotes, got '" + v + "'");
      }
    }
  }
  validate(cfg);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": invalid JSON: " + e.what());
  }
  const auto dir = std::filesystem::path(path).parent_path().string();
  return parse_run_config(doc, dir.empty() ? "." : dir);
}

void validate(const RunConfig& cfg) {
  const auto& s = cfg.sweep;
  if (!(s.d_min > 0.0) || !std::isfinite(s.d_min)) throw ConfigError("sweep.d_min: must be > 0 nm");
  if (!std::isfinite(s.d_max)) throw ConfigError("sweep.d_max: must be finite");
  if (!(s.d_min < s.d_max)) {
    throw ConfigError("sweep.d_max: must exceed sweep.d_min (" + std::to_string(s.d_min) + " nm)");
  }
  if (s.points_per_decade < 4) throw ConfigError("sweep.points_per_decade: must be >= 4");
  rethrow_as_config("", [&] { cfg.quadrature.validate(); });
  for (std::size_t i = 0; i < cfg.fit_windows.size(); ++i) {
    const auto& w = cfg.fit_windows[i];
    if (!(w.d_lo > 0.0) || !(w.d_lo < w.d_hi)) {
      throw ConfigError("fit_windows[" + std::to_string(i) + "]: need 0 < d_lo < d_hi");
    }
  }
  switch (cfg.model) {
    case ModelKind::drude: rethrow_as_config("drude", [&] { cfg.drude.validate(); }); break;
    case ModelKind::hybrid: rethrow_as_config("hybrid", [&] { cfg.hybrid.validate(); }); break;
    case ModelKind::tabulated: {
      const auto& t = cfg.tabulated;
      if (t.eps_xx_file.empty()) throw ConfigError("tabulated.eps_xx_file: required");
      if (t.eps_xy_file.empty()) throw ConfigError("tabulated.eps_xy_file: required");
      for (const auto& [field, file] : {std::pair{"tabulated.eps_xx_file", t.eps_xx_file},
                                        std::pair{"tabulated.eps_xy_file", t.eps_xy_file}}) {
        if (!std::filesystem::exists(file)) {
          throw ConfigError(std::string(field) + ": file '" + file + "' does not exist");
        }
      }
      if (t.points_per_decade < 8) throw ConfigError("tabulated.points_per_decade: must be >= 8");
      if (t.tail) rethrow_as_config("tabulated.tail", [&] { t.tail->validate(); });
      break;
    }
  }
}

json to_json(const RunConfig& cfg) {
  json j;
  j["model"] = to_string(cfg.model);
  j["configuration"] = to_string(cfg.configuration);
  switch (cfg.model) {
    case ModelKind::drude:
      j["drude"] = {{"omega_p", cfg.drude.omega_p},
                    {"omega_c", cfg.drude.omega_c},
                    {"inv_tau", cfg.drude.inv_tau}};
      break;
    case ModelKind::hybrid:
      j["hybrid"] = {{"omega_p", cfg.hybrid.omega_p},
                     {"omega_0", cfg.hybrid.omega_0},
                     {"eps_xy_eff", cfg.hybrid.eps_xy_eff},
                     {"omega_star", cfg.hybrid.omega_star}};
      break;
    case ModelKind::tabulated: {
      const auto& t = cfg.tabulated;
      json tab = {{"eps_xx_file", t.eps_xx_file},
                  {"eps_xy_file", t.eps_xy_file},
                  {"points_per_decade", t.points_per_decade},
                  {"xy_tail", t.xy_tail == XyTailPolicy::truncate ? "truncate" : "power-law"},
                  {"upper_tail_cutoff", number_or_null(t.upper_tail_cutoff)}};
      tab["tail"] = t.tail ? json{{"omega_p", t.tail->omega_p}, {"inv_tau", t.tail->inv_tau}}
                           : json(nullptr);
      j["tabulated"] = tab;
      break;
    }
  }
  j["sweep"] = {{"d_min", cfg.sweep.d_min},
                {"d_max", cfg.sweep.d_max},
                {"points_per_decade", cfg.sweep.points_per_decade}};
  j["quadrature"] = {{"rel_tol", cfg.quadrature.rel_tol},
                     {"abs_tol", cfg.quadrature.abs_tol},
                     {"x_max", cfg.quadrature.x_max},
                     {"max_subdivisions", cfg.quadrature.max_subdivisions}};
  j["fit_windows"] = json::array();
  for (const auto& w : cfg.fit_windows) j["fit_windows"].push_back({w.d_lo, w.d_hi});
  j["outputs"] = json::array();
  for (auto o : cfg.outputs) j["outputs"].push_back(to_string(o));
  return j;
}

std::string config_hash(const RunConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json(cfg).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::shared_ptr<const DielectricResponse> make_material(const RunConfig& cfg) {
  switch (cfg.model) {
    case ModelKind::drude: return std::make_shared<DrudeModel>(cfg.drude);
    case ModelKind::hybrid: return std::make_shared<HybridModel>(cfg.hybrid);
    case ModelKind::tabulated: {
      const auto& t = cfg.tabulated;
      KkOptions opt;
      opt.xy_tail = t.xy_tail;
      opt.upper_tail_cutoff = t.upper_tail_cutoff;
      TabulatedMaterial m(load_table_file(t.eps_xx_file, TableKind::im_eps_xx), t.tail,
                          load_table_file(t.eps_xy_file, TableKind::re_eps_xy), opt);
      return std::make_shared<TabulatedMaterial>(build_cache(std::move(m), t.points_per_decade));
    }
  }
  return nullptr;
}

std::vector<double> sweep_distances(const SweepSpec& s) {
  const double decades = std::log10(s.d_max / s.d_min);
  const int n = static_cast<int>(std::ceil(decades * s.points_per_decade - 1e-9)) + 1;
  std::vector<double> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    d[static_cast<std::size_t>(i)] =
        s.d_min * std::pow(s.d_max / s.d_min, static_cast<double>(i) / (n - 1));
  }
  d.front() = s.d_min;
  d.back() = s.d_max;
  return d;
}

int worker_count() {
  if (const char* env = std::getenv("KERR_CASIMIR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
    warn(std::string("ignoring KERR_CASIMIR_THREADS='") + env + "' (expected a positive integer)");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepReport run_sweep(const RunConfig& cfg, int threads) {
  validate(cfg);
  SweepReport report;
  report.config = cfg;
  report.hash = config_hash(cfg);

  WarningCapture capture;
  const auto material = make_material(cfg);
  const MirrorPair mirrors = same_mirrors(*material);

  struct Task {
    double d;
    Configuration c;
  };
  std::vector<Task> tasks;
  for (double d : sweep_distances(cfg.sweep)) {
    for (Configuration c : configurations(cfg.configuration)) tasks.push_back({d, c});
  }
  report.rows.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        report.rows[i] = interaction(mirrors, tasks[i].d, tasks[i].c, cfg.quadrature);
      } catch (const InteractionConvergenceError& e) {
        report.rows[i] = e.best();
        report.rows[i].converged = false;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n_workers =
      std::clamp(threads > 0 ? threads : worker_count(), 1, static_cast<int>(tasks.size()));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < n_workers; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& r : report.rows) {
    if (!r.converged) {
      report.all_converged = false;
      warn("quadrature did not converge at D = " + std::to_string(r.distance_nm) + " nm (" +
           std::string(to_string(r.config)) + "); best estimate kept");
    }
  }

  for (Configuration c : configurations(cfg.configuration)) {
    for (const auto& w : regime_windows(cfg)) fit_window(report.rows, c, w.label, w.lo, w.hi, report.fits);
    for (const auto& w : cfg.fit_windows) fit_window(report.rows, c, "window", w.d_lo, w.d_hi, report.fits);
  }
  report.sign_change_nm = locate_sign_change(report.rows, mirrors, cfg.quadrature);

  const bool want_asymptotes =
      std::find(cfg.outputs.begin(), cfg.outputs.end(), OutputKind::asymptotes) != cfg.outputs.end();
  if (want_asymptotes && cfg.model != ModelKind::tabulated) {
    report.comparisons = compare_asymptotics(cfg, report.rows);
  }

  // Keep the first occurrence of each message, in emission order.
  std::set<std::string> seen;
  for (const auto& m : capture.messages()) {
    if (seen.insert(m).second) report.warnings.push_back(m);
  }
  return report;
}

std::vector<AsymptoteComparison> compare_asymptotics(const RunConfig& cfg,
                                                     const std::vector<InteractionResult>& rows) {
  if (cfg.model == ModelKind::tabulated) {
    throw ConfigError(
        "model: asymptotic comparison needs a closed-form model (drude or hybrid); tabulated "
        "materials have none");
  }
  const auto windows = regime_windows(cfg);
  std::vector<AsymptoteComparison> out;
  for (const auto& r : rows) {
    AsymptoticPrediction p;
    Regime regime;
    if (cfg.model == ModelKind::drude) {
      regime = classify(cfg.drude, r.distance_nm);
      p = drude_predict(cfg.drude, r.distance_nm, r.config, regime);
    } else {
      regime = classify(cfg.hybrid, r.distance_nm);
      const bool energy_ok = regime == Regime::hybrid_long ||
                             r.distance_nm < PhysicalConstants::hbar_c / cfg.hybrid.omega_star;
      p = hybrid_predict(cfg.hybrid, r.distance_nm, r.config, regime, energy_ok);
    }
    const auto window = std::find_if(windows.begin(), windows.end(), [&](const RegimeWindow& w) {
      return w.label == to_string(regime);
    });
    const bool deep = window != windows.end() && deep_inside(r.distance_nm, window->lo, window->hi);
    auto add = [&](const char* q, double numeric, const std::optional<AsymptoticValue>& a) {
      if (!a || !std::isfinite(numeric)) return;
      const double ratio = numeric / a->value;
      out.push_back(AsymptoteComparison{r.distance_nm, r.config, regime, q, a->formula_id, numeric,
                                        a->value, ratio, deep,
                                        deep && !(ratio >= 0.5 && ratio <= 2.0)});
    };
    add("dE", r.delta_E, p.delta_E);
    add("dF", r.delta_F, p.delta_F);
    if (r.config == Configuration::in_plane) {
      add("dE1", r.e1.value_or(NAN), p.e1);
      add("dE2", r.e2.value_or(NAN), p.e2);
      add("dF1", r.f1.value_or(NAN), p.f1);
      add("dF2", r.f2.value_or(NAN), p.f2);
    }
  }
  return out;
}

void emit_csv(const SweepReport& report, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << format_double(r.distance_nm) << ',' << to_string(r.config) << ','
        << format_double(r.delta_E) << ',' << format_double(r.delta_F) << ','
        << format_double(to_si_energy_per_area(r.delta_E)) << ','
        << format_double(to_si_force_per_area(r.delta_F));
    for (const auto& part : {r.e1, r.e2, r.f1, r.f2}) {
      out << ',';
      if (part) out << format_double(*part);
    }
    out << ',' << format_double(r.err_estimate) << '\n';
  }
  if (!out) throw std::ios_base::failure("failed writing CSV output");
}

json report_json(const SweepReport& report) {
  json j;
  j["config"] = to_json(report.config);
  j["config_hash"] = report.hash;
  j["all_converged"] = report.all_converged;
  j["rows"] = json::array();
  for (const auto& r : report.rows) {
    json row = {{"D_nm", r.distance_nm},
                {"config", to_string(r.config)},
                {"config_hash", report.hash},
                {"deltaE_eV_nm2", r.delta_E},
                {"deltaF_eV_nm3", r.delta_F},
                {"deltaE_J_m2", to_si_energy_per_area(r.delta_E)},
                {"deltaF_mN_m2", to_si_force_per_area(r.delta_F)},
                {"abs_deltaF_mN_m2", std::abs(to_si_force_per_area(r.delta_F))},
                {"sign_deltaF", static_cast<int>(sign_of(r.delta_F))},
                {"abs_deltaE_J_m2", std::abs(to_si_energy_per_area(r.delta_E))},
                {"sign_deltaE", static_cast<int>(sign_of(r.delta_E))},
                {"err", r.err_estimate},
                {"converged", r.converged}};
    if (r.config == Configuration::in_plane) {
      row["E1"] = r.e1.value_or(NAN);
      row["E2"] = r.e2.value_or(NAN);
      row["F1"] = r.f1.value_or(NAN);
      row["F2"] = r.f2.value_or(NAN);
    }
    j["rows"].push_back(row);
  }
  j["fits"] = json::array();
  for (const auto& f : report.fits) {
    json e = {{"config", to_string(f.config)}, {"window", f.label}, {"d_lo", f.d_lo}, {"d_hi", f.d_hi}};
    if (f.fit) {
      e["exponent"] = f.fit->exponent;
      e["prefactor"] = f.fit->prefactor;
      e["residual"] = f.fit->residual;
      e["points"] = f.fit->points;
    } else {
      e["note"] = f.note;
    }
    j["fits"].push_back(e);
  }
  j["sign_change_nm"] = report.sign_change_nm ? json(*report.sign_change_nm) : json(nullptr);
  j["asymptotes"] = json::array();
  bool any_flag = false;
  for (const auto& c : report.comparisons) {
    any_flag = any_flag || c.flagged;
    j["asymptotes"].push_back({{"D_nm", c.distance_nm},
                               {"config", to_string(c.config)},
                               {"regime", to_string(c.regime)},
                               {"quantity", c.quantity},
                               {"formula_id", c.formula_id},
                               {"numeric", c.numeric},
                               {"asymptotic", c.asymptotic},
                               {"ratio", c.ratio},
                               {"deep", c.deep},
                               {"flagged", c.flagged}});
  }
  j["asymptote_flags"] = any_flag;
  j["warnings"] = report.warnings;
  return j;
}

void emit_json(const SweepReport& report, std::ostream& out) {
  out << report_json(report).dump(2) << '\n';
  if (!out) throw std::ios_base::failure("failed writing JSON output");
}

void emit_comparisons_csv(const std::vector<AsymptoteComparison>& rows, std::ostream& out) {
  out << "D_nm,config,regime,quantity,numeric,asymptotic,ratio,formula_id,deep,flagged\n";
  for (const auto& c : rows) {
    out << format_double(c.distance_nm) << ',' << to_string(c.config) << ',' << to_string(c.regime)
        << ',' << c.quantity << ',' << format_double(c.numeric) << ','
        << format_double(c.asymptotic) << ',' << format_double(c.ratio) << ',' << c.formula_id
        << ',' << (c.deep ? 1 : 0) << ',' << (c.flagged ? 1 : 0) << '\n';
  }
  if (!out) throw std::ios_base::failure("failed writing CSV output");
}

}  // namespace kcasimir
