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

// Command-line front end: distance sweeps, closed-form predictions,
// power-law fits, plate-lens estimates and imaginary-axis data dumps.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kcasimir/asymptotics.hpp"
#include "kcasimir/diagnostics.hpp"
#include "kcasimir/geometry.hpp"
#include "kcasimir/optical_data.hpp"
#include "kcasimir/reflection.hpp"
#include "kcasimir/sweep.hpp"

namespace kc = kcasimir;
using nlohmann::json;

namespace {

enum Exit { ok = 0, config_error = 1, partial = 2, io_error = 3 };

struct Common {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  double tol = 0.0;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

kc::RunConfig load_config(const Common& c) {
  kc::RunConfig cfg = c.config_path.empty() ? kc::parse_run_config(json::object())
                                            : kc::load_run_config(c.config_path);
  if (c.tol > 0.0) {
    cfg.quadrature.rel_tol = c.tol;
    kc::validate(cfg);
  }
  return cfg;
}

void write_output(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + c.out_path + "'");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing output file '" + c.out_path + "'");
}

std::vector<kc::Configuration> selected(const std::string& s, const kc::RunConfig& cfg) {
  if (s.empty()) return kc::configurations(cfg.configuration);
  if (s == "both") return {kc::Configuration::polar, kc::Configuration::in_plane};
  return {kc::configuration_from_string(s)};
}

// ---------------------------------------------------------------------------

int cmd_sweep(const Common& c) {
  const kc::RunConfig cfg = load_config(c);
  const kc::SweepReport report = kc::run_sweep(cfg);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  std::ostringstream out;
  if (c.format == "json") {
    kc::emit_json(report, out);
  } else {
    kc::emit_csv(report, out);
  }
  write_output(c, out.str());
  if (!report.comparisons.empty() && c.format == "csv" && !c.out_path.empty()) {
    std::ostringstream cmp;
    kc::emit_comparisons_csv(report.comparisons, cmp);
    write_output(Common{c.config_path, c.out_path + ".asymptotes.csv", "csv", c.tol}, cmp.str());
  }
  if (!report.all_converged) {
    std::cerr << "error: some sweep points did not converge; see the err column and warnings\n";
    return partial;
  }
  return ok;
}

struct PredictArgs {
  std::vector<double> distances;
  std::string configuration;
  std::string regime;
};

int cmd_predict(const Common& c, const PredictArgs& a) {
  const kc::RunConfig cfg = load_config(c);
  if (cfg.model == kc::ModelKind::tabulated) {
    throw kc::ConfigError("model: closed forms exist only for the drude and hybrid models");
  }
  const std::vector<double> ds = a.distances.empty() ? kc::sweep_distances(cfg.sweep) : a.distances;
  json rows = json::array();
  std::ostringstream csv;
  csv << "D_nm,config,regime,quantity,value,formula_id\n";
  for (double d : ds) {
    for (kc::Configuration conf : selected(a.configuration, cfg)) {
      kc::AsymptoticPrediction p;
      if (cfg.model == kc::ModelKind::drude) {
        const kc::Regime r = a.regime.empty() ? kc::classify(cfg.drude, d) : kc::regime_from_string(a.regime);
        p = kc::drude_predict(cfg.drude, d, conf, r);
      } else {
        const kc::Regime r = a.regime.empty() ? kc::classify(cfg.hybrid, d) : kc::regime_from_string(a.regime);
        const bool energy = r == kc::Regime::hybrid_long ||
                            d < kc::PhysicalConstants::hbar_c / cfg.hybrid.omega_star;
        p = kc::hybrid_predict(cfg.hybrid, d, conf, r, energy);
      }
      auto emit = [&](const char* q, const std::optional<kc::AsymptoticValue>& v) {
        if (!v) return;
        csv << fmt(d) << ',' << kc::to_string(conf) << ',' << kc::to_string(p.regime) << ',' << q
            << ',' << fmt(v->value) << ',' << v->formula_id << '\n';
        rows.push_back({{"D_nm", d},
                        {"config", kc::to_string(conf)},
                        {"regime", kc::to_string(p.regime)},
                        {"quantity", q},
                        {"value", v->value},
                        {"formula_id", v->formula_id}});
      };
      emit("dE", p.delta_E);
      emit("dF", p.delta_F);
      emit("dE1", p.e1);
      emit("dE2", p.e2);
      emit("dF1", p.f1);
      emit("dF2", p.f2);
    }
  }
  write_output(c, c.format == "json" ? json{{"config", kc::to_json(cfg)}, {"predictions", rows}}.dump(2) + "\n"
                                     : csv.str());
  return ok;
}

struct FitArgs {
  std::string input;
  std::string column = "deltaF_eV_nm3";
  std::string configuration = "polar";
  double d_min = 0.0;
  double d_max = INFINITY;
};

int cmd_fit(const Common& c, const FitArgs& a) {
  std::ifstream in(a.input);
  if (!in) throw IoError("cannot open sweep CSV '" + a.input + "'");
  std::string line;
  if (!std::getline(in, line)) throw kc::ConfigError("input: empty CSV '" + a.input + "'");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) header.push_back(cell);
  }
  const auto col = std::find(header.begin(), header.end(), a.column);
  if (col == header.end()) throw kc::ConfigError("column: '" + a.column + "' not in CSV header");
  const auto idx = static_cast<std::size_t>(col - header.begin());
  std::vector<double> d, v;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() < 2 || cells.size() <= idx) {
      if (cells.size() == idx) continue;  // trailing empty cell
      throw kc::ConfigError("input: line " + std::to_string(line_no) + " has too few columns");
    }
    if (cells[1] != a.configuration || cells[idx].empty()) continue;
    const double dist = std::stod(cells[0]);
    if (dist < a.d_min || dist > a.d_max) continue;
    d.push_back(dist);
    v.push_back(std::stod(cells[idx]));
  }
  const kc::PowerLawFit f = kc::fit_power_law(Eigen::Map<Eigen::ArrayXd>(d.data(), static_cast<Eigen::Index>(d.size())),
                                              Eigen::Map<Eigen::ArrayXd>(v.data(), static_cast<Eigen::Index>(v.size())));
  if (c.format == "json") {
    write_output(c, json{{"column", a.column}, {"config", a.configuration}, {"exponent", f.exponent},
                         {"prefactor", f.prefactor}, {"residual", f.residual}, {"points", f.points}}
                            .dump(2) + "\n");
  } else {
    write_output(c, "column,config,exponent,prefactor,residual,points\n" + a.column + "," +
                        a.configuration + "," + fmt(f.exponent) + "," + fmt(f.prefactor) + "," +
                        fmt(f.residual) + "," + std::to_string(f.points) + "\n");
  }
  return ok;
}

struct LensArgs {
  double radius_um = 100.0;
  double distance_nm = 50.0;
  std::string configuration;
};

int cmd_lens(const Common& c, const LensArgs& a) {
  const kc::RunConfig cfg = load_config(c);
  const auto material = kc::make_material(cfg);
  const kc::LensGeometry g(a.radius_um);
  std::ostringstream csv;
  json rows = json::array();
  csv << "config,D_nm,R_um,deltaE_eV_nm2,force_fN,systematic_fN\n";
  bool converged = true;
  for (kc::Configuration conf : selected(a.configuration, cfg)) {
    kc::InteractionResult r;
    try {
      r = conf == kc::Configuration::polar
              ? kc::energy_polar(kc::same_mirrors(*material), a.distance_nm, cfg.quadrature)
              : kc::energy_inplane(kc::same_mirrors(*material), a.distance_nm, cfg.quadrature);
    } catch (const kc::InteractionConvergenceError& e) {
      r = e.best();
      converged = false;
    }
    const kc::PlateLensForce f = kc::plate_lens_force(g, kc::EnergyPerArea{r.delta_E}, a.distance_nm);
    const double sys = std::abs(f.femtonewton) * kc::PlateLensForce::systematic;
    csv << kc::to_string(conf) << ',' << fmt(a.distance_nm) << ',' << fmt(a.radius_um) << ','
        << fmt(r.delta_E) << ',' << fmt(f.femtonewton) << ',' << fmt(sys) << '\n';
    rows.push_back({{"config", kc::to_string(conf)}, {"D_nm", a.distance_nm}, {"R_um", a.radius_um},
                    {"deltaE_eV_nm2", r.delta_E}, {"force_fN", f.femtonewton},
                    {"systematic_fN", sys}, {"converged", r.converged && converged}});
  }
  write_output(c, c.format == "json" ? json{{"config", kc::to_json(cfg)}, {"lens", rows}}.dump(2) + "\n"
                                     : csv.str());
  return converged ? ok : partial;
}

struct KkArgs {
  double omega_min = kc::TabulatedMaterial::kCacheLow;
  double omega_max = kc::TabulatedMaterial::kCacheHigh;
  int points_per_decade = 8;
  bool direct = false;
};

int cmd_kk(const Common& c, const KkArgs& a) {
  const kc::RunConfig cfg = load_config(c);
  if (cfg.model != kc::ModelKind::tabulated) {
    throw kc::ConfigError("model: the kk subcommand needs a tabulated material");
  }
  const auto material = kc::make_material(cfg);
  const auto& tab = dynamic_cast<const kc::TabulatedMaterial&>(*material);
  kc::SweepSpec grid{a.omega_min, a.omega_max, a.points_per_decade};
  if (!(grid.d_min > 0.0 && grid.d_min < grid.d_max) || grid.points_per_decade < 1) {
    throw kc::ConfigError("omega range: need 0 < omega-min < omega-max and points-per-decade >= 1");
  }
  std::ostringstream csv;
  csv << "omega_ev,eps_xx_imag_axis,eps_xy_imag_axis\n";
  for (double w : kc::sweep_distances(grid)) {
    const double xx = a.direct ? kc::kk_xx_imag_axis(tab, w) : tab.eps_xx(w);
    const double xy = a.direct ? kc::kk_xy_imag_axis(tab, w) : tab.eps_xy(w);
    csv << fmt(w) << ',' << fmt(xx) << ',' << fmt(xy) << '\n';
  }
  write_output(c, csv.str());
  return ok;
}

struct ReflectionArgs {
  double kc_ev = 1.0;
  int points = 50;
  std::string configuration;
};

int cmd_dump_reflection(const Common& c, const ReflectionArgs& a) {
  const kc::RunConfig cfg = load_config(c);
  const auto material = kc::make_material(cfg);
  if (!(a.kc_ev > 0.0) || a.points < 2) throw kc::ConfigError("kc: must be > 0 with >= 2 points");
  std::ostringstream csv;
  csv << "config,omega_ev,kc_ev,eps_xx,eps_xy,r_ss,r_pp,rsp2,drpp2\n";
  for (kc::Configuration conf : selected(a.configuration, cfg)) {
    for (int i = 0; i < a.points; ++i) {
      const double w = a.kc_ev * std::pow(1e-4, 1.0 - static_cast<double>(i) / (a.points - 1));
      const double exx = material->eps_xx(w);
      const double exy = material->eps_xy(w);
      const kc::MoCoefficients m = kc::mo_coefficients(kc::KPoint{w, a.kc_ev}, exx, exy, conf);
      csv << kc::to_string(conf) << ',' << fmt(w) << ',' << fmt(a.kc_ev) << ',' << fmt(exx) << ','
          << fmt(exy) << ',' << fmt(m.r_ss) << ',' << fmt(m.r_pp) << ',' << fmt(m.rsp2) << ','
          << fmt(m.drpp2) << '\n';
    }
  }
  write_output(c, csv.str());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnetic Casimir interaction between magneto-optical mirrors"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool with_format = true) {
    sub->add_option("--config", common.config_path, "JSON run configuration");
    sub->add_option("--out", common.out_path, "output file (default: standard output)");
    if (with_format) {
      sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    }
    sub->add_option("--tol", common.tol, "relative quadrature tolerance (overrides the config)")
        ->check(CLI::PositiveNumber);
  };

  auto* sweep = app.add_subcommand("sweep", "distance sweep of energies and forces");
  add_common(sweep);

  PredictArgs pa;
  auto* predict = app.add_subcommand("predict", "closed-form asymptotic predictions");
  add_common(predict);
  predict->add_option("--distance", pa.distances, "distances in nm (default: the sweep grid)");
  predict->add_option("--configuration", pa.configuration, "polar, in-plane or both");
  predict->add_option("--regime", pa.regime, "force a regime instead of classifying each D");

  FitArgs fa;
  auto* fit = app.add_subcommand("fit", "power-law fit of a sweep CSV column");
  add_common(fit);
  fit->add_option("--input", fa.input, "sweep CSV")->required();
  fit->add_option("--column", fa.column, "column to fit");
  fit->add_option("--configuration", fa.configuration, "polar or in-plane");
  fit->add_option("--d-min", fa.d_min, "lower distance bound (nm)");
  fit->add_option("--d-max", fa.d_max, "upper distance bound (nm)");

  LensArgs la;
  auto* lens = app.add_subcommand("lens", "plate-lens force by the proximity approximation");
  add_common(lens);
  lens->add_option("--radius-um", la.radius_um, "lens radius of curvature (um)");
  lens->add_option("--distance-nm", la.distance_nm, "plate-lens distance (nm)");
  lens->add_option("--configuration", la.configuration, "polar, in-plane or both");

  KkArgs ka;
  auto* kk = app.add_subcommand("kk", "tabulated material on the imaginary axis");
  add_common(kk, false);
  kk->add_option("--omega-min", ka.omega_min, "lowest frequency (eV)");
  kk->add_option("--omega-max", ka.omega_max, "highest frequency (eV)");
  kk->add_option("--points-per-decade", ka.points_per_decade, "grid density");
  kk->add_flag("--direct", ka.direct, "evaluate the transforms instead of the cache");

  ReflectionArgs ra;
  auto* refl = app.add_subcommand("dump-reflection", "reflection coefficients at fixed k_perp c");
  add_common(refl, false);
  refl->add_option("--kc", ra.kc_ev, "k_perp c in eV");
  refl->add_option("--points", ra.points, "frequencies on a log grid up to kc");
  refl->add_option("--configuration", ra.configuration, "polar, in-plane or both");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : config_error;
  }

  try {
    if (*sweep) return cmd_sweep(common);
    if (*predict) return cmd_predict(common, pa);
    if (*fit) return cmd_fit(common, fa);
    if (*lens) return cmd_lens(common, la);
    if (*kk) return cmd_kk(common, ka);
    if (*refl) return cmd_dump_reflection(common, ra);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io_error;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io_error;
  } catch (const kc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return config_error;
  } catch (const kc::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return config_error;
  } catch (const std::runtime_error& e) {
    // Unreadable table files surface here from the loader.
    std::cerr << "error: " << e.what() << '\n';
    return io_error;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return config_error;
  }
  return config_error;
}
