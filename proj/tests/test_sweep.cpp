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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "approx.hpp"
#include "json.hpp"
#include "kcasimir/sweep.hpp"

using namespace kcasimir;
using nlohmann::json;

namespace {

RunConfig parse(const char* text) { return parse_run_config(json::parse(text)); }

std::string config_error(const char* text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

const WindowFit* find_window(const SweepReport& r, Configuration c, const std::string& label) {
  for (const WindowFit& f : r.fits) {
    if (f.config == c && f.label == label) return &f;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("empty config reproduces the figure defaults") {
  const RunConfig cfg = parse("{}");
  CHECK(cfg.model == ModelKind::drude);
  CHECK(cfg.configuration == ConfigSelection::both);
  CHECK(cfg.sweep.d_min == 1.0);
  CHECK(cfg.sweep.d_max == 10000.0);
  CHECK(cfg.drude.omega_p == 9.85);
  CHECK(cfg.outputs.size() == 1);
  const json resolved = to_json(cfg);
  CHECK(resolved["drude"]["inv_tau"] == 6.58e-3);
  CHECK(resolved["sweep"]["points_per_decade"] == 8);
}

TEST_CASE("config errors name the field") {
  CHECK(config_error(R"({"sweep": {"d_min": 10, "d_max": 10}})").rfind("sweep.d_max:", 0) == 0);
  CHECK(config_error(R"({"sweep": {"d_min": -1}})").rfind("sweep.d_min:", 0) == 0);
  CHECK(config_error(R"({"sweep": {"points_per_decade": 3}})").rfind("sweep.points_per_decade:", 0) == 0);
  CHECK(config_error(R"({"sweep": {"d_min": "one"}})").rfind("sweep.d_min:", 0) == 0);
  CHECK(config_error(R"({"drude": {"omega_p": 9.85, "gamma": 1}})").find("drude.gamma") != std::string::npos);
  CHECK(config_error(R"({"model": "lorentz"})").rfind("model:", 0) == 0);
  CHECK(config_error(R"({"quadrature": {"rel_tol": 0}})").rfind("quadrature.rel_tol:", 0) == 0);
  CHECK(config_error(R"({"outputs": ["png"]})").rfind("outputs[0]:", 0) == 0);
  CHECK(config_error(R"({"fit_windows": [[5, 1]]})").rfind("fit_windows[0]:", 0) == 0);
  CHECK(config_error(R"({"model": "tabulated"})").rfind("tabulated.eps_xx_file:", 0) == 0);
  CHECK(config_error(R"({"model": "tabulated", "tabulated": {"eps_xx_file": "/no/such.dat",
                        "eps_xy_file": "/no/such.dat"}})")
            .find("does not exist") != std::string::npos);
  CHECK_THROWS_AS(load_run_config("/no/such/config.json"), std::ios_base::failure);
}

TEST_CASE("config hash is stable and sensitive") {
  const RunConfig a = parse("{}");
  const RunConfig b = parse(R"({"model": "drude", "drude": {"omega_p": 9.85}})");
  const RunConfig c = parse(R"({"drude": {"omega_p": 9.86}})");
  CHECK(config_hash(a).size() == 16);
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a) != config_hash(c));
  // Round trip through the resolved form.
  CHECK(config_hash(parse_run_config(to_json(c))) == config_hash(c));
}

TEST_CASE("sweep distances are log spaced and inclusive") {
  const auto d = sweep_distances(SweepSpec{1.0, 100.0, 4});
  REQUIRE(d.size() == 9);
  CHECK(d.front() == 1.0);
  CHECK(d.back() == kctest::approx(100.0).epsilon(1e-14));
  CHECK(d[4] == kctest::approx(10.0).epsilon(1e-14));
}

TEST_CASE("worker count honours the environment") {
  ::setenv("KERR_CASIMIR_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  ::setenv("KERR_CASIMIR_THREADS", "0", 1);
  CHECK(worker_count() >= 1);
  ::unsetenv("KERR_CASIMIR_THREADS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("csv emission and determinism") {
  RunConfig cfg = parse(R"({"sweep": {"d_min": 20, "d_max": 60, "points_per_decade": 4}})");
  const SweepReport one = run_sweep(cfg, 4);
  const SweepReport two = run_sweep(cfg, 1);
  std::ostringstream a, b;
  emit_csv(one, a);
  emit_csv(two, b);
  CHECK(a.str() == b.str());

  std::istringstream lines(a.str());
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == kCsvHeader);
  std::getline(lines, row);
  CHECK(row.rfind("2.00000000e+01,polar,", 0) == 0);
  CHECK(row.find(",,,,") != std::string::npos);
  std::getline(lines, row);
  CHECK(row.find("in-plane") != std::string::npos);
  CHECK(row.find(",,") == std::string::npos);

  for (std::size_t i = 1; i < one.rows.size(); ++i) {
    CHECK(one.rows[i - 1].distance_nm <= one.rows[i].distance_nm);
  }
}

TEST_CASE("single-row report is two csv lines") {
  SweepReport r;
  r.config = parse("{}");
  InteractionResult row;
  row.distance_nm = 5.0;
  row.delta_E = -1.0;
  row.delta_F = -2.0;
  r.rows.push_back(row);
  std::ostringstream out;
  emit_csv(r, out);
  const std::string s = out.str();
  CHECK(std::count(s.begin(), s.end(), '\n') == 2);
}

TEST_CASE("json report embeds config, hash and signs") {
  RunConfig cfg = parse(R"({"configuration": "in-plane",
                            "sweep": {"d_min": 20, "d_max": 80, "points_per_decade": 4}})");
  const SweepReport r = run_sweep(cfg);
  const json j = report_json(r);
  CHECK(j["config"]["configuration"] == "in-plane");
  CHECK(j["config_hash"] == config_hash(cfg));
  for (const json& row : j["rows"]) {
    CHECK(row["config_hash"] == j["config_hash"]);
    CHECK(row["abs_deltaF_mN_m2"].get<double>() >= 0.0);
    CHECK(std::abs(row["sign_deltaF"].get<int>()) == 1);
  }
  REQUIRE(r.sign_change_nm.has_value());
  CHECK(*r.sign_change_nm > 20.0);
  CHECK(*r.sign_change_nm < 80.0);
}

TEST_CASE("Drude polar intermediate window fits a fourth power") {
  RunConfig cfg = parse(R"({"configuration": "polar", "fit_windows": [[100, 1000]],
                            "sweep": {"d_min": 100, "d_max": 1000, "points_per_decade": 8}})");
  const SweepReport r = run_sweep(cfg);
  const WindowFit* w = find_window(r, Configuration::polar, "window");
  REQUIRE(w != nullptr);
  REQUIRE(w->fit.has_value());
  CHECK(w->fit->exponent == kctest::approx(-4.0).epsilon(0.05));
}

TEST_CASE("hybrid in-plane long window fits a tenth power") {
  RunConfig cfg = parse(R"({"model": "hybrid", "configuration": "in-plane",
                            "fit_windows": [[100, 1000]],
                            "sweep": {"d_min": 100, "d_max": 1000, "points_per_decade": 8}})");
  const SweepReport r = run_sweep(cfg);
  const WindowFit* w = find_window(r, Configuration::in_plane, "window");
  REQUIRE(w != nullptr);
  REQUIRE(w->fit.has_value());
  CHECK(w->fit->exponent == kctest::approx(-10.0).epsilon(0.05));
}

TEST_CASE("asymptote comparisons at the documented points") {
  RunConfig drude = parse(R"({"sweep": {"d_min": 500, "d_max": 5000, "points_per_decade": 4}})");
  const SweepReport r = run_sweep(drude);
  std::vector<InteractionResult> at500;
  for (const auto& row : r.rows) {
    if (row.distance_nm == 500.0) at500.push_back(row);
  }
  REQUIRE(at500.size() == 2);
  for (const AsymptoteComparison& c : compare_asymptotics(drude, at500)) {
    if (c.quantity != "dE" && c.quantity != "dF") continue;
    CHECK_MESSAGE(c.ratio >= 0.75, c.formula_id);
    CHECK_MESSAGE(c.ratio <= 1.25, c.formula_id);
  }

  RunConfig hybrid = parse(R"({"model": "hybrid", "configuration": "polar",
                             "sweep": {"d_min": 2, "d_max": 20, "points_per_decade": 4}})");
  const SweepReport h = run_sweep(hybrid);
  bool seen = false;
  for (const AsymptoteComparison& c : compare_asymptotics(hybrid, {h.rows.front()})) {
    if (c.quantity != "dF") continue;
    seen = true;
    CHECK(c.formula_id == "hybrid-short-polar/dF");
    CHECK(c.ratio >= 0.5);
    CHECK(c.ratio <= 2.0);
  }
  CHECK(seen);
}

TEST_CASE("tabulated models have no closed forms") {
  RunConfig cfg = parse("{}");
  cfg.model = ModelKind::tabulated;
  CHECK_THROWS_AS(compare_asymptotics(cfg, {}), ConfigError);
}

TEST_CASE("starved quadrature flags rows instead of dropping them") {
  RunConfig cfg = parse(R"({"configuration": "polar", "quadrature": {"max_subdivisions": 2, "rel_tol": 1e-9},
                            "sweep": {"d_min": 5, "d_max": 50, "points_per_decade": 4}})");
  const SweepReport r = run_sweep(cfg);
  CHECK(r.rows.size() == 5);
  CHECK_FALSE(r.all_converged);
  const json j = report_json(r);
  CHECK(j["all_converged"] == false);
}

TEST_CASE("shipped recipes parse") {
  for (const char* name : {"fig1.json", "fig2.json", "fig5-synthetic.json"}) {
    const auto path = std::filesystem::path(KC_SOURCE_DIR) / "data" / name;
    CHECK_NOTHROW(load_run_config(path.string()));
  }
}
