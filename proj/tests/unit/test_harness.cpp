#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "claws/config.hpp"
#include "claws/csv.hpp"
#include "claws/errors.hpp"
#include "claws/experiments.hpp"
#include "claws/field_io.hpp"

using namespace claws;
namespace fs = std::filesystem;

namespace {
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string without_output_dir(std::string echo) {
  const auto at = echo.find("output_dir");
  return at == std::string::npos ? echo : echo.erase(at, echo.find('\n', at) - at);
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("claws_unit_" + name);
  fs::remove_all(p);
  return p;
}

bool names(const ConfigError& e, const std::string& field) {
  return std::any_of(e.fields().begin(), e.fields().end(),
                     [&](const std::string& f) { return f.find(field) != std::string::npos; });
}

const char* kSimulate = R"(
schema = 1
kind = "simulate"
seed = 3
[model]
dim = 1
s = 1.0
[grid]
length = 100.0
points = 128
[solver]
dt = 0.05
final_time = 2.0
output_every = 0.5
snapshots = true
[initial]
preset = "random"
amplitude = 0.1
max_mode = 6
)";
}  // namespace

TEST_SUITE("harness_cli") {
  TEST_CASE("csv formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e-300) == "1e-300");
    CHECK(format_double(std::nan("")) == "nan");
    CHECK(format_double(-INFINITY) == "-inf");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CsvTable t({"t", "x"});
    t.add_row({0.0, 2.5});
    t.add_row({1.0, -1.0});
    CHECK(t.str() == "t,x\n0,2.5\n1,-1\n");
    CHECK_THROWS(t.add_row({1.0}));
  }

  TEST_CASE("negative dt is rejected by name") {
    try {
      parse_config("kind = \"simulate\"\n[solver]\ndt = -0.1\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(names(e, "dt"));
      CHECK(std::string(e.what()).find("dt") != std::string::npos);
    }
  }

  TEST_CASE("schema errors") {
    try {
      parse_config("kind = \"simulate\"\nbogus = 1\n[grid]\npoints = \"many\"\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(names(e, "bogus"));
      CHECK(names(e, "grid.points"));
    }
    CHECK_THROWS_AS(parse_config("kind = \"teleport\"\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("kind = \"simulate\"\n[grid]\npoints = 100\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("kind = \"shell-rate\"\n[profile]\nkind = \"gaussian\"\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("= broken"), ConfigError);
  }

  TEST_CASE("JSON and TOML agree") {
    const auto a = parse_config(kSimulate);
    const auto b = parse_config(
        R"({"schema":1,"kind":"simulate","seed":3,"model":{"dim":1,"s":1.0},"grid":{"length":100.0,"points":128},
            "solver":{"dt":0.05,"final_time":2.0,"output_every":0.5,"snapshots":true},
            "initial":{"preset":"random","amplitude":0.1,"max_mode":6}})",
        true);
    CHECK(to_toml(a) == to_toml(b));
  }

  TEST_CASE("echo round-trips") {
    auto cfg = parse_config(kSimulate);
    cfg.sweep = SweepSection{"model.s", {0.5, 1.0}};
    cfg.solver.functional_order = 3;
    const std::string echo = to_toml(cfg);
    CHECK(to_toml(parse_config(echo)) == echo);
  }

  TEST_CASE("numeric overrides") {
    auto cfg = parse_config(kSimulate);
    set_numeric(cfg, "model.s", 2.0);
    set_numeric(cfg, "grid.points", 256);
    CHECK(cfg.model.s == 2.0);
    CHECK(cfg.grid.points == 256);
    CHECK_THROWS_AS(set_numeric(cfg, "model.nope", 1.0), ConfigError);
  }

  TEST_CASE("kind names") {
    for (auto k : {ExperimentKind::simulate, ExperimentKind::linear_decay, ExperimentKind::heat_gap,
                   ExperimentKind::shell_rate, ExperimentKind::asymptotics, ExperimentKind::indices,
                   ExperimentKind::check_inequalities}) {
      CHECK(experiment_kind_from_string(to_string(k)) == k);
    }
  }

  TEST_CASE("snapshot round-trip") {
    const fs::path dir = scratch("snap");
    fs::create_directories(dir);
    const Grid g(2, 16, 3.0);
    RealField u(g);
    for (std::size_t i = 0; i < u.values.size(); ++i) u.values[i] = std::sin(double(i)) / 3.0;
    write_snapshot(u, dir / "u");
    const auto v = read_snapshot(dir / "u");
    CHECK(v.grid == g);
    CHECK(v.values == u.values);
    fs::remove_all(dir);
  }

  TEST_CASE("reruns are byte-identical") {
    auto cfg = parse_config(kSimulate);
    cfg.output_dir = scratch("det_a");
    const auto ra = run_experiment(cfg);
    cfg.output_dir = scratch("det_b");
    const auto rb = run_experiment(cfg);
    CHECK(ra.ok);
    for (const char* f : {"trajectory.csv", "summary.json", "snapshots/u_00000.bin", "snapshots/u_00004.json"}) {
      CHECK(fs::exists(fs::path(ra.output_dir) / f));
      CHECK(slurp(fs::path(ra.output_dir) / f) == slurp(fs::path(rb.output_dir) / f));
    }
    CHECK(without_output_dir(slurp(fs::path(ra.output_dir) / "config.echo.toml")) ==
          without_output_dir(slurp(fs::path(rb.output_dir) / "config.echo.toml")));
    const auto csv = slurp(fs::path(ra.output_dir) / "trajectory.csv");
    CHECK(csv.rfind("t,mass,l1,l2,linf", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    fs::remove_all(ra.output_dir);
    fs::remove_all(rb.output_dir);
  }

  TEST_CASE("indices experiment") {
    auto cfg = parse_config("schema = 1\nkind = \"indices\"\n[indices]\nn = 1\ns = 2.0\nN = 8\n");
    cfg.output_dir = scratch("idx");
    const auto rep = run_experiment(cfg);
    const auto j = nlohmann::json::parse(rep.summary_json);
    CHECK(j["N0"] == 8);
    CHECK(j["N1"] == 2);
    fs::remove_all(cfg.output_dir);
  }

  TEST_CASE("runtime failures carry the stage") {
    auto cfg = parse_config(kSimulate);
    cfg.initial.amplitude = 50.0;
    cfg.solver.dt = 0.5;
    cfg.solver.output_every = 0.5;
    cfg.output_dir = scratch("stage");
    try {
      run_experiment(cfg);
      FAIL("expected StageError");
    } catch (const StageError& e) {
      CHECK(e.stage() == "simulate");
    }
    fs::remove_all(cfg.output_dir);
  }

  TEST_CASE("sweep writes one directory per value") {
    auto cfg = parse_config(kSimulate);
    cfg.solver.snapshots = false;
    cfg.output_dir = scratch("sweep");
    cfg.sweep = SweepSection{"model.s", {0.5, 2.0}};
    const auto reps = run_sweep(cfg, 2);
    REQUIRE(reps.size() == 2);
    CHECK(fs::path(reps[0].output_dir).filename() == "model.s=0.5");
    CHECK(fs::path(reps[1].output_dir).filename() == "model.s=2");
    for (const auto& r : reps) CHECK(fs::exists(fs::path(r.output_dir) / "trajectory.csv"));
    fs::remove_all(cfg.output_dir);
  }
}
