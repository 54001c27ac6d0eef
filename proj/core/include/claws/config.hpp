#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace claws {

enum class ExperimentKind {
  simulate,
  linear_decay,
  heat_gap,
  shell_rate,
  asymptotics,
  indices,
  check_inequalities
};

/// CLI spelling ("linear-decay", ...).
const char* to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

struct ModelSection {
  int dim = 1;
  std::string symbol = "sobolev";
  double symbol_param = 0.0;        ///< epsilon (radiating_gas) or order (ahe)
  std::vector<double> symbol_coeffs;  ///< custom symbol, ascending powers of r^2
  double s = 1.0;
  std::string flux = "burgers";       ///< burgers | zero | polynomial
  std::vector<std::vector<double>> flux_coeffs;  ///< polynomial flux, one row per component
};

struct GridSection {
  double length = 2.0 * 3.14159265358979323846;
  int points = 64;
};

struct SolverSection {
  double dt = 0.01;
  double final_time = 1.0;
  double output_every = 0.1;
  bool dealias = true;
  int k_max = 2;
  std::optional<int> functional_order;
  bool snapshots = false;
};

struct InitialSection {
  std::string preset = "gaussian";  ///< gaussian | derivative_gaussian | random
  double amplitude = 0.1;
  double width = 1.0;
  int max_mode = 8;
};

struct TimeSection {
  double start = 1.0;
  double stop = 1e4;
  int count = 60;
};

struct FitSection {
  double lo = 1e2;
  double hi = 1e4;
  bool log_correction = false;
};

/// Radial whole-space data for the quadrature experiments.
struct ProfileSection {
  std::string kind = "gaussian";  ///< gaussian | mean_zero_gaussian | shell
  double width = 1.0;
  double r0 = 8.0;
  double thickness = 0.0;
  int k = 0;
  std::string mode = "full";  ///< full | heat | gap
};

struct AsymptoticsSection {
  std::string source = "linear";  ///< linear | trajectory
  bool mean_zero = true;
  int k = 0;
};

struct IndicesSection {
  int n = 1;
  double s = 2.0;
  int N = 8;
};

struct ChecksSection {
  std::string suite = "interpolation";  ///< interpolation | energy | product
  int corpus = 1000;
  int k1 = 1;
  int k2 = 1;
  std::string norms = "2,inf,2";  ///< "2,inf,2" | "1,2,2"
};

/// Runs the experiment once per value with `parameter` (a dotted key such as
/// "model.s") overridden; each run writes into `<out>/<parameter>=<value>`.
struct SweepSection {
  std::string parameter;
  std::vector<double> values;
};

struct ExperimentConfig {
  int schema = 1;
  ExperimentKind kind = ExperimentKind::simulate;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "out";
  int workers = 0;  ///< 0 = available parallelism
  ModelSection model;
  GridSection grid;
  SolverSection solver;
  InitialSection initial;
  TimeSection time;
  FitSection fit;
  ProfileSection profile;
  AsymptoticsSection asymptotics;
  IndicesSection indices;
  ChecksSection checks;
  std::optional<SweepSection> sweep;
};

inline constexpr int kConfigSchema = 1;

/// Parses TOML text (or JSON when `json` is set) and validates it.  Throws
/// ConfigError naming every offending key.
ExperimentConfig parse_config(const std::string& text, bool json = false);

/// Reads a file; ".json" selects JSON, anything else TOML.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Schema and cross-field checks; throws ConfigError.
void validate(const ExperimentConfig& cfg);

/// Canonical TOML rendering (the config echo).  Round-trips through parse_config.
std::string to_toml(const ExperimentConfig& cfg);

/// Sets a numeric dotted key (the sweep parameter).  Throws ConfigError for
/// unknown keys.
void set_numeric(ExperimentConfig& cfg, const std::string& key, double value);

}  // namespace claws
