#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "claws/config.hpp"
#include "claws/field.hpp"
#include "claws/flux.hpp"
#include "claws/semigroup.hpp"
#include "claws/symbol.hpp"

namespace claws {

struct ExperimentReport {
  ExperimentKind kind = ExperimentKind::simulate;
  std::filesystem::path output_dir;
  bool ok = true;  ///< every experiment-level check passed
  std::string summary_json;
};

DissipationSpec make_spec(const ExperimentConfig& cfg);
FluxModel make_flux(const ExperimentConfig& cfg);
RadialProfile make_profile(const ExperimentConfig& cfg);
Grid make_grid(const ExperimentConfig& cfg);

/// Initial data preset scaled to peak amplitude `initial.amplitude`:
///   gaussian             A exp(-|x|^2 / (2 w^2))
///   derivative_gaussian  A e^{1/2} (x_1 / w) exp(-|x|^2 / (2 w^2))   (zero mass)
///   random               seeded band-limited field, |k_j| <= max_mode
RealField initial_field(const ExperimentConfig& cfg);

/// Runs one experiment and writes trajectory.csv, summary.json and
/// config.echo.toml (plus snapshots/ when requested) into cfg.output_dir.
/// Runtime failures surface as StageError naming the failing stage.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Runs every sweep variant (or the single config) on at most `workers`
/// threads (0 = available parallelism).  Reports come back in sweep order;
/// the first failure is rethrown after all workers finish.
std::vector<ExperimentReport> run_sweep(const ExperimentConfig& cfg, int workers = 0);

}  // namespace claws
