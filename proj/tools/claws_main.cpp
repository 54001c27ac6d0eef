#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "claws/config.hpp"
#include "claws/errors.hpp"
#include "claws/experiments.hpp"
#include "claws/indices.hpp"
#include "claws/log.hpp"

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kConfigError = 2, kRuntimeError = 3 };

struct Options {
  std::string config;
  std::string out;
  int workers = 0;
  std::optional<std::string> suite;
  std::optional<int> n;
  std::optional<double> s;
  std::optional<int> N;
};

void print_index_table(const nlohmann::json& summary) {
  const auto& rows = summary.at("table");
  const bool wide = !rows.empty() && rows.front().contains("l4");
  std::printf("n = %d   s = %s   N = %d\n", summary.at("n").get<int>(), summary.at("s").dump().c_str(),
              summary.at("N").get<int>());
  auto opt = [](const nlohmann::json& v) { return v.is_null() ? std::string("-") : v.dump(); };
  std::printf("N0 = %s   N1 = %s   N2 = %s\n\n", opt(summary.at("N0")).c_str(), opt(summary.at("N1")).c_str(),
              opt(summary.at("N2")).c_str());
  std::printf("%4s %5s %5s %5s", "k", "l1", "l2", "l3");
  if (wide) std::printf(" %5s %5s %5s", "l4", "l5", "nu");
  std::printf("\n");
  for (const auto& r : rows) {
    std::printf("%4d %5d %5d %5d", r.at("k").get<int>(), r.at("l1").get<int>(), r.at("l2").get<int>(),
                r.at("l3").get<int>());
    if (wide) std::printf(" %5d %5d %5d", r.at("l4").get<int>(), r.at("l5").get<int>(), r.at("nu").get<int>());
    std::printf("\n");
  }
}

int run(claws::ExperimentKind kind, const Options& opt) {
  claws::ExperimentConfig cfg;
  if (!opt.config.empty()) {
    cfg = claws::load_config(opt.config);
    if (cfg.kind != kind) {
      throw claws::ConfigError(std::string("config kind '") + claws::to_string(cfg.kind) +
                                   "' does not match subcommand '" + claws::to_string(kind) + "'",
                               {"kind"});
    }
  } else if (kind != claws::ExperimentKind::indices) {
    throw claws::ConfigError("--config is required for this subcommand", {"--config"});
  }
  cfg.kind = kind;
  if (opt.n) cfg.indices.n = *opt.n;
  if (opt.s) cfg.indices.s = *opt.s;
  if (opt.N) cfg.indices.N = *opt.N;
  if (opt.suite) cfg.checks.suite = *opt.suite;
  if (!opt.out.empty()) cfg.output_dir = opt.out;
  claws::validate(cfg);

  const auto reports = claws::run_sweep(cfg, opt.workers);
  bool ok = true;
  for (const auto& rep : reports) {
    ok = ok && rep.ok;
    if (kind == claws::ExperimentKind::indices) {
      const auto summary = nlohmann::json::parse(rep.summary_json);
      std::cout << summary.dump() << "\n\n";
      print_index_table(summary);
    } else {
      std::cout << rep.summary_json << "\n";
    }
  }
  return ok ? kOk : kChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  claws::init_logging();
  CLI::App app{"claws: pseudo-spectral laboratory for conservation laws with multiplier dissipation"};
  app.require_subcommand(1);

  Options opt;
  struct Sub {
    const char* name;
    claws::ExperimentKind kind;
    const char* help;
  };
  const Sub subs[] = {
      {"simulate", claws::ExperimentKind::simulate, "Integrate the nonlinear problem and record diagnostics"},
      {"linear-decay", claws::ExperimentKind::linear_decay, "Decay rate of the linear semigroup"},
      {"heat-gap", claws::ExperimentKind::heat_gap, "Decay rate of the semigroup minus the heat flow"},
      {"shell-rate", claws::ExperimentKind::shell_rate, "E-folding rate of frequency-shell data"},
      {"asymptotics", claws::ExperimentKind::asymptotics, "Convergence to the heat diffusion wave"},
      {"indices", claws::ExperimentKind::indices, "Regularity indices l1..l5, N0, N1, N2"},
      {"check-inequalities", claws::ExperimentKind::check_inequalities, "Interpolation, energy and product checks"},
  };
  std::optional<claws::ExperimentKind> chosen;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", opt.config, "TOML or JSON experiment configuration");
    sub->add_option("--out", opt.out, "Output directory (overrides output_dir)");
    sub->add_option("--workers", opt.workers, "Concurrent sweep workers (0 = available parallelism)")
        ->check(CLI::NonNegativeNumber);
    if (s.kind == claws::ExperimentKind::indices) {
      sub->add_option("--n", opt.n, "Spatial dimension");
      sub->add_option("--s", opt.s, "Dissipation exponent s > 1");
      sub->add_option("--N", opt.N, "Data regularity N");
    }
    if (s.kind == claws::ExperimentKind::check_inequalities) {
      sub->add_option("--suite", opt.suite, "interpolation | energy | product")
          ->check(CLI::IsMember({"interpolation", "energy", "product"}));
    }
    const auto kind = s.kind;
    sub->callback([&chosen, kind] { chosen = kind; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return run(*chosen, opt);
  } catch (const claws::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const claws::StageError& e) {
    std::cerr << "error in stage '" << e.stage() << "': " << e.what() << "\n";
    return kRuntimeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}
