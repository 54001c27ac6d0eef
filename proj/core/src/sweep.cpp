#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "claws/csv.hpp"
#include "claws/experiments.hpp"

namespace claws {

std::vector<ExperimentReport> run_sweep(const ExperimentConfig& cfg, int workers) {
  std::vector<ExperimentConfig> jobs;
  if (!cfg.sweep) {
    jobs.push_back(cfg);
  } else {
    for (double v : cfg.sweep->values) {
      ExperimentConfig c = cfg;
      c.sweep.reset();
      set_numeric(c, cfg.sweep->parameter, v);
      c.output_dir = cfg.output_dir / (cfg.sweep->parameter + "=" + format_double(v));
      jobs.push_back(std::move(c));
    }
  }

  if (workers <= 0) workers = cfg.workers;
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min<int>(workers, static_cast<int>(jobs.size()));

  std::vector<ExperimentReport> reports(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        reports[i] = run_experiment(jobs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

}  // namespace claws
