#include "claws/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace claws::fft {

namespace {

// FFTW's planner is not re-entrant; execution through the new-array
// interface is.  Plans are created once per (dim, points, sign) with
// FFTW_ESTIMATE so that results do not depend on timing measurements.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int dim, int points, int sign) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_tuple(dim, points, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    std::size_t total = 1;
    for (int d = 0; d < dim; ++d) total *= static_cast<std::size_t>(points);
    std::vector<fftw_complex> scratch(total);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = nullptr;
    if (dim == 1) {
      plan = fftw_plan_dft_1d(points, scratch.data(), scratch.data(), sign, flags);
    } else if (dim == 2) {
      plan = fftw_plan_dft_2d(points, points, scratch.data(), scratch.data(), sign, flags);
    }
    if (!plan) throw std::runtime_error("fftw: could not create plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(std::span<std::complex<double>> data, int dim, int points, int sign) {
  fftw_plan plan = cache().get(dim, points, sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace

void forward(std::span<std::complex<double>> data, int dim, int points) {
  execute(data, dim, points, FFTW_FORWARD);
}

void backward(std::span<std::complex<double>> data, int dim, int points) {
  execute(data, dim, points, FFTW_BACKWARD);
}

}  // namespace claws::fft
