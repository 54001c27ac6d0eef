#include "claws/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "claws/errors.hpp"
#include "claws/indices.hpp"

namespace claws {

int functional_bracket(double s) { return s > 1.0 ? static_cast<int>(ceil_plus(s)) : 1; }

WeightedFunctionals weighted_functionals(const TrajectoryRecord& record, int n, double s, int N,
                                         int N1) {
  if (n < 1) throw DomainError("dimension must be positive");
  if (N < 0 || N1 < 0) throw DomainError("functional orders must be nonnegative");
  const int b = functional_bracket(s);
  const int top = N / b;

  std::string missing;
  if (record.functional_order != N) {
    missing += " slices for N=" + std::to_string(N);
  } else {
    for (const auto& smp : record.samples) {
      if (static_cast<int>(smp.slices.size()) < top + 2) {
        missing += " slice k=" + std::to_string(smp.slices.size());
        break;
      }
    }
  }
  if (record.k_max < N1) {
    for (int k = record.k_max + 1; k <= N1; ++k) missing += " grad k=" + std::to_string(k);
  }
  if (!missing.empty()) throw DomainError("trajectory lacks norm channels:" + missing);

  WeightedFunctionals f;
  f.n = n;
  f.s = s;
  f.N = N;
  f.N1 = N1;
  f.bracket = b;

  std::vector<double> sup_e(static_cast<std::size_t>(top) + 1, 0.0);
  std::vector<double> sup_op(static_cast<std::size_t>(N1) + 1, 0.0);
  double sup_m0 = 0.0, sup_m1 = 0.0, integral = 0.0;
  std::vector<double> prev_d;
  double prev_t = 0.0;

  for (const auto& smp : record.samples) {
    const double w = 1.0 + smp.t;
    double e = 0.0;
    for (int k = 0; k <= top; ++k) {
      const double v = smp.slices[static_cast<std::size_t>(k)];
      auto& cur = sup_e[static_cast<std::size_t>(k)];
      cur = std::max(cur, std::pow(w, k - 0.5) * v * v);
      e += cur;
    }
    std::vector<double> d(static_cast<std::size_t>(top) + 2);
    for (int k = 0; k <= top + 1; ++k) {
      const double v = smp.slices[static_cast<std::size_t>(k)];
      d[static_cast<std::size_t>(k)] = std::pow(w, k - 1.5) * v * v;
    }
    if (!prev_d.empty()) {
      for (std::size_t k = 0; k < d.size(); ++k) integral += 0.5 * (smp.t - prev_t) * (d[k] + prev_d[k]);
    }
    double op = 0.0;
    for (int k = 0; k <= N1; ++k) {
      const double v = smp.grad_l2[static_cast<std::size_t>(k)];
      auto& cur = sup_op[static_cast<std::size_t>(k)];
      cur = std::max(cur, std::pow(w, 0.5 * n + k) * v * v);
      op += cur;
    }
    sup_m0 = std::max(sup_m0, std::pow(w, 0.5 * n) * smp.linf);
    sup_m1 = std::max(sup_m1, std::pow(w, 0.5 * (n + 1)) * smp.grad_linf);

    f.times.push_back(smp.t);
    f.energy.push_back(e);
    f.dissipation.push_back(integral);
    f.optimal.push_back(op);
    f.m0.push_back(sup_m0);
    f.m1.push_back(sup_m1);
    prev_d = std::move(d);
    prev_t = smp.t;
  }
  return f;
}

}  // namespace claws
