#include "claws/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "claws/errors.hpp"
#include "claws/random_fields.hpp"

namespace claws {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::warning: return "warning";
  }
  return "?";
}

InterpolationReport interpolation_check(const SpectralField& field, int k, double s) {
  if (k < 0) throw DomainError("interpolation check needs k >= 0");
  InterpolationReport rep;
  const double lhs = mixed_norm(field, k, s);
  const double A = mixed_norm(field, k + 1, s);
  double B = 0.0;
  for (const auto& c : field.coeffs) B = std::max(B, std::abs(c));
  rep.lhs = lhs * lhs;
  if (B == 0.0) {
    rep.trivial = true;
    return rep;
  }

  const Grid& g = field.grid;
  std::vector<std::pair<double, double>> shells;  // (|xi|^2, weight)
  shells.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto xi = g.wavevector(i);
    const double r2 = xi[0] * xi[0] + xi[1] * xi[1];
    const double radial = k == 0 ? 1.0 : std::pow(r2, k);
    shells.emplace_back(r2, radial * std::pow(1.0 + r2, -s));
  }
  std::sort(shells.begin(), shells.end());

  const double A2 = A * A, B2 = B * B, vol = g.volume();
  double V = 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  while (i < shells.size()) {
    const double r2 = shells[i].first;
    while (i < shells.size() && shells[i].first == r2) V += shells[i++].second;
    // Between this lattice radius and the next, V is constant and A^2/R^2
    // decreases, so the infimum is the limit at the next radius.
    const double next = i < shells.size() ? shells[i].first : std::numeric_limits<double>::infinity();
    const double value = (std::isinf(next) ? 0.0 : A2 / next) + B2 * V * vol;
    if (value < best) {
      best = value;
      rep.best_radius = std::sqrt(next);
    }
  }
  rep.bound = best;
  rep.pass = rep.lhs <= best * (1.0 + 1e-6);
  return rep;
}

EnergyReport energy_identity_check(const TrajectoryRecord& record) {
  const auto& smp = record.samples;
  if (smp.size() < 3) throw DomainError("energy check needs at least 3 outputs");
  for (const auto& x : smp) {
    if (x.dissipation.empty() || x.grad_l2.empty()) throw DomainError("energy check needs recorded dissipation");
  }
  EnergyReport rep;
  rep.linear = record.linear;
  auto energy = [&](std::size_t i) { return smp[i].grad_l2[0] * smp[i].grad_l2[0]; };
  const bool wide = smp.size() >= 5;
  const std::size_t first = wide ? 2 : 1;
  double max_stride = 0.0;
  for (std::size_t i = first; i + first < smp.size(); ++i) {
    const double h = 0.5 * (smp[i + 1].t - smp[i - 1].t);
    max_stride = std::max(max_stride, h);
    const double fd = wide ? (energy(i - 2) - 8.0 * energy(i - 1) + 8.0 * energy(i + 1) - energy(i + 2)) / (12.0 * h)
                           : (energy(i + 1) - energy(i - 1)) / (2.0 * h);
    const double rhs = -2.0 * smp[i].dissipation[0];
    const double e_mid = energy(i);
    double err = 0.0;
    if (record.linear) {
      const double denom = std::abs(rhs);
      err = denom > 0.0 ? std::abs(fd - rhs) / denom : std::abs(fd);
      if (err > 1e-6) rep.status = CheckStatus::fail;
    } else {
      const double tol = 1e-8 * e_mid / h;
      err = fd - rhs;
      if (err > tol) rep.status = CheckStatus::fail;
      err = e_mid > 0.0 ? err * h / e_mid : err;
    }
    rep.max_error = std::max(rep.max_error, err);
    ++rep.points;
  }
  if (max_stride > 1.0) {
    rep.status = CheckStatus::warning;
    rep.note = "output stride above 1; the finite-difference comparison is not meaningful";
  }
  return rep;
}

namespace {

std::vector<double> production_ratios(const TrajectoryRecord& record, int k) {
  if (k < 1 || k > record.k_max) throw DomainError("k-energy audit needs 1 <= k <= k_max");
  const auto& smp = record.samples;
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < smp.size(); ++i) {
    const auto kk = static_cast<std::size_t>(k);
    const double h = smp[i + 1].t - smp[i - 1].t;
    const double fd = (smp[i + 1].grad_l2[kk] * smp[i + 1].grad_l2[kk] -
                       smp[i - 1].grad_l2[kk] * smp[i - 1].grad_l2[kk]) / h;
    const double production = fd + 2.0 * smp[i].dissipation[kk];
    const double scale = smp[i].grad_linf * smp[i].grad_l2[kk] * smp[i].grad_l2[kk];
    if (scale > 0.0) out.push_back(production / scale);
  }
  return out;
}

}  // namespace

double calibrate_k_energy(const TrajectoryRecord& record, int k) {
  const auto r = production_ratios(record, k);
  double c = 0.0;
  for (double v : r) c = std::max(c, v);
  return c;
}

KEnergyAudit k_energy_audit(const TrajectoryRecord& record, int k, double constant) {
  KEnergyAudit a;
  a.k = k;
  a.constant = constant;
  for (double v : production_ratios(record, k)) a.max_ratio = std::max(a.max_ratio, v);
  a.pass = a.max_ratio <= 2.0 * constant;
  return a;
}

namespace {

SpectralField partial(const SpectralField& u, std::array<int, 2> alpha) {
  SpectralField out = u;
  for (int axis = 0; axis < 2; ++axis) {
    if (alpha[axis] > 0) out = derivative(out, axis, alpha[axis]);
  }
  return out;
}

}  // namespace

double product_ratio(const SpectralField& u1, const SpectralField& u2, std::array<int, 2> a1,
                     std::array<int, 2> a2, ProductNorms norms) {
  if (u1.grid.dim() == 1 && (a1[1] != 0 || a2[1] != 0)) {
    throw DomainError("multi-index has a second component on a 1D grid");
  }
  const int k = a1[0] + a1[1] + a2[0] + a2[1];
  const RealField d1 = inverse(partial(u1, a1));
  const RealField d2 = inverse(partial(u2, a2));
  RealField prod = d1;
  for (std::size_t i = 0; i < prod.values.size(); ++i) prod.values[i] *= d2.values[i];

  const double p = norms == ProductNorms::p2_qinf_r2 ? 2.0 : 1.0;
  const double q = norms == ProductNorms::p2_qinf_r2 ? std::numeric_limits<double>::infinity() : 2.0;
  const double num = lp_norm(prod, p);
  const double den = lp_norm(inverse(u1), q) * gradient_norm(u2, k) +
                     lp_norm(inverse(u2), q) * gradient_norm(u1, k);
  if (!(den > 0.0)) return -1.0;
  return num / den;
}

ProductReport product_ratio_scan(std::uint64_t seed, std::size_t corpus_size, int n, int k1, int k2,
                                 ProductNorms norms) {
  if (k1 < 0 || k2 < 0 || k1 + k2 > 4) throw DomainError("product scan needs k1, k2 >= 0 and k1 + k2 <= 4");
  const Grid grid(n, 64, 2.0 * std::numbers::pi);
  std::mt19937_64 rng(seed);
  auto split = [&](int order) -> std::array<int, 2> {
    if (n == 1) return {order, 0};
    const int first = std::min(order, static_cast<int>(unit_uniform(rng) * (order + 1)));
    return {first, order - first};
  };
  ProductReport rep;
  for (std::size_t i = 0; i < corpus_size; ++i) {
    const SpectralField u1 = random_band_limited(grid, rng, 8);
    const SpectralField u2 = random_band_limited(grid, rng, 8);
    const auto a1 = split(k1);
    const auto a2 = split(k2);
    const double r = product_ratio(u1, u2, a1, a2, norms);
    if (r < 0.0) {
      ++rep.skipped;
      continue;
    }
    ++rep.samples;
    rep.max_ratio = std::max(rep.max_ratio, r);
  }
  rep.pass = std::isfinite(rep.max_ratio) && rep.max_ratio <= 10.0;
  return rep;
}

}  // namespace claws
