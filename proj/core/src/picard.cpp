#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "claws/errors.hpp"
#include "claws/solver.hpp"

namespace claws {

namespace {

constexpr int kNodes = 8;

// Gauss-Legendre nodes and weights on [0, 1].
struct UnitRule {
  std::array<double, kNodes> x{};
  std::array<double, kNodes> w{};
};

UnitRule unit_rule() {
  using Rule = boost::math::quadrature::gauss<double, kNodes>;
  const auto& a = Rule::abscissa();
  const auto& wt = Rule::weights();
  UnitRule r;
  int i = 0;
  for (std::size_t j = a.size(); j-- > 0;) {
    r.x[i] = 0.5 * (1.0 - a[j]);
    r.w[i++] = 0.5 * wt[j];
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    r.x[i] = 0.5 * (1.0 + a[j]);
    r.w[i++] = 0.5 * wt[j];
  }
  return r;
}

double lagrange(const std::array<double, kNodes>& nodes, int j, double x) {
  double v = 1.0;
  for (int m = 0; m < kNodes; ++m) {
    if (m != j) v *= (x - nodes[m]) / (nodes[j] - nodes[m]);
  }
  return v;
}

double distance(const std::vector<std::vector<Complex>>& a,
                const std::vector<std::vector<Complex>>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  }
  return d;
}

}  // namespace

SpectralField picard_oracle(const DissipationSpec& spec, const FluxModel& flux, const RealField& u0,
                            double t, int iterations, bool dealias) {
  if (!(t > 0.0) || t > 0.1) throw DomainError("picard oracle needs 0 < t <= 0.1");
  if (iterations < 1) throw DomainError("picard oracle needs at least one iteration");

  const UnitRule rule = unit_rule();
  std::array<double, kNodes> tau{};
  for (int i = 0; i < kNodes; ++i) tau[i] = t * rule.x[i];

  IfRk4Stepper ops(spec, flux, u0.grid, dealias);
  const auto& a = ops.rates();
  const std::size_t n = a.size();
  const SpectralField start = forward(u0);
  const auto& c0 = start.coeffs;

  // Interpolation weights lagrange_j(tau_i x_m) for the inner quadratures.
  std::array<std::array<std::array<double, kNodes>, kNodes>, kNodes> interp{};
  for (int i = 0; i < kNodes; ++i)
    for (int m = 0; m < kNodes; ++m)
      for (int j = 0; j < kNodes; ++j) interp[i][m][j] = lagrange(tau, j, tau[i] * rule.x[m]);

  std::vector<std::vector<Complex>> u(kNodes), next(kNodes), nl(kNodes, std::vector<Complex>(n));
  for (int i = 0; i < kNodes; ++i) {
    u[i].resize(n);
    for (std::size_t q = 0; q < n; ++q) u[i][q] = std::exp(-a[q] * tau[i]) * c0[q];
  }

  double scale = 1e-300;
  for (const auto& c : c0) scale = std::max(scale, std::abs(c));
  double previous = std::numeric_limits<double>::infinity();
  int growth = 0;
  for (int it = 0; it < iterations; ++it) {
    for (int i = 0; i < kNodes; ++i) ops.nonlinear_term(u[i], nl[i]);
    for (int i = 0; i < kNodes; ++i) {
      next[i].assign(n, Complex{});
      for (std::size_t q = 0; q < n; ++q) next[i][q] = std::exp(-a[q] * tau[i]) * c0[q];
      for (int m = 0; m < kNodes; ++m) {
        const double sigma = tau[i] * rule.x[m];
        const double w = tau[i] * rule.w[m];
        for (std::size_t q = 0; q < n; ++q) {
          Complex p{};
          for (int j = 0; j < kNodes; ++j) p += interp[i][m][j] * nl[j][q];
          next[i][q] += w * std::exp(-a[q] * (tau[i] - sigma)) * p;
        }
      }
    }
    const double d = distance(next, u);
    std::swap(u, next);
    if (!std::isfinite(d)) throw ConvergenceError("picard iteration produced non-finite values");
    if (d == 0.0) break;
    growth = d > previous && d > 1e-12 * scale ? growth + 1 : 0;
    if (growth >= 3) throw ConvergenceError("picard iterates are moving apart");
    previous = d;
  }

  for (int i = 0; i < kNodes; ++i) ops.nonlinear_term(u[i], nl[i]);
  SpectralField out(u0.grid);
  out.tag = dealias && !flux.is_zero() ? Provenance::dealiased : Provenance::raw;
  for (std::size_t q = 0; q < n; ++q) {
    Complex v = std::exp(-a[q] * t) * c0[q];
    for (int j = 0; j < kNodes; ++j) v += t * rule.w[j] * std::exp(-a[q] * (t - tau[j])) * nl[j][q];
    out.coeffs[q] = v;
  }
  return out;
}

}  // namespace claws
