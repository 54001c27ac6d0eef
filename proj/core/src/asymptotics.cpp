#include "claws/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "claws/errors.hpp"
#include "claws/quadrature.hpp"

namespace claws {

namespace {

constexpr double kTailLimit = 1e-8;
constexpr double kSolutionTailLimit = 1e-6;

ProfileGapSeries finish(ProfileGapSeries out, int dim, TimeWindow window, bool log_correction) {
  const bool rho = log_correction && dim == 2;
  for (std::size_t i = 0; i < out.times.size(); ++i) {
    const double t = out.times[i];
    out.ratio.push_back(out.solution_norm[i] > 0.0 ? out.gap_norm[i] / out.solution_norm[i] : 0.0);
    out.rho_corrected_gap.push_back(rho && t > 0.0 ? out.gap_norm[i] / std::log1p(t) : out.gap_norm[i]);
  }
  out.fit = fit_algebraic_rate(out.times, out.gap_norm, window, rho);
  out.solution_fit = fit_algebraic_rate(out.times, out.solution_norm, window, false);
  return out;
}

}  // namespace

double diffusion_wave_tail(const DiffusionWave& wave, double box_length, double t) {
  const double spread = std::sqrt(4.0 * wave.mu * (t + 1.0));
  const double inside = std::erf(0.5 * box_length / spread);
  return 1.0 - std::pow(inside, wave.dim);
}

RealField diffusion_wave(const DiffusionWave& wave, const Grid& grid, double t) {
  if (!(t >= 0.0)) throw DomainError("diffusion wave needs t >= 0");
  if (grid.dim() != wave.dim) throw DomainError("diffusion wave dimension does not match grid");
  RealField out(grid);
  if (wave.mass == 0.0) return out;
  const double tail = diffusion_wave_tail(wave, grid.length(), t);
  if (tail > kTailLimit) {
    throw DomainError("heat kernel tail mass " + std::to_string(tail) + " leaves the box at t = " +
                      std::to_string(t));
  }
  const double tau = t + 1.0;
  const double norm = wave.mass * std::pow(4.0 * std::numbers::pi * wave.mu * tau, -0.5 * wave.dim);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto x = grid.position(i);
    const double r2 = x[0] * x[0] + x[1] * x[1];
    out.values[i] = norm * std::exp(-r2 / (4.0 * wave.mu * tau));
  }
  return out;
}

double diffusion_wave_norm(const DiffusionWave& wave, double t, int k) {
  if (k < 0) throw DomainError("derivative order must be >= 0");
  const double tau = t + 1.0;
  const double h = k + 0.5 * wave.dim;
  const double v = wave.mass * wave.mass * plancherel_surface_constant(wave.dim) * std::tgamma(h) /
                   (2.0 * std::pow(2.0 * wave.mu * tau, h));
  return std::sqrt(v);
}

double continuum_time_limit(const Grid& grid, double mu) {
  const double dk = grid.wavenumber_step();
  return 0.2 / (dk * dk * mu);
}

ProfileGapSeries profile_gap_linear(const DissipationSpec& spec, const RadialProfile& profile,
                                    FlowMode mode, int k, std::span<const double> times,
                                    TimeWindow window, bool log_correction) {
  if (mode == FlowMode::gap) throw DomainError("profile gap compares a flow, not a flow gap");
  if (profile.kind == RadialProfile::Kind::shell) throw DomainError("profile gap needs a smooth profile");
  if (k < 0) throw DomainError("derivative order must be >= 0");
  const int n = profile.dim;
  const double cn = plancherel_surface_constant(n);
  const double M = profile.at_zero();
  const double mu = spec.mu();
  const int power = n - 1 + 2 * k;

  ProfileGapSeries out;
  for (double t : times) {
    if (!(t >= 0.0)) throw DomainError("time grid must be nonnegative");
    const double scale = std::min(profile.width, 1.0 / std::sqrt(mu * (t + 1.0)));
    auto weight = [&](double r) { return power == 0 ? 1.0 : std::pow(r, power); };
    auto gap = [&](double r) {
      const double d = flow_multiplier(spec, r, t, mode) * profile(r) -
                       M * std::exp(-mu * (t + 1.0) * r * r);
      return weight(r) * d * d;
    };
    auto sol = [&](double r) {
      const double d = flow_multiplier(spec, r, t, mode) * profile(r);
      return weight(r) * d * d;
    };
    out.times.push_back(t);
    out.gap_norm.push_back(std::sqrt(cn * integrate_half_line(gap, scale, 1e-10)));
    out.solution_norm.push_back(std::sqrt(cn * integrate_half_line(sol, scale, 1e-10)));
  }
  return finish(std::move(out), n, window, log_correction);
}

ProfileGapSeries profile_gap_trajectory(const DissipationSpec& spec, const TrajectoryRecord& record,
                                        int k, TimeWindow window, bool log_correction) {
  if (record.snapshots.size() != record.samples.size() || record.snapshots.empty()) {
    throw DomainError("profile gap needs a trajectory with snapshots at every output");
  }
  const Grid& grid = record.snapshots.front().grid;
  const DiffusionWave wave{mass(forward(record.snapshots.front())), spec.mu(), grid.dim()};

  ProfileGapSeries out;
  for (std::size_t i = 0; i < record.samples.size(); ++i) {
    const double t = record.samples[i].t;
    if (record.samples[i].tail_fraction > kSolutionTailLimit && window.contains(t)) {
      throw DomainError("solution tail mass exceeds 1e-6 of the total at t = " + std::to_string(t));
    }
    const RealField& u = record.snapshots[i];
    const RealField star = diffusion_wave(wave, grid, t);
    RealField diff = u;
    for (std::size_t j = 0; j < diff.values.size(); ++j) diff.values[j] -= star.values[j];
    out.times.push_back(t);
    out.gap_norm.push_back(gradient_norm(forward(diff), k));
    out.solution_norm.push_back(gradient_norm(forward(u), k));
  }
  return finish(std::move(out), grid.dim(), window, log_correction);
}

}  // namespace claws
