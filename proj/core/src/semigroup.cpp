#include "claws/semigroup.hpp"

#include <cmath>
#include <numbers>

#include "claws/errors.hpp"
#include "claws/quadrature.hpp"

namespace claws {

namespace {

constexpr double kQuadratureTolerance = 1e-10;

/// a(r) - mu r^2 = mu r^2 ((m / m(0))^{-s} - 1), free of cancellation near r = 0.
double rate_excess(const DissipationSpec& spec, double r) {
  const auto& sym = spec.symbol();
  const double rel = sym.excess(r) / sym.at_zero();
  return spec.mu() * r * r * std::expm1(-spec.s() * std::log1p(rel));
}

}  // namespace

const char* to_string(FlowMode mode) {
  switch (mode) {
    case FlowMode::full:
      return "full";
    case FlowMode::heat:
      return "heat";
    case FlowMode::gap:
      return "gap";
  }
  return "unknown";
}

double flow_multiplier(const DissipationSpec& spec, double r, double t, FlowMode mode) {
  switch (mode) {
    case FlowMode::full:
      return std::exp(-spec.rate(r) * t);
    case FlowMode::heat:
      return std::exp(-spec.heat_rate(r) * t);
    case FlowMode::gap: {
      const double x = -rate_excess(spec, r) * t;
      if (std::abs(x) > 0.5) return std::exp(-spec.rate(r) * t) - std::exp(-spec.heat_rate(r) * t);
      return std::exp(-spec.heat_rate(r) * t) * std::expm1(x);
    }
  }
  return 0.0;
}

SpectralField propagate(const DissipationSpec& spec, const SpectralField& field, double t,
                        FlowMode mode) {
  if (!(t >= 0.0)) throw DomainError("propagate: t must be >= 0");
  return apply_radial_multiplier(field, [&](double r) { return flow_multiplier(spec, r, t, mode); });
}

RadialProfile RadialProfile::gaussian(int dim, double width) {
  return {Kind::gaussian, dim, width, 0.0, 0.0};
}

RadialProfile RadialProfile::mean_zero_gaussian(int dim, double width) {
  return {Kind::mean_zero_gaussian, dim, width, 0.0, 0.0};
}

RadialProfile RadialProfile::shell(int dim, double r0, double thickness) {
  if (!(r0 > 0.0) || thickness < 0.0 || 2.0 * r0 < thickness) {
    throw DomainError("shell profile needs r0 > 0 and 0 <= thickness <= 2 r0");
  }
  return {Kind::shell, dim, 1.0, r0, thickness};
}

double RadialProfile::operator()(double r) const {
  switch (kind) {
    case Kind::gaussian:
      return std::exp(-r * r / (2.0 * width * width));
    case Kind::mean_zero_gaussian:
      return r * std::exp(-r * r / (2.0 * width * width));
    case Kind::shell: {
      if (thickness == 0.0) return 0.0;
      const double d = r - r0;
      if (std::abs(d) > 0.5 * thickness) return 0.0;
      const double c = std::cos(std::numbers::pi * d / thickness);
      return c * c;
    }
  }
  return 0.0;
}

double plancherel_surface_constant(int dim) {
  const double surface = 2.0 * std::pow(std::numbers::pi, 0.5 * dim) / std::tgamma(0.5 * dim);
  return surface / std::pow(2.0 * std::numbers::pi, dim);
}

double radial_norm_quadrature(const DissipationSpec& spec, const RadialProfile& profile, double t,
                              int k, FlowMode mode) {
  if (!(t >= 0.0)) throw DomainError("radial_norm_quadrature: t must be >= 0");
  if (k < 0) throw DomainError("radial_norm_quadrature: k must be >= 0");
  const int n = profile.dim;
  const double cn = plancherel_surface_constant(n);
  const int power = n - 1 + 2 * k;

  auto integrand = [&](double r) {
    const double w = flow_multiplier(spec, r, t, mode) * profile(r);
    return (power == 0 ? 1.0 : std::pow(r, power)) * w * w;
  };

  if (profile.is_delta()) {
    const double w = flow_multiplier(spec, profile.r0, t, mode);
    return std::sqrt(cn * std::pow(profile.r0, power) * w * w);
  }
  if (profile.kind == RadialProfile::Kind::shell) {
    const double a = profile.r0 - 0.5 * profile.thickness;
    const double b = profile.r0 + 0.5 * profile.thickness;
    return std::sqrt(cn * integrate_interval(integrand, a, b, kQuadratureTolerance));
  }

  // Characteristic radius: the smaller of the profile width and the heat
  // length 1/sqrt(mu t), so the geometric panels resolve the bulk.
  double scale = profile.width;
  if (t > 0.0) scale = std::min(scale, 1.0 / std::sqrt(spec.mu() * t));
  return std::sqrt(cn * integrate_half_line(integrand, scale, kQuadratureTolerance));
}

SlopeExperiment decay_slope_experiment(const DissipationSpec& spec, const RadialProfile& profile,
                                       int k, FlowMode mode, std::span<const double> times,
                                       TimeWindow window) {
  if (times.size() < 30) throw DomainError("decay experiment needs at least 30 time points");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw DomainError("time grid must be strictly increasing");
  }
  if (times.front() > 0.0 && times.size() > 2) {
    const double ratio = times[1] / times[0];
    for (std::size_t i = 2; i < times.size(); ++i) {
      if (std::abs(times[i] / times[i - 1] - ratio) > 1e-6 * ratio) {
        throw DomainError("time grid must be log-spaced");
      }
    }
  }

  SlopeExperiment out;
  out.times.assign(times.begin(), times.end());
  out.norms.reserve(times.size());
  for (double t : times) out.norms.push_back(radial_norm_quadrature(spec, profile, t, k, mode));

  if (mode != FlowMode::gap) {
    for (std::size_t i = 1; i < out.norms.size(); ++i) {
      if (out.norms[i] > out.norms[i - 1] * (1.0 + 1e-9)) {
        throw QuadratureError("norm history is not monotone at t = " + std::to_string(times[i]));
      }
    }
  }
  out.local_slopes = local_log_slopes(out.times, out.norms);

  if (profile.kind == RadialProfile::Kind::shell) {
    out.fit = fit_exponential_rate(out.times, out.norms, window);
  } else {
    out.fit = fit_algebraic_rate(out.times, out.norms, window, false);
  }
  return out;
}

}  // namespace claws
