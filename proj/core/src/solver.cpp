#include "claws/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "claws/errors.hpp"
#include "claws/fft.hpp"
#include "claws/functionals.hpp"

namespace claws {

std::vector<double> TrajectoryRecord::times() const { return channel(&TrajectorySample::t); }

std::vector<double> TrajectoryRecord::channel(double TrajectorySample::*member) const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.*member);
  return out;
}

std::vector<double> TrajectoryRecord::gradient_channel(int k) const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.grad_l2.at(static_cast<std::size_t>(k)));
  return out;
}

IfRk4Stepper::IfRk4Stepper(const DissipationSpec& spec, FluxModel flux, const Grid& grid,
                           bool dealias)
    : grid_(grid), flux_(std::move(flux)), dealias_(dealias) {
  if (flux_.components() != grid.dim() && !flux_.is_zero()) {
    throw DomainError("flux needs one component per spatial dimension");
  }
  const std::size_t n = grid.size();
  rate_.resize(n);
  xi_.resize(n);
  keep_.resize(n);
  odd_ok_.resize(n);
  const int p = grid.points();
  for (std::size_t i = 0; i < n; ++i) {
    xi_[i] = grid.wavevector(i);
    rate_[i] = spec.rate(std::hypot(xi_[i][0], xi_[i][1]));
    const auto m = grid.modes(i);
    bool keep = true;
    for (int d = 0; d < grid.dim(); ++d) keep = keep && 3 * std::abs(m[d]) <= p;
    keep_[i] = dealias ? keep : 1;
    odd_ok_[i] = {static_cast<unsigned char>(m[0] != -p / 2),
                  static_cast<unsigned char>(grid.dim() < 2 || m[1] != -p / 2)};
  }
  for (auto* v : {&k1_, &k2_, &k3_, &k4_, &stage_, &work_, &flux_hat_}) v->resize(n);
  phys_.resize(n);
}

void IfRk4Stepper::prepare(double dt) {
  if (dt == cached_dt_) return;
  const std::size_t n = rate_.size();
  full_.resize(n);
  half_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    full_[i] = std::exp(-rate_[i] * dt);
    half_[i] = std::exp(-rate_[i] * (0.5 * dt));
  }
  cached_dt_ = dt;
}

void IfRk4Stepper::nonlinear_term(const std::vector<Complex>& in, std::vector<Complex>& out) {
  const std::size_t n = in.size();
  out.assign(n, Complex{});
  if (flux_.is_zero()) return;

  for (std::size_t i = 0; i < n; ++i) work_[i] = keep_[i] ? in[i] : Complex{};
  fft::backward(work_, grid_.dim(), grid_.points());
  for (std::size_t i = 0; i < n; ++i) phys_[i] = work_[i].real();

  const double scale = 1.0 / static_cast<double>(n);
  for (int j = 0; j < flux_.components(); ++j) {
    if (flux_.coefficients()[static_cast<std::size_t>(j)].empty()) continue;
    for (std::size_t i = 0; i < n; ++i) flux_hat_[i] = flux_.value(j, phys_[i]);
    fft::forward(flux_hat_, grid_.dim(), grid_.points());
    for (std::size_t i = 0; i < n; ++i) {
      if (!keep_[i] || !odd_ok_[i][static_cast<std::size_t>(j)]) continue;
      // -d/dx_j g_j  ->  -i xi_j g_j^
      out[i] += Complex{0.0, -xi_[i][static_cast<std::size_t>(j)]} * (flux_hat_[i] * scale);
    }
  }
  out[0] = Complex{};
}

void IfRk4Stepper::step(std::vector<Complex>& u, double dt) {
  prepare(dt);
  const std::size_t n = u.size();
  const double h = dt;

  nonlinear_term(u, k1_);
  for (std::size_t i = 0; i < n; ++i) stage_[i] = half_[i] * (u[i] + (0.5 * h) * k1_[i]);
  nonlinear_term(stage_, k2_);
  for (std::size_t i = 0; i < n; ++i) stage_[i] = half_[i] * u[i] + (0.5 * h) * k2_[i];
  nonlinear_term(stage_, k3_);
  for (std::size_t i = 0; i < n; ++i) stage_[i] = full_[i] * u[i] + h * (half_[i] * k3_[i]);
  nonlinear_term(stage_, k4_);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = full_[i] * u[i] +
           (h / 6.0) * (full_[i] * k1_[i] + 2.0 * half_[i] * (k2_[i] + k3_[i]) + k4_[i]);
  }
}

SpectralField IfRk4Stepper::step(const SpectralField& field, double dt) {
  SpectralField out = field;
  step(out.coeffs, dt);
  return out;
}

SpectralField step_ifrk4(const DissipationSpec& spec, const FluxModel& flux,
                         const SpectralField& field, double dt, bool dealias) {
  IfRk4Stepper stepper(spec, flux, field.grid, dealias);
  return stepper.step(field, dt);
}

void check_cfl(const FluxModel& flux, const RealField& u0, double dt) {
  double speed = 1.0;
  for (int j = 0; j < flux.components(); ++j) {
    for (double v : u0.values) speed = std::max(speed, std::abs(flux.derivative(j, v)));
  }
  const double limit = 0.5 * u0.grid.spacing() / speed;
  if (!(dt > 0.0) || dt > limit * (1.0 + 1e-12)) {
    throw CflError("time step " + std::to_string(dt) + " violates the advective limit " +
                   std::to_string(limit));
  }
}

TrajectorySample diagnose(const DissipationSpec& spec, const SpectralField& u, double t, int k_max,
                          std::optional<int> functional_order) {
  const Grid& g = u.grid;
  TrajectorySample out;
  out.t = t;
  out.mass = mass(u);

  const RealField phys = inverse(u);
  out.l1 = lp_norm(phys, 1.0);
  out.l2 = lp_norm(phys, 2.0);
  out.linf = lp_norm(phys, std::numeric_limits<double>::infinity());

  double tail = 0.0, total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto x = g.position(i);
    const double v = std::abs(phys.values[i]);
    total += v;
    bool outer = false;
    for (int d = 0; d < g.dim(); ++d) outer = outer || std::abs(x[static_cast<std::size_t>(d)]) >= 0.45 * g.length();
    if (outer) tail += v;
  }
  out.tail_fraction = total > 0.0 ? tail / total : 0.0;

  std::vector<double> grad_sq(g.size(), 0.0);
  for (int d = 0; d < g.dim(); ++d) {
    const RealField dd = inverse(derivative(u, d));
    for (std::size_t i = 0; i < g.size(); ++i) grad_sq[i] += dd.values[i] * dd.values[i];
  }
  out.grad_linf = std::sqrt(*std::max_element(grad_sq.begin(), grad_sq.end()));

  out.grad_l2.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  out.dissipation.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double e = std::norm(u.coeffs[i]);
    if (e == 0.0) continue;
    const auto xi = g.wavevector(i);
    const double r2 = xi[0] * xi[0] + xi[1] * xi[1];
    const double a = spec.rate(std::sqrt(r2));
    double w = 1.0;
    for (int k = 0; k <= k_max; ++k) {
      out.grad_l2[static_cast<std::size_t>(k)] += w * e;
      out.dissipation[static_cast<std::size_t>(k)] += w * a * e;
      w *= r2;
    }
  }
  for (int k = 0; k <= k_max; ++k) {
    out.grad_l2[static_cast<std::size_t>(k)] = std::sqrt(out.grad_l2[static_cast<std::size_t>(k)] * g.volume());
    out.dissipation[static_cast<std::size_t>(k)] *= g.volume();
  }

  if (functional_order) {
    const int N = *functional_order;
    const int bs = functional_bracket(spec.s());
    for (int k = 0; k <= N / bs + 1; ++k) {
      out.slices.push_back(mixed_norm(u, k, -static_cast<double>(N - k * bs)));
    }
  }
  return out;
}

namespace {

long long exact_multiple(double total, double dt, const char* what) {
  const double q = total / dt;
  const long long steps = std::llround(q);
  if (steps < 0 || std::abs(static_cast<double>(steps) * dt - total) > 1e-9 * std::max(1.0, total)) {
    throw DomainError(std::string(what) + " must be an integer multiple of dt");
  }
  return steps;
}

bool all_finite(const std::vector<Complex>& c) {
  double acc = 0.0;
  for (const auto& v : c) acc += std::norm(v);
  return std::isfinite(acc);
}

}  // namespace

TrajectoryRecord simulate(const DissipationSpec& spec, const FluxModel& flux, const RealField& u0,
                          const SolverConfig& cfg, const Observer& observer) {
  if (!(cfg.dt > 0.0)) throw DomainError("dt must be positive");
  if (!(cfg.final_time >= 0.0)) throw DomainError("final time must be >= 0");
  if (!(cfg.output_every > 0.0)) throw DomainError("output stride must be positive");
  if (cfg.k_max < 0) throw DomainError("k_max must be >= 0");
  check_cfl(flux, u0, cfg.dt);

  const long long steps = exact_multiple(cfg.final_time, cfg.dt, "final time");
  const long long stride = exact_multiple(cfg.output_every, cfg.dt, "output stride");
  if (stride < 1) throw DomainError("output stride must be at least one step");

  TrajectoryRecord rec;
  rec.dim = u0.grid.dim();
  rec.s = spec.s();
  rec.linear = flux.is_zero();
  rec.output_every = cfg.output_every;
  rec.k_max = cfg.k_max;
  rec.functional_order = cfg.functional_order;

  IfRk4Stepper stepper(spec, flux, u0.grid, cfg.dealias);
  SpectralField u = forward(u0);
  if (cfg.dealias && !flux.is_zero()) u.tag = Provenance::dealiased;

  auto record = [&](double t) {
    rec.samples.push_back(diagnose(spec, u, t, cfg.k_max, cfg.functional_order));
    if (cfg.keep_snapshots) rec.snapshots.push_back(inverse(u));
    if (observer) observer(t, u);
  };

  record(0.0);
  double last_good = 0.0;
  for (long long i = 1; i <= steps; ++i) {
    stepper.step(u.coeffs, cfg.dt);
    if (!all_finite(u.coeffs)) {
      throw BlowUpError("solution blew up before t = " + std::to_string(static_cast<double>(i) * cfg.dt),
                        last_good);
    }
    if (i % stride == 0 || i == steps) {
      const double t = static_cast<double>(i) * cfg.dt;
      record(t);
      last_good = t;
    }
  }
  return rec;
}

}  // namespace claws
