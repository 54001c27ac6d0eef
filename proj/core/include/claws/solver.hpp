#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "claws/field.hpp"
#include "claws/flux.hpp"
#include "claws/symbol.hpp"

namespace claws {

struct SolverConfig {
  double dt = 0.01;
  double final_time = 1.0;
  double output_every = 0.1;
  bool dealias = true;
  int k_max = 2;  ///< record ||grad^k u|| for k = 0..k_max
  /// When set to N, also record ||grad^k <grad>^{N - k[s]} u|| for
  /// k = 0..[N/[s]] + 1 (the Sobolev slices of the weighted functionals).
  std::optional<int> functional_order;
  bool keep_snapshots = false;
};

/// Diagnostics at one output time.
struct TrajectorySample {
  double t = 0.0;
  double mass = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double grad_linf = 0.0;      ///< max |grad u|
  double tail_fraction = 0.0;  ///< L^1 share of the outer 10% of the box
  std::vector<double> grad_l2;      ///< ||grad^k u||, k = 0..k_max
  std::vector<double> dissipation;  ///< L^n sum |xi|^{2k} a(xi) |u_k|^2, k = 0..k_max
  std::vector<double> slices;       ///< Sobolev slices, see SolverConfig
};

struct TrajectoryRecord {
  int dim = 1;
  double s = 0.0;
  bool linear = false;
  double output_every = 0.0;
  int k_max = 0;
  std::optional<int> functional_order;
  std::vector<TrajectorySample> samples;
  std::vector<RealField> snapshots;

  std::vector<double> times() const;
  std::vector<double> channel(double TrajectorySample::*member) const;
  std::vector<double> gradient_channel(int k) const;
};

/// Integrating-factor RK4 for u_t + div g(u) = Delta P_s u in Fourier space.
/// The linear part is applied exactly through exp(-a(xi) t); the flux
/// divergence -i xi . g(u)^ is evaluated pseudo-spectrally, with two-thirds
/// dealiasing of both its input and output when enabled.
class IfRk4Stepper {
 public:
  IfRk4Stepper(const DissipationSpec& spec, FluxModel flux, const Grid& grid, bool dealias = true);

  void step(std::vector<Complex>& coeffs, double dt);
  SpectralField step(const SpectralField& field, double dt);

  /// -div g(u) in Fourier space.  Its zero mode is exactly 0.
  void nonlinear_term(const std::vector<Complex>& in, std::vector<Complex>& out);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& rates() const { return rate_; }

 private:
  void prepare(double dt);

  Grid grid_;
  FluxModel flux_;
  bool dealias_;
  std::vector<double> rate_;
  std::vector<std::array<double, 2>> xi_;
  std::vector<unsigned char> keep_;
  std::vector<std::array<unsigned char, 2>> odd_ok_;

  double cached_dt_ = -1.0;
  std::vector<double> full_, half_;
  std::vector<Complex> k1_, k2_, k3_, k4_, stage_, work_, flux_hat_;
  std::vector<double> phys_;
};

SpectralField step_ifrk4(const DissipationSpec& spec, const FluxModel& flux,
                         const SpectralField& field, double dt, bool dealias = true);

/// Throws CflError when dt > 0.5 dx / max(1, max |g_j'(u0)|).
void check_cfl(const FluxModel& flux, const RealField& u0, double dt);

using Observer = std::function<void(double t, const SpectralField& u)>;

/// Advances u0 to cfg.final_time, recording diagnostics every
/// cfg.output_every (and at t = 0).  The observer, when given, sees the
/// spectral state at each output.  Throws BlowUpError on non-finite values,
/// CflError on a violated step restriction and DomainError when T or the
/// output stride is not an integer multiple of dt.
TrajectoryRecord simulate(const DissipationSpec& spec, const FluxModel& flux, const RealField& u0,
                          const SolverConfig& cfg, const Observer& observer = {});

/// Diagnostics of a single state (exposed for tests and the harness).
TrajectorySample diagnose(const DissipationSpec& spec, const SpectralField& u, double t, int k_max,
                          std::optional<int> functional_order);

/// Duhamel/Picard fixed point at a small time t <= 0.1:
///   u(theta) = e^{theta L} u0 + int_0^theta e^{(theta - tau) L} N(u(tau)) dtau,
/// with u represented on the 8 Gauss-Legendre nodes of [0, t], N(u(tau))
/// interpolated through them, and each time integral by 8-node Gauss
/// quadrature.  Throws ConvergenceError if successive iterates move apart.
SpectralField picard_oracle(const DissipationSpec& spec, const FluxModel& flux, const RealField& u0,
                            double t, int iterations, bool dealias = true);

}  // namespace claws
