#pragma once

#include <span>
#include <vector>

#include "claws/field.hpp"
#include "claws/rate_fit.hpp"
#include "claws/semigroup.hpp"
#include "claws/solver.hpp"

namespace claws {

/// u*(x, t) = M G(x, t + 1) with G the heat kernel of e^{mu t Delta}.
struct DiffusionWave {
  double mass = 0.0;
  double mu = 1.0;
  int dim = 1;
};

/// Heat-kernel mass of G(., t + 1) outside the box [-L/2, L/2)^n.
double diffusion_wave_tail(const DiffusionWave& wave, double box_length, double t);

/// Samples u*(., t) on the grid.  Throws DomainError when more than 1e-8 of
/// the kernel mass lies outside the box.
RealField diffusion_wave(const DiffusionWave& wave, const Grid& grid, double t);

/// Closed form ||grad^k u*(t)||_{L^2(R^n)}.
double diffusion_wave_norm(const DiffusionWave& wave, double t, int k);

/// Largest t with (2 pi / L)^2 mu t <= 0.2, the range where the torus still
/// behaves like the frequency continuum.
double continuum_time_limit(const Grid& grid, double mu);

struct ProfileGapSeries {
  std::vector<double> times;
  std::vector<double> gap_norm;
  std::vector<double> solution_norm;
  std::vector<double> ratio;              ///< gap_norm / solution_norm
  std::vector<double> rho_corrected_gap;  ///< gap_norm / ln(1 + t) for n = 2, gap_norm otherwise
  RateFit fit;                            ///< decay fit of the gap
  RateFit solution_fit;                   ///< decay fit of the solution itself
};

/// Whole-space linear source: ||grad^k (e^{t L} u0 - u*(t))|| where L is the
/// heat flow (mode heat) or Delta P_s (mode full), computed by radial
/// quadrature with M = u0^(0).  `log_correction` divides by ln(1 + t)
/// before fitting and is only honoured for n = 2.
ProfileGapSeries profile_gap_linear(const DissipationSpec& spec, const RadialProfile& profile,
                                    FlowMode mode, int k, std::span<const double> times,
                                    TimeWindow window, bool log_correction);

/// Grid source: ||grad^k (u(t) - u*(t))|| on the snapshots of a trajectory
/// (record.keep_snapshots must have been set).  M is the mass of the first
/// snapshot.  Throws DomainError when the kernel tail or the solution's tail
/// fraction leaves the box.
ProfileGapSeries profile_gap_trajectory(const DissipationSpec& spec, const TrajectoryRecord& record,
                                        int k, TimeWindow window, bool log_correction);

}  // namespace claws
