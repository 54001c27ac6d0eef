#pragma once

#include <optional>
#include <span>
#include <vector>

#include "claws/field.hpp"
#include "claws/rate_fit.hpp"
#include "claws/symbol.hpp"

namespace claws {

/// full: exp(t Delta P_s); heat: exp(mu_s t Delta); gap: their difference.
enum class FlowMode { full, heat, gap };

const char* to_string(FlowMode mode);

/// Fourier multiplier of the selected flow at radius r and time t.
double flow_multiplier(const DissipationSpec& spec, double r, double t, FlowMode mode);

/// Multiplies every mode by the flow multiplier.  Throws DomainError for t < 0.
SpectralField propagate(const DissipationSpec& spec, const SpectralField& field, double t,
                        FlowMode mode = FlowMode::full);

/// Radial initial spectrum u0^(r) on R^n.
///   gaussian(w)            exp(-r^2 / (2 w^2))
///   mean_zero_gaussian(w)  r exp(-r^2 / (2 w^2))
///   shell(r0, h)           cos^2(pi (r - r0) / h) on |r - r0| <= h/2; h = 0 is a
///                          unit-weight delta shell concentrated at r0
struct RadialProfile {
  enum class Kind { gaussian, mean_zero_gaussian, shell };

  Kind kind = Kind::gaussian;
  int dim = 1;
  double width = 1.0;
  double r0 = 0.0;
  double thickness = 0.0;

  static RadialProfile gaussian(int dim, double width);
  static RadialProfile mean_zero_gaussian(int dim, double width);
  static RadialProfile shell(int dim, double r0, double thickness = 0.0);

  double operator()(double r) const;
  double at_zero() const { return (*this)(0.0); }
  bool is_delta() const { return kind == Kind::shell && thickness == 0.0; }
};

/// |S^{n-1}| / (2 pi)^n: converts a radial integral into an L^2(R^n) norm
/// under the (2 pi)^{-n} Plancherel normalization.
double plancherel_surface_constant(int dim);

/// ||grad^k w(t)||_{L^2(R^n)} with w^ = multiplier(r, t) u0^(r), evaluated
/// by adaptive quadrature at relative tolerance 1e-8 or better.
double radial_norm_quadrature(const DissipationSpec& spec, const RadialProfile& profile, double t,
                              int k, FlowMode mode);

struct SlopeExperiment {
  RateFit fit;
  std::vector<double> times;
  std::vector<double> norms;
  std::vector<double> local_slopes;
};

/// Norm history on `times` (log-spaced, >= 30 points) and its decay fit on
/// `window`.  Shell profiles decay exponentially: the fit is flagged and the
/// e-folding rate reported instead of an algebraic slope.
SlopeExperiment decay_slope_experiment(const DissipationSpec& spec, const RadialProfile& profile,
                                       int k, FlowMode mode, std::span<const double> times,
                                       TimeWindow window);

}  // namespace claws
