#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace claws {

struct TimeWindow {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double t) const;
};

enum class FitStatus { ok, rejected_window, exponential_flagged };

const char* to_string(FitStatus status);

/// Measured algebraic decay exponent: log(value / rho) ~ slope * log(1 + t) + intercept,
/// with rho(t) = ln(1 + t) when `log_correction` is set and 1 otherwise.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  TimeWindow window;
  bool log_correction = false;
  FitStatus status = FitStatus::ok;
  double local_slope_spread = 0.0;
  std::size_t points = 0;
  /// Set for exponential_flagged fits: rate lambda of value ~ C exp(-lambda t).
  std::optional<double> efold_rate;
};

/// Largest spread of local slopes tolerated inside a fit window.
inline constexpr double kMaxLocalSlopeSpread = 0.05;

/// Least-squares fit of log(value / rho(t)) against log(1 + t) on `window`.
/// Local slopes are least-squares slopes over sliding runs of max(5, m/4)
/// consecutive window points; a spread above kMaxLocalSlopeSpread marks the
/// fit rejected_window.  Throws FitError for fewer than 10 window points or
/// non-positive values, DomainError for a log-corrected window with t_lo < 1.
RateFit fit_algebraic_rate(std::span<const double> times, std::span<const double> values,
                           TimeWindow window, bool log_correction = false);

/// Least-squares fit of log(value) against t on `window` (exponential decay).
RateFit fit_exponential_rate(std::span<const double> times, std::span<const double> values,
                             TimeWindow window);

/// Pointwise slope d log(value) / d log(1 + t) by centered differences
/// (one-sided at the ends).
std::vector<double> local_log_slopes(std::span<const double> times, std::span<const double> values);

std::vector<double> log_spaced(double lo, double hi, std::size_t count);

}  // namespace claws
