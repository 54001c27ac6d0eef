#include "claws/rate_fit.hpp"

#include <algorithm>
#include <cmath>

#include "claws/errors.hpp"

namespace claws {

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const std::size_t m = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw FitError("degenerate abscissae in fit window");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (m > 2) {
    double ssr = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = y[i] - (f.intercept + f.slope * x[i]);
      ssr += r * r;
    }
    f.stderr_slope = std::sqrt(ssr / static_cast<double>(m - 2) / sxx);
  }
  return f;
}

}  // namespace

bool TimeWindow::contains(double t) const {
  const double slack = 1e-12 * std::max(std::abs(lo), std::abs(hi));
  return t >= lo - slack && t <= hi + slack;
}

const char* to_string(FitStatus status) {
  switch (status) {
    case FitStatus::ok:
      return "ok";
    case FitStatus::rejected_window:
      return "rejected-window";
    case FitStatus::exponential_flagged:
      return "exponential-flagged";
  }
  return "unknown";
}

RateFit fit_algebraic_rate(std::span<const double> times, std::span<const double> values,
                           TimeWindow window, bool log_correction) {
  if (times.size() != values.size()) throw FitError("times and values differ in length");
  if (log_correction && window.lo < 1.0) {
    throw DomainError("log-corrected fit needs a window starting at t >= 1");
  }
  std::vector<double> x, y;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!window.contains(times[i])) continue;
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw FitError("non-positive value at t = " + std::to_string(times[i]));
    }
    const double rho = log_correction ? std::log1p(times[i]) : 1.0;
    x.push_back(std::log1p(times[i]));
    y.push_back(std::log(values[i] / rho));
  }
  if (x.empty()) throw FitError("empty fit window");
  if (x.size() < 10) throw FitError("fit window holds fewer than 10 points");

  const LineFit global = least_squares(x, y);
  RateFit fit;
  fit.slope = global.slope;
  fit.intercept = global.intercept;
  fit.stderr_slope = global.stderr_slope;
  fit.window = window;
  fit.log_correction = log_correction;
  fit.points = x.size();

  const std::size_t run = std::max<std::size_t>(5, x.size() / 4);
  double lo = global.slope, hi = global.slope;
  for (std::size_t start = 0; start + run <= x.size(); ++start) {
    const LineFit local = least_squares(std::span(x).subspan(start, run),
                                        std::span(y).subspan(start, run));
    lo = std::min(lo, local.slope);
    hi = std::max(hi, local.slope);
  }
  fit.local_slope_spread = hi - lo;
  fit.status = fit.local_slope_spread > kMaxLocalSlopeSpread ? FitStatus::rejected_window
                                                              : FitStatus::ok;
  return fit;
}

RateFit fit_exponential_rate(std::span<const double> times, std::span<const double> values,
                             TimeWindow window) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!window.contains(times[i])) continue;
    if (!(values[i] > 0.0)) throw FitError("non-positive value in exponential fit");
    x.push_back(times[i]);
    y.push_back(std::log(values[i]));
  }
  if (x.size() < 2) throw FitError("exponential fit needs at least two points");
  const LineFit f = least_squares(x, y);
  RateFit fit;
  fit.slope = f.slope;
  fit.intercept = f.intercept;
  fit.stderr_slope = f.stderr_slope;
  fit.window = window;
  fit.points = x.size();
  fit.status = FitStatus::exponential_flagged;
  fit.efold_rate = -f.slope;
  return fit;
}

std::vector<double> local_log_slopes(std::span<const double> times, std::span<const double> values) {
  const std::size_t m = times.size();
  std::vector<double> out(m, 0.0);
  if (m < 2) return out;
  auto slope = [&](std::size_t a, std::size_t b) {
    return (std::log(values[b]) - std::log(values[a])) / (std::log1p(times[b]) - std::log1p(times[a]));
  };
  out[0] = slope(0, 1);
  out[m - 1] = slope(m - 2, m - 1);
  for (std::size_t i = 1; i + 1 < m; ++i) out[i] = slope(i - 1, i + 1);
  return out;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) throw DomainError("log_spaced: need 0 < lo < hi, count >= 2");
  std::vector<double> out(count);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace claws
