#include "claws/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "claws/errors.hpp"

namespace claws {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;

constexpr int kMaxDepth = 20;
constexpr double kTailFraction = 1e-16;
constexpr int kPanelsBelowScale = 48;

// Boost's recursive error test mixes a panel-scaled tolerance with an
// unscaled error estimate, so every panel is mapped onto [0, 1] first.
double unit_panel(const std::function<double(double)>& f, double a, double b, double rel_tol,
                  int depth = kMaxDepth, double* l1 = nullptr) {
  const double width = b - a;
  auto g = [&](double x) { return width * f(a + width * x); };
  double err = 0.0;
  return Kronrod::integrate(g, 0.0, 1.0, depth, rel_tol, &err, l1);
}

}  // namespace

double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          double rel_tol) {
  if (!(b > a)) return 0.0;
  const double v = unit_panel(f, a, b, rel_tol);
  if (!std::isfinite(v)) throw QuadratureError("integrand is not finite on the interval");
  return v;
}

double integrate_half_line(const std::function<double(double)>& f, double scale, double rel_tol) {
  if (!(scale > 0.0)) throw QuadratureError("integration scale must be positive");

  // Locate the truncation radius on a geometric lattice of quarter octaves,
  // weighting by r so that the criterion compares contributions per log-radius.
  double peak = 0.0;
  const double r_min = scale * std::ldexp(1.0, -kPanelsBelowScale);
  std::vector<double> edges{0.0, r_min};
  double r = r_min;
  int quiet = 0;
  for (int i = 0;; ++i) {
    r *= std::pow(2.0, 0.25);
    const double v = std::abs(f(r)) * r;
    if (!std::isfinite(v)) throw QuadratureError("integrand is not finite");
    peak = std::max(peak, v);
    quiet = (r > scale && v <= kTailFraction * peak) ? quiet + 1 : 0;
    if (i % 4 == 3) edges.push_back(r);
    if (quiet >= 8) break;
    if (r > scale * 1e12) throw QuadratureError("integral diverges: integrand does not decay");
  }
  if (edges.back() < r) edges.push_back(r);
  if (peak == 0.0) return 0.0;

  // The tolerance is shared across panels in proportion to their L1 weight,
  // so panels that hold a negligible share of the integral are not refined
  // against their own rounding noise.
  const std::size_t panels = edges.size() - 1;
  std::vector<double> weight(panels, 0.0);
  double total_l1 = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    unit_panel(f, edges[i], edges[i + 1], rel_tol, 0, &weight[i]);
    total_l1 += weight[i];
  }
  if (!(total_l1 > 0.0)) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    if (weight[i] == 0.0) continue;
    const double tol = std::min(0.1, rel_tol * total_l1 / (weight[i] * static_cast<double>(panels)));
    total += unit_panel(f, edges[i], edges[i + 1], std::max(tol, rel_tol));
  }
  if (!std::isfinite(total)) throw QuadratureError("quadrature produced a non-finite value");
  return total;
}

}  // namespace claws
