#include "claws/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "claws/errors.hpp"

namespace claws {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double radius(std::span<const double> xi) {
  double acc = 0.0;
  for (double x : xi) acc += x * x;
  return std::sqrt(acc);
}

}  // namespace

FrequencySymbol::FrequencySymbol(SymbolPreset preset, double param,
                                 std::vector<double> coefficients, SymbolConstants declared)
    : preset_(preset), param_(param), coefficients_(std::move(coefficients)), declared_(declared) {}

FrequencySymbol FrequencySymbol::sobolev() {
  return FrequencySymbol(SymbolPreset::sobolev, 0.0, {}, {1.0, 1.0, 2.0, 1.0});
}

FrequencySymbol FrequencySymbol::radiating_gas(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw InvalidSymbolError("radiating_gas: epsilon must be a positive finite number");
  }
  // m / (1 + r^2) moves monotonically between 1/eps (r = 0) and eps (r -> inf).
  return FrequencySymbol(SymbolPreset::radiating_gas, eps, {},
                         {std::min(eps, 1.0 / eps), std::max(eps, 1.0 / eps), 2.0, eps});
}

FrequencySymbol FrequencySymbol::ahe(double order) {
  if (!(order > 0.0) || !std::isfinite(order)) {
    throw InvalidSymbolError("ahe: order must be a positive finite number");
  }
  // (1 + x^p)^{1/p} lies between (1 + x) and 2^{1/p - 1} (1 + x), in either order.
  const double c = std::pow(2.0, 1.0 / order - 1.0);
  const double m2 = std::max(1.0 / order, std::pow(2.0, 1.0 / order) - 1.0);
  return FrequencySymbol(SymbolPreset::ahe, order, {},
                         {std::min(1.0, c), std::max(1.0, c), 2.0 * order, m2});
}

FrequencySymbol FrequencySymbol::hoka_quartic() {
  // min of sqrt(1 + x + x^2) / (1 + x) is sqrt(3)/2, attained at x = 1.
  return FrequencySymbol(SymbolPreset::hoka_quartic, 0.0, {},
                         {std::sqrt(3.0) / 2.0, 1.0, 2.0, 1.0});
}

FrequencySymbol FrequencySymbol::custom(std::vector<double> coefficients) {
  if (coefficients.empty()) {
    throw InvalidSymbolError("custom symbol: empty coefficient table");
  }
  if (!(coefficients[0] > 0.0)) {
    throw InvalidSymbolError("custom symbol: non-positive value m(0) = " +
                             std::to_string(coefficients[0]));
  }
  for (std::size_t j = 1; j < coefficients.size(); ++j) {
    if (!(coefficients[j] >= 0.0) || !std::isfinite(coefficients[j])) {
      throw InvalidSymbolError("custom symbol: coefficient " + std::to_string(j) +
                               " is negative; m could take non-positive values");
    }
  }
  while (coefficients.size() > 1 && coefficients.back() == 0.0) coefficients.pop_back();

  SymbolConstants k;
  const double c0 = coefficients[0];
  const double c1 = coefficients.size() > 1 ? coefficients[1] : 0.0;
  k.m0 = std::min(c0, c1);
  k.m1 = coefficients.size() <= 2 ? std::max(c0, c1) : kInf;
  k.sigma = kInf;
  k.m2 = 0.0;
  for (std::size_t j = 1; j < coefficients.size(); ++j) {
    if (coefficients[j] > 0.0 && k.sigma == kInf) k.sigma = 2.0 * static_cast<double>(j);
    k.m2 += coefficients[j];
  }
  return FrequencySymbol(SymbolPreset::custom, 0.0, std::move(coefficients), k);
}

FrequencySymbol FrequencySymbol::from_name(const std::string& name, double param,
                                           const std::vector<double>& coefficients) {
  if (name == "sobolev") return sobolev();
  if (name == "radiating_gas") return radiating_gas(param);
  if (name == "ahe") return ahe(param);
  if (name == "hoka_quartic") return hoka_quartic();
  if (name == "custom") return custom(coefficients);
  throw InvalidSymbolError("unknown symbol preset '" + name + "'");
}

double FrequencySymbol::operator()(double r) const {
  const double r2 = r * r;
  switch (preset_) {
    case SymbolPreset::sobolev:
      return 1.0 + r2;
    case SymbolPreset::radiating_gas:
      return (1.0 + param_ * param_ * r2) / param_;
    case SymbolPreset::ahe:
      return std::pow(1.0 + std::pow(r2, param_), 1.0 / param_);
    case SymbolPreset::hoka_quartic:
      return std::sqrt(1.0 + r2 + r2 * r2);
    case SymbolPreset::custom: {
      double acc = 0.0;
      for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * r2 + *it;
      return acc;
    }
  }
  return 0.0;
}

double FrequencySymbol::eval(std::span<const double> xi) const { return (*this)(radius(xi)); }

double FrequencySymbol::excess(double r) const {
  const double r2 = r * r;
  switch (preset_) {
    case SymbolPreset::sobolev:
      return r2;
    case SymbolPreset::radiating_gas:
      return param_ * r2;
    case SymbolPreset::ahe:
      return std::expm1(std::log1p(std::pow(r2, param_)) / param_);
    case SymbolPreset::hoka_quartic:
      return std::expm1(0.5 * std::log1p(r2 + r2 * r2));
    case SymbolPreset::custom: {
      double acc = 0.0;
      for (std::size_t j = coefficients_.size(); j-- > 1;) acc = acc * r2 + coefficients_[j];
      return acc * r2;
    }
  }
  return 0.0;
}

std::string FrequencySymbol::name() const {
  switch (preset_) {
    case SymbolPreset::sobolev:
      return "sobolev";
    case SymbolPreset::radiating_gas:
      return "radiating_gas";
    case SymbolPreset::ahe:
      return "ahe";
    case SymbolPreset::hoka_quartic:
      return "hoka_quartic";
    case SymbolPreset::custom:
      return "custom";
  }
  return "unknown";
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::gain:
      return "gain";
    case Regime::critical:
      return "critical";
    case Regime::loss:
      return "loss";
  }
  return "unknown";
}

DissipationSpec::DissipationSpec(FrequencySymbol symbol, double s)
    : symbol_(std::move(symbol)), s_(s) {
  if (!std::isfinite(s)) throw DomainError("dissipation order s must be finite");
  if (symbol_.preset() == SymbolPreset::radiating_gas && s != 1.0) {
    throw DomainError("radiating_gas symbol fixes s = 1");
  }
  mu_ = std::pow(symbol_.at_zero(), -s_);
  regime_ = s_ < 1.0 ? Regime::gain : (s_ == 1.0 ? Regime::critical : Regime::loss);
}

double DissipationSpec::rate(double r) const {
  if (r == 0.0) return 0.0;
  return r * r * std::pow(symbol_(r), -s_);
}

double DissipationSpec::rate(std::span<const double> xi) const { return rate(radius(xi)); }

std::vector<double> default_sample_radii(std::size_t count) {
  std::vector<double> radii(count);
  const double lo = std::log(1e-4);
  const double hi = std::log(1e3);
  for (std::size_t i = 0; i < count; ++i) {
    radii[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  radii.front() = 1e-4;
  radii.back() = 1e3;
  return radii;
}

SymbolReport characterize_symbol(const FrequencySymbol& symbol, std::span<const double> radii) {
  if (radii.size() < 200) throw DomainError("characterize_symbol: need at least 200 radii");
  const auto [lo, hi] = std::minmax_element(radii.begin(), radii.end());
  if (*lo > 1e-4 * (1.0 + 1e-9) || *hi < 1e3 * (1.0 - 1e-9)) {
    throw DomainError("characterize_symbol: radii must span [1e-4, 1e3]");
  }

  SymbolReport report;
  report.m0_hat = kInf;
  report.m1_hat = 0.0;
  for (double r : radii) {
    const double m = symbol(r);
    if (!(m > 0.0)) throw InvalidSymbolError("symbol is not positive at r = " + std::to_string(r));
    const double q = m / (1.0 + r * r);
    report.m0_hat = std::min(report.m0_hat, q);
    report.m1_hat = std::max(report.m1_hat, q);
  }

  const SymbolConstants& k = symbol.declared();
  std::vector<double> lx, ly;
  bool m2_ok = true;
  report.m2_hat = 0.0;
  for (double r : radii) {
    if (r > 0.1 || r <= 0.0) continue;
    const double e = std::abs(symbol.excess(r));
    if (e > 0.0) {
      lx.push_back(std::log(r));
      ly.push_back(std::log(e));
    }
    if (std::isfinite(k.sigma)) {
      const double bound = k.m2 * std::pow(r, k.sigma);
      report.m2_hat = std::max(report.m2_hat, e / std::pow(r, k.sigma));
      if (e > bound * (1.0 + 1e-12)) m2_ok = false;
    } else if (e > 0.0) {
      m2_ok = false;
    }
  }

  if (lx.size() < 2) {
    report.sigma_hat = kInf;
    report.pass_m2 = lx.empty();
  } else {
    const double n = static_cast<double>(lx.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sxx += (lx[i] - mx) * (lx[i] - mx);
      sxy += (lx[i] - mx) * (ly[i] - my);
    }
    report.sigma_hat = sxy / sxx;
    report.pass_m2 = m2_ok;
  }

  report.pass_m1 = k.m0 > 0.0 && std::isfinite(k.m1) && k.m0 <= k.m1 &&
                   k.m0 <= report.m0_hat * (1.0 + 1e-12) &&
                   k.m1 >= report.m1_hat * (1.0 - 1e-12);
  return report;
}

}  // namespace claws
