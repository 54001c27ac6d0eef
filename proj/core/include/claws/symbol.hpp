#pragma once

#include <span>
#include <string>
#include <vector>

namespace claws {

enum class SymbolPreset { sobolev, radiating_gas, ahe, hoka_quartic, custom };

/// Constants of the two structural assumptions on m:
///   m0 (1 + |xi|^2) <= m(xi) <= m1 (1 + |xi|^2)          everywhere,
///   |m(xi) - m(0)| <= m2 |xi|^sigma                       near xi = 0.
/// `m0 == 0` marks a symbol that does not satisfy the two-sided bracket.
struct SymbolConstants {
  double m0 = 0.0;
  double m1 = 0.0;
  double sigma = 0.0;
  double m2 = 0.0;
};

/// Radial frequency symbol m(|xi|) > 0.  Immutable value type.
///
/// Presets:
///   sobolev            m = 1 + r^2
///   radiating_gas(e)   m = (1 + e^2 r^2) / e      (dissipation order fixed to 1)
///   ahe(p)             m = (1 + r^{2p})^{1/p}
///   hoka_quartic       m = (1 + r^2 + r^4)^{1/2}
///   custom(c)          m = sum_j c_j r^{2j}, with c_0 > 0 and c_j >= 0
class FrequencySymbol {
 public:
  static FrequencySymbol sobolev();
  static FrequencySymbol radiating_gas(double eps);
  static FrequencySymbol ahe(double order);
  static FrequencySymbol hoka_quartic();
  static FrequencySymbol custom(std::vector<double> coefficients);

  /// Constant symbol m == value; the dissipation it induces is exactly the
  /// heat multiplier mu_s |xi|^2.
  static FrequencySymbol constant(double value) { return custom({value}); }

  /// Builds a preset from its configuration name ("sobolev", "radiating_gas",
  /// "ahe", "hoka_quartic", "custom").
  static FrequencySymbol from_name(const std::string& name, double param,
                                   const std::vector<double>& coefficients = {});

  double operator()(double r) const;
  double eval(std::span<const double> xi) const;

  /// m(r) - m(0), evaluated without cancellation near r = 0.
  double excess(double r) const;

  double at_zero() const { return (*this)(0.0); }
  SymbolPreset preset() const { return preset_; }
  double parameter() const { return param_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  const SymbolConstants& declared() const { return declared_; }
  std::string name() const;

 private:
  FrequencySymbol(SymbolPreset preset, double param, std::vector<double> coefficients,
                  SymbolConstants declared);

  SymbolPreset preset_;
  double param_;
  std::vector<double> coefficients_;
  SymbolConstants declared_;
};

enum class Regime { gain, critical, loss };

const char* to_string(Regime regime);

/// A symbol paired with the order s of P_s.  The induced Fourier multiplier
/// of Delta P_s is -a(xi) with a(xi) = |xi|^2 / m(xi)^s; mu_s = m(0)^{-s} is
/// the diffusivity of the limiting heat flow.
class DissipationSpec {
 public:
  DissipationSpec(FrequencySymbol symbol, double s);

  double rate(double r) const;
  double rate(std::span<const double> xi) const;
  double heat_rate(double r) const { return r * r * mu_; }

  double s() const { return s_; }
  double mu() const { return mu_; }
  Regime regime() const { return regime_; }
  const FrequencySymbol& symbol() const { return symbol_; }

 private:
  FrequencySymbol symbol_;
  double s_;
  double mu_;
  Regime regime_;
};

struct SymbolReport {
  double m0_hat = 0.0;
  double m1_hat = 0.0;
  double sigma_hat = 0.0;  ///< +infinity when m - m(0) vanishes identically near 0
  double m2_hat = 0.0;     ///< sup of |m - m(0)| / r^sigma_declared over r <= 0.1
  bool pass_m1 = false;
  bool pass_m2 = false;
};

/// Log-spaced radii on [1e-4, 1e3], the default sampling for characterize_symbol.
std::vector<double> default_sample_radii(std::size_t count = 400);

/// Empirical (M1)/(M2) constants of `symbol` on the given radii, and whether
/// the declared constants bracket them.
SymbolReport characterize_symbol(const FrequencySymbol& symbol, std::span<const double> radii);

}  // namespace claws
