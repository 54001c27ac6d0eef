#pragma once

#include <vector>

namespace claws {

/// Polynomial flux f_j(u) = sum_p c_{j,p} u^p, stored in normalized form
/// g_j(u) = f_j(u) - f_j(0) - f_j'(0) u so that g_j(0) = g_j'(0) = 0.
class FluxModel {
 public:
  static constexpr int kMaxDegree = 8;

  /// `raw[j]` holds the ascending coefficients of f_j.  Throws DomainError
  /// for degree > 8 or no components.
  static FluxModel normalize(std::vector<std::vector<double>> raw);

  /// g_j(u) = u^2 / 2 in every one of `dim` components.
  static FluxModel burgers(int dim);
  static FluxModel zero(int dim);

  int components() const { return static_cast<int>(coeffs_.size()); }
  double value(int j, double u) const;
  double derivative(int j, double u) const;
  bool is_zero() const;
  const std::vector<std::vector<double>>& coefficients() const { return coeffs_; }

 private:
  explicit FluxModel(std::vector<std::vector<double>> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<std::vector<double>> coeffs_;
};

}  // namespace claws
