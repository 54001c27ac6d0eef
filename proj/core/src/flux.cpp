#include "claws/flux.hpp"

#include <algorithm>

#include "claws/errors.hpp"

namespace claws {

FluxModel FluxModel::normalize(std::vector<std::vector<double>> raw) {
  if (raw.empty()) throw DomainError("flux needs at least one component");
  for (auto& c : raw) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (static_cast<int>(c.size()) > kMaxDegree + 1) {
      throw DomainError("flux polynomial degree exceeds 8");
    }
    for (std::size_t p = 0; p < std::min<std::size_t>(2, c.size()); ++p) c[p] = 0.0;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
  }
  return FluxModel(std::move(raw));
}

FluxModel FluxModel::burgers(int dim) {
  return normalize(std::vector<std::vector<double>>(static_cast<std::size_t>(dim), {0.0, 0.0, 0.5}));
}

FluxModel FluxModel::zero(int dim) {
  return normalize(std::vector<std::vector<double>>(static_cast<std::size_t>(dim), std::vector<double>{}));
}

double FluxModel::value(int j, double u) const {
  const auto& c = coeffs_[static_cast<std::size_t>(j)];
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double FluxModel::derivative(int j, double u) const {
  const auto& c = coeffs_[static_cast<std::size_t>(j)];
  double acc = 0.0;
  for (std::size_t p = c.size(); p-- > 1;) acc = acc * u + static_cast<double>(p) * c[p];
  return acc;
}

bool FluxModel::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.empty(); });
}

}  // namespace claws
