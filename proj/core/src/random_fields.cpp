#include "claws/random_fields.hpp"

#include <cmath>
#include <numbers>

#include "claws/errors.hpp"

namespace claws {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

SpectralField random_band_limited(const Grid& grid, std::mt19937_64& rng, int max_mode,
                                  bool mean_zero) {
  if (max_mode < 0 || 2 * max_mode >= grid.points()) {
    throw DomainError("random_band_limited: max_mode must lie below the Nyquist mode");
  }
  SpectralField out(grid);
  const int p = grid.points();
  auto slot = [p](int m) { return static_cast<std::size_t>(((m % p) + p) % p); };
  auto draw = [&rng] {
    const double rad = std::sqrt(unit_uniform(rng));
    const double phase = 2.0 * std::numbers::pi * unit_uniform(rng);
    return Complex{rad * std::cos(phase), rad * std::sin(phase)};
  };

  if (grid.dim() == 1) {
    if (!mean_zero) out.coeffs[0] = draw().real();
    for (int m = 1; m <= max_mode; ++m) {
      const Complex c = draw();
      out.coeffs[slot(m)] = c;
      out.coeffs[slot(-m)] = std::conj(c);
    }
    return out;
  }

  const auto P = static_cast<std::size_t>(p);
  for (int a = -max_mode; a <= max_mode; ++a) {
    for (int b = -max_mode; b <= max_mode; ++b) {
      // Visit each conjugate pair once: (a, b) > (0, 0) lexicographically.
      if (a < 0 || (a == 0 && b <= 0)) continue;
      const Complex c = draw();
      out.coeffs[slot(a) * P + slot(b)] = c;
      out.coeffs[slot(-a) * P + slot(-b)] = std::conj(c);
    }
  }
  if (!mean_zero) out.coeffs[0] = draw().real();
  return out;
}

}  // namespace claws
