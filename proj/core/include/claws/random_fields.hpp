#pragma once

#include <cstdint>
#include <random>

#include "claws/field.hpp"

namespace claws {

/// Deterministic uniform draw in [0, 1) from the top 53 bits; unlike
/// std::uniform_real_distribution it is identical across standard libraries.
double unit_uniform(std::mt19937_64& rng);

/// Seeded real field whose spectrum is supported on |k_j| <= max_mode with
/// coefficients uniform in the unit disc (zero mode included unless
/// `mean_zero`).  Conjugate symmetry is enforced.
SpectralField random_band_limited(const Grid& grid, std::mt19937_64& rng, int max_mode,
                                  bool mean_zero = false);

}  // namespace claws
