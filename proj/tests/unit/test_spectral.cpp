#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "claws/errors.hpp"
#include "claws/field.hpp"
#include "claws/random_fields.hpp"
#include "claws/symbol.hpp"

using namespace claws;

namespace {
const double kPi = std::numbers::pi;

RealField sine_field(const Grid& g) {
  return sample(g, [](std::span<const double> x) { return std::sin(x[0]); });
}
}  // namespace

TEST_SUITE("spectral_field") {
  TEST_CASE("grid construction") {
    CHECK_THROWS_AS(Grid(1, 48, 1.0), InvalidGridError);
    CHECK_THROWS_AS(Grid(3, 16, 1.0), InvalidGridError);
    CHECK_THROWS_AS(Grid(1, 16, -1.0), InvalidGridError);
    CHECK_THROWS_AS(Grid(1, 8, 1.0), InvalidGridError);
    const Grid g(2, 16, 2.0 * kPi);
    CHECK(g.size() == 256);
    CHECK(g.mode_index(9) == -7);
    CHECK(g.wavenumber(1) == doctest::Approx(1.0));
    CHECK(g.volume() == doctest::Approx(4.0 * kPi * kPi));
  }

  TEST_CASE("constant field lives in the zero mode") {
    const Grid g(2, 16, 3.0);
    const RealField c = sample(g, [](std::span<const double>) { return 2.5; });
    const auto f = forward(c);
    CHECK(std::abs(f.coeffs[0] - Complex(2.5, 0.0)) < 1e-14);
    for (std::size_t i = 1; i < f.coeffs.size(); ++i) CHECK(std::abs(f.coeffs[i]) < 1e-14);
    CHECK(mass(f) == doctest::Approx(2.5 * 9.0));
  }

  TEST_CASE("sine is a single mode pair") {
    // Phases are measured from x = -pi, where sin(x) = -sin(x + pi).
    const Grid g(1, 32, 2.0 * kPi);
    const auto f = forward(sine_field(g));
    CHECK(std::abs(f.coeffs[1] - Complex(0.0, 0.5)) < 1e-15);
    CHECK(std::abs(f.coeffs[31] - Complex(0.0, -0.5)) < 1e-15);
    double other = 0.0;
    for (std::size_t i = 2; i < 31; ++i) other = std::max(other, std::abs(f.coeffs[i]));
    CHECK(other < 1e-15);
  }

  TEST_CASE("roundtrip of a seeded field") {
    const Grid g(2, 32, 10.0);
    std::mt19937_64 rng(7);
    const RealField u = inverse(random_band_limited(g, rng, 8));
    const RealField v = transform_roundtrip(u);
    double err = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) err = std::max(err, std::abs(u.values[i] - v.values[i]));
    CHECK(err < 1e-12);
  }

  TEST_CASE("multipliers") {
    const Grid g(1, 32, 2.0 * kPi);
    const auto f = forward(sine_field(g));
    const auto id = inverse(apply_multiplier(f, [](std::span<const double>) { return Complex(1.0); }));
    const auto dx = inverse(apply_multiplier(f, [](std::span<const double> xi) { return Complex(0.0, xi[0]); }));
    const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
    const auto lin = inverse(apply_radial_multiplier(f, [&](double r) { return -spec.rate(r); }));
    const auto d1 = inverse(derivative(f, 0));
    for (std::size_t i = 0; i < 32; ++i) {
      const double x = g.coordinate(int(i));
      CHECK(id.values[i] == doctest::Approx(std::sin(x)).epsilon(1e-13));
      CHECK(std::abs(dx.values[i] - std::cos(x)) < 1e-14);
      CHECK(std::abs(d1.values[i] - std::cos(x)) < 1e-14);
      CHECK(std::abs(lin.values[i] + 0.5 * std::sin(x)) < 1e-14);
    }
    CHECK_THROWS_AS(apply_multiplier(f, [](std::span<const double>) { return Complex(std::nan("")); }),
                    DomainError);
  }

  TEST_CASE("norms of sin on the circle") {
    const Grid g(1, 64, 2.0 * kPi);
    const RealField u = sine_field(g);
    const auto f = forward(u);
    CHECK(lp_norm(u, 2.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    CHECK(lp_norm(u, std::numeric_limits<double>::infinity()) == doctest::Approx(1.0));
    // Grid sum of |sin|: dx * 2 cot(pi / P).
    CHECK(lp_norm(u, 1.0) == doctest::Approx(2.0 * kPi / 64.0 * 2.0 / std::tan(kPi / 64.0)).epsilon(1e-13));
    CHECK(sobolev_norm(f, 1.0) == doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-13));
    CHECK(mixed_norm(f, 0, 1.0) == doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-13));
    CHECK(gradient_norm(f, 2) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    CHECK(norm(f, MixedNorm{1, 0.5}) == doctest::Approx(std::sqrt(kPi / std::sqrt(2.0))).epsilon(1e-13));
  }

  TEST_CASE("Parseval") {
    const Grid g(2, 32, 7.0);
    std::mt19937_64 rng(11);
    const auto f = random_band_limited(g, rng, 10);
    const RealField u = inverse(f);
    const double l2 = lp_norm(u, 2.0);
    CHECK(l2 * l2 == doctest::Approx(spectral_energy(f)).epsilon(1e-12));
    CHECK(is_conjugate_symmetric(f));
  }

  TEST_CASE("two-thirds dealiasing") {
    const Grid g(1, 64, 2.0 * kPi);
    const auto low = forward(sample(g, [](std::span<const double> x) { return std::cos(5.0 * x[0]); }));
    const auto kept = dealias_two_thirds(low);
    for (std::size_t i = 0; i < 64; ++i) {
      if (std::abs(g.mode_index(int(i))) <= 21) {
        CHECK(kept.coeffs[i] == low.coeffs[i]);
      } else {
        CHECK(kept.coeffs[i] == Complex{});
      }
    }
    CHECK(kept.tag == Provenance::dealiased);

    const auto nyq = forward(sample(g, [](std::span<const double> x) { return std::cos(32.0 * x[0]); }));
    const auto gone = inverse(dealias_two_thirds(nyq));
    for (double v : gone.values) CHECK(v == 0.0);

    std::mt19937_64 rng(3);
    const auto r = random_band_limited(g, rng, 31);
    CHECK(spectral_energy(dealias_two_thirds(r)) <= spectral_energy(r));
    CHECK(spectral_energy(dealias_two_thirds(r)) < spectral_energy(r));
  }
}
