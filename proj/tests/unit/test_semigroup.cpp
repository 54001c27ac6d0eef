#include <doctest.h>

#include <cmath>
#include <numbers>

#include "claws/errors.hpp"
#include "claws/field.hpp"
#include "claws/quadrature.hpp"
#include "claws/semigroup.hpp"

using namespace claws;

namespace {
const double kPi = std::numbers::pi;

double sine_amplitude(const SpectralField& f) { return 2.0 * std::abs(f.coeffs[1]); }
}  // namespace

TEST_SUITE("linear_semigroup") {
  TEST_CASE("quadrature primitives") {
    CHECK(integrate_half_line([](double r) { return std::exp(-r * r); }, 1.0) ==
          doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-12));
    CHECK(integrate_half_line([](double r) { return std::exp(-1e4 * r * r); }, 1e-2) ==
          doctest::Approx(std::sqrt(kPi) / 200.0).epsilon(1e-10));
    CHECK(integrate_interval([](double x) { return x * x; }, 0.0, 3.0) == doctest::Approx(9.0));
    CHECK_THROWS_AS(integrate_half_line([](double r) { return std::exp(r); }, 1.0), QuadratureError);
  }

  TEST_CASE("propagate single modes") {
    const Grid g(1, 32, 2.0 * kPi);
    const auto f = forward(sample(g, [](std::span<const double> x) { return std::sin(x[0]); }));
    const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
    const auto same = propagate(spec, f, 0.0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) CHECK(same.coeffs[i] == f.coeffs[i]);
    CHECK(sine_amplitude(propagate(spec, f, 1.0, FlowMode::heat)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(sine_amplitude(propagate(spec, f, 2.0, FlowMode::full)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK_THROWS_AS(propagate(spec, f, -1.0), DomainError);
  }

  TEST_CASE("semigroup property") {
    const Grid g(2, 32, 20.0);
    const auto f = forward(sample(g, [](std::span<const double> x) {
      return std::exp(-x[0] * x[0] - 0.5 * x[1] * x[1]) * (1.0 + x[0]);
    }));
    const DissipationSpec spec(FrequencySymbol::hoka_quartic(), 1.5);
    const auto a = propagate(spec, propagate(spec, f, 0.7), 1.3);
    const auto b = propagate(spec, f, 2.0);
    double err = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) err = std::max(err, std::abs(a.coeffs[i] - b.coeffs[i]));
    CHECK(err < 1e-15);
  }

  TEST_CASE("gaussian closed form") {
    const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
    const auto prof = RadialProfile::gaussian(1, 1.0);
    CHECK(radial_norm_quadrature(spec, prof, 0.0, 0, FlowMode::heat) ==
          doctest::Approx(0.531126).epsilon(1e-6));
    CHECK(radial_norm_quadrature(spec, prof, 4.0, 0, FlowMode::heat) ==
          doctest::Approx(0.3066457).epsilon(1e-6));
    for (double t : {0.5, 10.0, 1e3, 1e5}) {
      const double exact = std::sqrt(std::sqrt(kPi / (1.0 + 2.0 * t)) / (2.0 * kPi));
      CHECK(radial_norm_quadrature(spec, prof, t, 0, FlowMode::heat) == doctest::Approx(exact).epsilon(1e-8));
    }
  }

  TEST_CASE("two-dimensional gaussian closed form") {
    // ||u||^2 = (1/2pi) int_0^inf r e^{-r^2 (1 + 2t)} dr = 1 / (4 pi (1 + 2t)).
    const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
    const auto prof = RadialProfile::gaussian(2, 1.0);
    for (double t : {0.0, 3.0, 300.0}) {
      CHECK(radial_norm_quadrature(spec, prof, t, 0, FlowMode::heat) ==
            doctest::Approx(std::sqrt(1.0 / (4.0 * kPi * (1.0 + 2.0 * t)))).epsilon(1e-8));
    }
  }

  TEST_CASE("gap vanishes for a constant symbol") {
    const DissipationSpec spec(FrequencySymbol::constant(2.0), 1.0);
    const auto prof = RadialProfile::gaussian(1, 1.0);
    for (double t : {0.0, 1.0, 100.0}) CHECK(radial_norm_quadrature(spec, prof, t, 1, FlowMode::gap) == 0.0);
  }

  TEST_CASE("decay slope experiments") {
    const DissipationSpec s1(FrequencySymbol::sobolev(), 1.0);
    const auto times = log_spaced(1.0, 1e4, 60);
    const auto full = decay_slope_experiment(s1, RadialProfile::gaussian(1, 1.0), 0, FlowMode::full, times,
                                             {1e2, 1e4});
    CHECK(full.fit.status == FitStatus::ok);
    CHECK(full.fit.slope == doctest::Approx(-0.25).epsilon(0.02 / 0.25));
    const auto gap = decay_slope_experiment(s1, RadialProfile::gaussian(1, 1.0), 0, FlowMode::gap, times,
                                            {1e2, 1e4});
    CHECK(std::abs(gap.fit.slope + 1.25) < 0.05);

    const DissipationSpec s2(FrequencySymbol::sobolev(), 2.0);
    const auto shell = decay_slope_experiment(s2, RadialProfile::shell(1, 10.0), 0, FlowMode::full,
                                              log_spaced(1.0, 1e3, 40), {1.0, 1e3});
    CHECK(shell.fit.status == FitStatus::exponential_flagged);
    REQUIRE(shell.fit.efold_rate.has_value());
    CHECK(std::abs(*shell.fit.efold_rate - 100.0 / 10201.0) < 1e-12);
  }
}
