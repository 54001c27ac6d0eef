#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>

#include "claws/errors.hpp"
#include "claws/symbol.hpp"

using namespace claws;

TEST_SUITE("symbol_kit") {
  TEST_CASE("preset values") {
    const auto sob = FrequencySymbol::sobolev();
    CHECK(sob(0.0) == 1.0);
    CHECK(sob(2.0) == 5.0);
    const std::array<double, 2> xi{0.0, 2.0};
    CHECK(sob.eval(xi) == 5.0);
    CHECK(FrequencySymbol::hoka_quartic()(1.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(FrequencySymbol::ahe(2.0)(1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(FrequencySymbol::radiating_gas(0.5)(2.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(FrequencySymbol::custom({2.0, 0.0, 1.0})(2.0) == doctest::Approx(18.0));
  }

  TEST_CASE("excess avoids cancellation") {
    const auto sob = FrequencySymbol::sobolev();
    CHECK(sob.excess(1e-9) == doctest::Approx(1e-18).epsilon(1e-12));
    const auto hoka = FrequencySymbol::hoka_quartic();
    CHECK(hoka.excess(1e-6) == doctest::Approx(0.5e-12).epsilon(1e-6));
  }

  TEST_CASE("invalid custom symbols") {
    CHECK_THROWS_AS(FrequencySymbol::custom({0.0, 1.0}), InvalidSymbolError);
    CHECK_THROWS_AS(FrequencySymbol::custom({1.0, -1.0}), InvalidSymbolError);
    CHECK_THROWS_AS(FrequencySymbol::custom({}), InvalidSymbolError);
    CHECK_THROWS_AS(FrequencySymbol::from_name("parabolic", 0.0), InvalidSymbolError);
  }

  TEST_CASE("dissipation rate") {
    const DissipationSpec s1(FrequencySymbol::sobolev(), 1.0);
    CHECK(s1.rate(0.0) == 0.0);
    CHECK(s1.rate(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    const DissipationSpec s2(FrequencySymbol::sobolev(), 2.0);
    CHECK(s2.rate(10.0) == doctest::Approx(100.0 / 10201.0).epsilon(1e-14));
    CHECK(s2.regime() == Regime::loss);
    CHECK(s1.regime() == Regime::critical);
    CHECK(DissipationSpec(FrequencySymbol::sobolev(), 0.5).regime() == Regime::gain);
    const DissipationSpec c(FrequencySymbol::constant(4.0), 0.5);
    CHECK(c.mu() == doctest::Approx(0.5));
    CHECK(c.rate(3.0) == doctest::Approx(c.heat_rate(3.0)));
  }

  TEST_CASE("characterize sobolev") {
    const auto radii = default_sample_radii();
    const auto rep = characterize_symbol(FrequencySymbol::sobolev(), radii);
    CHECK(rep.m0_hat == doctest::Approx(1.0));
    CHECK(rep.m1_hat == doctest::Approx(1.0));
    CHECK(rep.sigma_hat == doctest::Approx(2.0).epsilon(0.005));
    CHECK(rep.pass_m1);
    CHECK(rep.pass_m2);
  }

  TEST_CASE("characterize hoka quartic") {
    const auto rep = characterize_symbol(FrequencySymbol::hoka_quartic(), default_sample_radii(2000));
    CHECK(rep.m0_hat == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-4));
    CHECK(rep.m1_hat == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.sigma_hat == doctest::Approx(2.0).epsilon(0.01));
    CHECK(rep.pass_m1);
  }

  TEST_CASE("characterize ahe and constant") {
    CHECK(characterize_symbol(FrequencySymbol::ahe(2.0), default_sample_radii()).pass_m1);
    const auto rep = characterize_symbol(FrequencySymbol::constant(2.0), default_sample_radii());
    CHECK(std::isinf(rep.sigma_hat));
    CHECK(rep.pass_m2);
  }
}
