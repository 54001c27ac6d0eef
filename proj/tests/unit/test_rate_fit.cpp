#include <doctest.h>

#include <cmath>
#include <random>

#include "claws/errors.hpp"
#include "claws/random_fields.hpp"
#include "claws/rate_fit.hpp"

using namespace claws;

TEST_SUITE("harness_cli.rate_fit") {
  TEST_CASE("exact power law") {
    const auto t = log_spaced(10.0, 1e4, 50);
    std::vector<double> v;
    for (double x : t) v.push_back(std::pow(1.0 + x, -0.75));
    const auto f = fit_algebraic_rate(t, v, {10.0, 1e4});
    CHECK(std::abs(f.slope + 0.75) < 1e-6);
    CHECK(f.status == FitStatus::ok);
    CHECK(f.points == 50);
  }

  TEST_CASE("log correction") {
    const auto t = log_spaced(10.0, 1e4, 50);
    std::vector<double> v;
    for (double x : t) v.push_back(std::log(1.0 + x) / (1.0 + x));
    CHECK(std::abs(fit_algebraic_rate(t, v, {10.0, 1e4}, true).slope + 1.0) < 1e-3);
    CHECK_THROWS_AS(fit_algebraic_rate(t, v, {0.5, 1e4}, true), DomainError);
  }

  TEST_CASE("noisy series") {
    std::mt19937_64 rng(2024);
    const auto t = log_spaced(10.0, 1e4, 200);
    std::vector<double> v;
    for (double x : t) v.push_back(std::pow(1.0 + x, -0.25) * (1.0 + 0.02 * (unit_uniform(rng) - 0.5)));
    CHECK(std::abs(fit_algebraic_rate(t, v, {10.0, 1e4}).slope + 0.25) < 0.01);
  }

  TEST_CASE("rescaling leaves the slope unchanged") {
    const auto t = log_spaced(1.0, 1e3, 40);
    std::vector<double> a, b;
    for (double x : t) {
      a.push_back(std::pow(1.0 + x, -0.5) * (1.0 + 1.0 / (1.0 + x)));
      b.push_back(1e7 * a.back());
    }
    CHECK(fit_algebraic_rate(t, a, {10.0, 1e3}).slope ==
          doctest::Approx(fit_algebraic_rate(t, b, {10.0, 1e3}).slope).epsilon(1e-12));
  }

  TEST_CASE("unstable window is rejected") {
    const auto t = log_spaced(1.0, 1e4, 80);
    std::vector<double> v;
    for (double x : t) v.push_back(x < 100.0 ? std::pow(1.0 + x, -0.25) : std::pow(101.0, 0.75) * std::pow(1.0 + x, -1.0));
    CHECK(fit_algebraic_rate(t, v, {1.0, 1e4}).status == FitStatus::rejected_window);
  }

  TEST_CASE("errors") {
    const auto t = log_spaced(1.0, 10.0, 20);
    std::vector<double> v(t.size(), 1.0);
    CHECK_THROWS_AS(fit_algebraic_rate(t, v, {100.0, 1e3}), FitError);
    v[3] = 0.0;
    CHECK_THROWS_AS(fit_algebraic_rate(t, v, {1.0, 10.0}), FitError);
  }

  TEST_CASE("exponential fit and local slopes") {
    std::vector<double> t, v;
    for (int i = 0; i <= 40; ++i) {
      t.push_back(i * 0.5);
      v.push_back(3.0 * std::exp(-0.2 * t.back()));
    }
    const auto f = fit_exponential_rate(t, v, {0.0, 20.0});
    REQUIRE(f.efold_rate.has_value());
    CHECK(*f.efold_rate == doctest::Approx(0.2).epsilon(1e-12));

    const auto tt = log_spaced(1.0, 100.0, 30);
    std::vector<double> p;
    for (double x : tt) p.push_back(std::pow(1.0 + x, -1.5));
    for (double s : local_log_slopes(tt, p)) CHECK(s == doctest::Approx(-1.5).epsilon(1e-2));
  }
}
