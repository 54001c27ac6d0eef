#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "claws/checks.hpp"
#include "claws/random_fields.hpp"
#include "claws/solver.hpp"

using namespace claws;

namespace {
const double kPi = std::numbers::pi;

SolverConfig config(double dt, double T, double every) {
  SolverConfig cfg;
  cfg.dt = dt;
  cfg.final_time = T;
  cfg.output_every = every;
  cfg.k_max = 2;
  return cfg;
}

RealField bump(const Grid& g, double amp) {
  return sample(g, [&](std::span<const double> x) { return amp * std::exp(-x[0] * x[0] / 8.0); });
}
}  // namespace

TEST_SUITE("analysis_checks") {
  TEST_CASE("interpolation: zero field is a trivial pass") {
    const auto rep = interpolation_check(SpectralField(Grid(1, 64, 10.0)), 1, 0.0);
    CHECK(rep.trivial);
    CHECK(rep.pass);
  }

  TEST_CASE("interpolation: seeded fields satisfy the bound") {
    std::mt19937_64 rng(99);
    const Grid g(1, 64, 2.0 * kPi);
    for (int i = 0; i < 50; ++i) {
      const auto f = random_band_limited(g, rng, 16);
      for (int k = 0; k <= 2; ++k) {
        for (double s : {-1.0, 0.0, 1.0, 2.0}) {
          const auto rep = interpolation_check(f, k, s);
          CHECK(rep.pass);
          CHECK(rep.lhs <= rep.bound * (1.0 + 1e-6));
        }
      }
    }
  }

  TEST_CASE("interpolation: single mode") {
    // u = cos(x), s = 1: LHS^2 = 2 pi * 2 * (1/2)^2 / 2 = pi / 2.
    const Grid g(1, 32, 2.0 * kPi);
    const auto f = forward(sample(g, [](std::span<const double> x) { return std::cos(x[0]); }));
    const auto rep = interpolation_check(f, 0, 1.0);
    CHECK(rep.lhs == doctest::Approx(kPi / 2.0).epsilon(1e-13));
    CHECK(rep.pass);
  }

  TEST_CASE("energy identity: linear run") {
    const Grid g(1, 256, 80.0);
    const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
    const auto rec = simulate(spec, FluxModel::zero(1), bump(g, 1.0), config(0.01, 4.0, 0.01));
    const auto rep = energy_identity_check(rec);
    CHECK(rep.linear);
    CHECK(rep.status == CheckStatus::pass);
    CHECK(rep.max_error < 1e-6);
  }

  TEST_CASE("energy identity: Burgers run") {
    const Grid g(1, 256, 80.0);
    const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
    const auto rec = simulate(spec, FluxModel::burgers(1), bump(g, 0.5), config(0.01, 4.0, 0.01));
    const auto rep = energy_identity_check(rec);
    CHECK_FALSE(rep.linear);
    CHECK(rep.status == CheckStatus::pass);
  }

  TEST_CASE("energy identity: constant field") {
    const Grid g(1, 64, 10.0);
    const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
    const auto c = sample(g, [](std::span<const double>) { return 3.0; });
    const auto rec = simulate(spec, FluxModel::zero(1), c, config(0.05, 2.0, 0.1));
    for (const auto& s : rec.samples) CHECK(s.dissipation[0] == 0.0);
    const auto rep = energy_identity_check(rec);
    CHECK(rep.status == CheckStatus::pass);
    CHECK(rep.max_error == doctest::Approx(0.0));
  }

  TEST_CASE("energy identity: coarse cadence warns") {
    const Grid g(1, 64, 40.0);
    const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
    const auto rec = simulate(spec, FluxModel::zero(1), bump(g, 1.0), config(0.1, 20.0, 2.0));
    CHECK(energy_identity_check(rec).status == CheckStatus::warning);
  }

  TEST_CASE("energy identity error shrinks with the stride") {
    const Grid g(1, 256, 80.0);
    const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
    const auto coarse = energy_identity_check(simulate(spec, FluxModel::zero(1), bump(g, 1.0), config(0.01, 4.0, 0.2)));
    const auto fine = energy_identity_check(simulate(spec, FluxModel::zero(1), bump(g, 1.0), config(0.01, 4.0, 0.1)));
    CHECK(fine.max_error < coarse.max_error / 3.0);
  }

  TEST_CASE("k-energy audit of a Burgers run") {
    const Grid g(1, 256, 80.0);
    const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
    const auto rec = simulate(spec, FluxModel::burgers(1), bump(g, 0.5), config(0.01, 4.0, 0.05));
    const double c = calibrate_k_energy(rec, 1);
    CHECK(std::isfinite(c));
    const auto audit = k_energy_audit(rec, 1, c);
    CHECK(audit.pass);
    CHECK(audit.max_ratio == doctest::Approx(c));
  }

  TEST_CASE("product ratio of sin with itself") {
    const Grid g(1, 64, 2.0 * kPi);
    const auto f = forward(sample(g, [](std::span<const double> x) { return std::sin(x[0]); }));
    const double r = product_ratio(f, f, {1, 0}, {1, 0}, ProductNorms::p2_qinf_r2);
    CHECK(r == doctest::Approx(std::sqrt(3.0 * kPi / 4.0) / (2.0 * std::sqrt(kPi))).epsilon(1e-12));
    CHECK(product_ratio(f, SpectralField(g), {1, 0}, {1, 0}, ProductNorms::p2_qinf_r2) < 0.0);
  }

  TEST_CASE("product ratio scan") {
    const auto a = product_ratio_scan(42, 500, 1, 1, 1, ProductNorms::p2_qinf_r2);
    CHECK(a.samples + a.skipped == 500);
    CHECK(std::isfinite(a.max_ratio));
    CHECK(a.max_ratio <= 10.0);
    CHECK(a.pass);
    const auto b = product_ratio_scan(42, 500, 1, 1, 1, ProductNorms::p2_qinf_r2);
    CHECK(a.max_ratio == b.max_ratio);
    const auto c = product_ratio_scan(5, 100, 2, 1, 2, ProductNorms::p1_q2_r2);
    CHECK(c.pass);
  }
}
