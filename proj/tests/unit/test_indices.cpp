#include <doctest.h>

#include <cmath>

#include "claws/errors.hpp"
#include "claws/indices.hpp"
#include "oracles.hpp"

using namespace claws;

TEST_SUITE("regularity_indices") {
  TEST_CASE("ceil_plus") {
    CHECK(ceil_plus(2.0) == 2);
    CHECK(ceil_plus(2.5) == 3);
    CHECK(ceil_plus(0.0) == 0);
    CHECK(ceil_plus(0.1) == 1);
    CHECK_THROWS_AS(ceil_plus(-0.5), DomainError);
  }

  TEST_CASE("star_bracket") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(star_bracket(2.0, 3, 2.0, 2.0) == 2);
    CHECK(star_bracket(0.0, 1, 1.0, 2.0) == 1);
    CHECK(star_bracket(1.2, 2, 2.0, 2.0) == 2);
    CHECK(star_bracket(0.0, 1, 2.0, inf) == 1);
    CHECK_THROWS_AS(star_bracket(1.0, 1, 0.5, 2.0), DomainError);
    CHECK_THROWS_AS(star_bracket(1.0, 1, 2.0, 1.5), DomainError);
  }

  TEST_CASE("table spot values") {
    const auto r = ell_table(1, 2.0, 2);
    CHECK(r.l1 == 5);
    CHECK(r.l2 == 7);
    CHECK(r.l3 == 8);
    CHECK_FALSE(r.l4.has_value());
    const auto q = ell_table(2, 2.0, 0);
    CHECK(*q.l4 == 4);
    CHECK(*q.nu == 1);
    CHECK(*q.l5 == 5);
    CHECK_THROWS_AS(ell_table(1, 1.0, 0), DomainError);
  }

  TEST_CASE("s near one") {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 0; k <= 4; ++k) CHECK(ell_table(n, 1.001, k).l1 == k + 1);
    }
  }

  TEST_CASE("derived orders") {
    CHECK(minimal_regularity(1, 2.0) == 8);
    CHECK(optimal_decay_order(1, 2.0, 8) == 2);
    CHECK(minimal_regularity(2, 2.0) == 10);
    CHECK(*profile_order(2, 2.0, 10) == 1);
    CHECK_THROWS_AS(optimal_decay_order(1, 2.0, 7), DomainError);
    const auto rep = compute_index_set({1, 2.0, 5});
    CHECK(rep.N0 == 8);
    CHECK_FALSE(rep.N1.has_value());
    CHECK(rep.table.size() == 6);
  }

  TEST_CASE("agreement with rational oracle") {
    const std::pair<long long, long long> svals[] = {{11, 10}, {5, 4}, {3, 2}, {2, 1}, {5, 2}, {3, 1}};
    int mismatches = 0;
    for (int n = 1; n <= 5; ++n) {
      for (auto [p, q] : svals) {
        const oracle::Indices o{n, p, q};
        const double s = double(p) / double(q);
        CHECK(minimal_regularity(n, s) == o.N0());
        for (int k = 0; k <= 10; ++k) {
          const auto row = ell_table(n, s, k);
          mismatches += row.l1 != o.l1(k) || row.l2 != o.l2(k) || row.l3 != o.l3(k);
          if (n >= 2) mismatches += *row.l4 != o.l4(k) || *row.l5 != o.l5(k) || *row.nu != o.nu(k);
        }
        for (int N = int(o.N0()); N <= 30; ++N) {
          mismatches += optimal_decay_order(n, s, N) != *o.N1(N);
          if (n >= 2) {
            const auto a = profile_order(n, s, N);
            const auto b = o.N2(N);
            mismatches += a.has_value() != b.has_value() || (a && *a != *b);
          }
        }
      }
    }
    CHECK(mismatches == 0);
  }

  TEST_CASE("floor reading of l3 is the one implemented") {
    // s = 1.25: floor(2(s-1)) = 0 while [2(s-1)]_+ = 1.
    const oracle::Indices floor_reading{1, 5, 4, false};
    const oracle::Indices plus_reading{1, 5, 4, true};
    CHECK(ell_table(1, 1.25, 0).l3 == floor_reading.l3(0));
    CHECK(ell_table(1, 1.25, 0).l3 != plus_reading.l3(0));
  }
}
