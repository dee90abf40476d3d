#include <doctest.h>

#include <cmath>

#include "direct_sums.hpp"
#include "pairwords/oracle.hpp"

using namespace pairwords;

TEST_SUITE("oracle") {
  TEST_CASE("short words have closed-form avoidance probabilities") {
    GeomParams g(0.5);
    const double P1 = 0.5, P2 = 0.25;
    CHECK(avoid_prob_enum(g, {}, 7) == doctest::Approx(1.0));
    CHECK(avoid_prob_enum(g, {{1, 1}}, 0) == 1.0);
    CHECK(avoid_prob_enum(g, {{1, 1}}, 1) == 1.0);
    CHECK(avoid_prob_enum(g, {{1, 1}}, 2) == doctest::Approx(1 - P1 * P1));
    CHECK(avoid_prob_enum(g, {{1, 1}}, 3) == doctest::Approx(1 - 2 * P1 * P1 + P1 * P1 * P1));
    CHECK(avoid_prob_enum(g, {{1, 2}}, 3) == doctest::Approx(1 - 2 * P1 * P2));
    CHECK(avoid_prob_enum(g, {{1, 2}, {2, 1}}, 2) == doctest::Approx(1 - 2 * P1 * P2));
  }

  TEST_CASE("exact mode returns rationals") {
    const Rational half(1, 2);
    CHECK(avoid_prob_enum_exact(half, {{1, 1}}, 3) == Rational(5, 8));
    CHECK(joint_indicator_expectation_exact(half, {{1, 1}}, {}, 2) == Rational(1, 4));
    CHECK(joint_indicator_expectation_exact(half, {{1, 1}, {1, 2}}, {}, 3) == Rational(1, 16));
  }

  TEST_CASE("inclusion-exclusion agrees with complements") {
    GeomParams g(0.25);
    for (int n = 2; n <= 8; ++n) {
      const double hit = joint_indicator_expectation(g, {{1, 2}}, {}, n);
      CHECK(hit == doctest::Approx(1 - avoid_prob_enum(g, {{1, 2}}, n)).epsilon(1e-13));
      const double both = joint_indicator_expectation(g, {{1, 2}, {2, 2}}, {}, n);
      const double only_first = joint_indicator_expectation(g, {{1, 2}}, {{2, 2}}, n);
      CHECK(both + only_first == doctest::Approx(hit).epsilon(1e-13));
    }
  }

  TEST_CASE("budget refusal") {
    GeomParams g(0.5);
    CHECK_THROWS_AS(avoid_prob_enum(g, {{1, 2}, {3, 4}}, 30, 1000), BudgetExceeded);
    try {
      avoid_prob_enum(g, {{1, 2}}, 40, 1000);
    } catch (const BudgetExceeded& e) {
      CHECK(e.required() > 1000);
      CHECK(e.budget() == 1000);
    }
  }

  TEST_CASE("enumerated means against brute force over whole words") {
    GeomParams g(0.5);
    for (int n : {2, 3, 4}) {
      const auto brute = testing::brute_moments(g, n, 14);
      for (Stat s : {Stat::X1, Stat::X2, Stat::X3}) {
        const auto t = mean_total_enum(g, n, s, 1e-9);
        const double ref = s == Stat::X1 ? brute.x1 : s == Stat::X2 ? brute.x2 : brute.x3;
        CHECK(t.tail_bound < 1e-9);
        CHECK(t.value == doctest::Approx(ref).epsilon(1e-6));
      }
    }
    CHECK(mean_total_enum(g, 2, Stat::X2, 1e-10).value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(parse_stat("x3") == Stat::X3);
    CHECK_THROWS(parse_stat("x4"));
  }
}
