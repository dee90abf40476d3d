#include <doctest.h>

#include <cmath>
#include <random>

#include "direct_sums.hpp"
#include "pairwords/asymptotics.hpp"
#include "pairwords/exactgf.hpp"
#include "pairwords/oracle.hpp"
#include "pairwords/transfer.hpp"

using namespace pairwords;

namespace {

// Pairs over letters 1..4 covering every regime of the joint dispatch.
std::vector<std::pair<Pair, Pair>> regime_grid() {
  std::vector<std::pair<Pair, Pair>> out;
  for (Letter i = 1; i <= 3; ++i)
    for (Letter j = 1; j <= 3; ++j)
      for (Letter k = 1; k <= 4; ++k)
        for (Letter l = 1; l <= 4; ++l)
          if (Pair{i, j} != Pair{k, l}) out.push_back({{i, j}, {k, l}});
  return out;
}

}  // namespace

TEST_SUITE("exactgf") {
  TEST_CASE("single pair probabilities") {
    GeomParams g(0.5);
    CHECK(prob_pair_occurs(g, 1, 2, 1) == 0.0);
    CHECK(prob_pair_occurs(g, 1, 1, 0) == 0.0);
    CHECK(prob_pair_occurs(g, 1, 2, 2) == doctest::Approx(0.5 * 0.25));
    CHECK(prob_pair_occurs(g, 1, 1, 5) == doctest::Approx(0.59375).epsilon(1e-14));
    for (double p : {0.25, 0.5, 2.0 / 3.0}) {
      GeomParams h(p);
      for (Letter i = 1; i <= 3; ++i)
        for (Letter j = 1; j <= 3; ++j)
          for (long n = 0; n <= 40; ++n) {
            const double rec = prob_pair_occurs(h, i, j, n);
            REQUIRE(prob_pair_occurs_closed(h, i, j, n) == doctest::Approx(rec).epsilon(1e-12));
            REQUIRE(1.0 - avoid_prob_matrix(h, PairSet{{i, j}}, static_cast<int>(n)) ==
                    doctest::Approx(rec).epsilon(1e-12));
          }
    }
  }

  TEST_CASE("joint probabilities match the enumeration oracle in every regime") {
    std::set<std::string> regimes;
    for (double p : {0.25, 0.5}) {
      GeomParams g(p);
      for (const auto& [a, b] : regime_grid()) {
        regimes.insert(joint_regime(g, a, b).regime);
        for (int n : {2, 3, 6, 9}) {
          const double oracle = joint_indicator_expectation(g, {a, b}, {}, n);
          REQUIRE(joint_prob(g, a, b, n) == doctest::Approx(oracle).epsilon(1e-10));
          REQUIRE(joint_prob(g, a, b, n) == joint_prob(g, b, a, n));
        }
      }
    }
    CHECK(regimes.size() == 10);  // every regime except the same pair
    CHECK(joint_prob(GeomParams(0.5), {1, 2}, {1, 2}, 6) ==
          doctest::Approx(prob_pair_occurs(GeomParams(0.5), 1, 2, 6)));
  }

  TEST_CASE("tabulated denominators") {
    GeomParams g(0.3);
    const double Pi = g.letter_prob(1), Pj = g.letter_prob(2), Pl = g.letter_prob(3);
    const auto chain = gf_case_G(g, 1, 2, 3);
    CHECK(chain.is_cubic);
    CHECK(chain.cubic[0] == doctest::Approx(-Pi * Pj * Pl));
    CHECK(chain.cubic[1] == doctest::Approx(Pi * Pj + Pj * Pl));
    CHECK(chain.cubic[2] == doctest::Approx(-1.0));
    CHECK(chain.cubic[3] == doctest::Approx(1.0));
    const auto alt = gf_case_H(g, 1, 2);
    CHECK(alt.cubic[0] == doctest::Approx(Pi * Pj * (1 - Pi - Pj)));
    CHECK(alt.cubic[1] == doctest::Approx(Pi * Pj));
    CHECK(alt.gf.numerator() == Poly{1, 0, -Pi * Pj});
  }

  TEST_CASE("cubic roots and partial fractions") {
    const auto lin = cubic_roots(0, 0, -1, 1);
    REQUIRE(lin.roots.size() == 1);
    CHECK(lin.roots[0].real() == doctest::Approx(1.0));
    const auto r = cubic_roots(-0.008, 0.08, -1, 1);
    REQUIRE(r.roots.size() == 3);
    for (const auto& z : r.roots) CHECK(std::abs(1.0 - z + 0.08 * z * z - 0.008 * z * z * z) < 1e-12);
    CHECK(std::abs(r.roots[0]) <= std::abs(r.roots[1]));
    CHECK(cubic_roots(1, -2, 1, 0).near_coincident);  // z (z-1)^2
    CHECK_THROWS_AS(cubic_roots(0, 0, 0, 0), std::domain_error);

    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.05, 0.3);
    for (int t = 0; t < 100; ++t) {
      GeomParams g(u(gen) + 0.2);
      const auto cases = {gf_case_E(g, 1, 2), gf_case_F(g, 1, 2, 3), gf_case_G(g, 1, 2, 3), gf_case_H(g, 1, 2)};
      for (const auto& c : cases)
        for (long n = 0; n <= 40; ++n) {
          Poly num = c.gf.numerator();
          const double pf = partial_fraction_coefficient(num, c.gf.denominator(), n);
          if (std::isnan(pf)) continue;
          // Proper fraction needed: compare only where deg num < deg den.
          if (poly_degree(num) >= poly_degree(c.gf.denominator())) continue;
          REQUIRE(pf == doctest::Approx(c.gf.coefficient(n)).epsilon(1e-10));
        }
    }
    for (const auto& [a, b] : regime_grid()) {
      const double viaPF = joint_prob_partial_fractions(GeomParams(0.4), a, b, 12);
      if (!std::isnan(viaPF)) REQUIRE(viaPF == doctest::Approx(joint_prob(GeomParams(0.4), a, b, 12)).epsilon(1e-10));
    }
  }

  TEST_CASE("total mean with certified tail") {
    GeomParams g(0.5);
    CHECK(mean_total(g, 1, 1e-10).total == 0.0);
    const auto m3 = mean_total(g, 3, 1e-10);
    CHECK(m3.total == doctest::Approx(mean_total_enum(g, 3, Stat::X2, 1e-11).value).epsilon(1e-9));
    CHECK(m3.tail_bound < 1e-10);
    double prev = 0.0;
    for (long n = 2; n < 60; ++n) {
      const double v = mean_total(g, n, 1e-12).total;
      REQUIRE(v >= prev - 1e-12);
      prev = v;
    }
    // The exact E X1 sits below the asymptotic value by a gap that halves when n quadruples.
    GeomParams q(0.25);
    double prev_gap = 0.0;
    for (double n : {1e4, 4e4, 1.6e5}) {
      const auto exact = mean_total(q, static_cast<long>(n), 1e-9);
      const double gap = mean_x1(n, q).value() - exact.diagonal;
      CHECK(gap > 0.0);
      if (prev_gap > 0.0) CHECK(gap / prev_gap == doctest::Approx(0.5).epsilon(0.1));
      prev_gap = gap;
    }
    CHECK(std::abs(mean_total(q, 10000, 1e-9).diagonal - 12.677) < 0.001);
  }

  TEST_CASE("second moment against brute force over whole words") {
    GeomParams g(0.5);
    CHECK(second_moment_total(g, 2, 1e-10).total == doctest::Approx(1.0).epsilon(1e-9));
    const auto s = second_moment_total(g, 5, 1e-8);
    const auto m = mean_total(g, 5, 1e-10);
    const auto brute = testing::brute_moments(g, 5, 18);
    CHECK(s.tail_bound < 1e-8);
    CHECK(s.total == doctest::Approx(brute.x2_sq).epsilon(1e-7));
    CHECK(s.x1 == doctest::Approx(brute.x1_sq).epsilon(1e-7));
    CHECK(s.x3 == doctest::Approx(brute.x3_sq).epsilon(1e-7));
    CHECK(s.total >= m.total * m.total);
    CHECK_THROWS_AS(second_moment_total(GeomParams(0.25), 100000, 1e-6), BudgetExceeded);
  }
}
