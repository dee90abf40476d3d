#include <doctest.h>

#include <cmath>
#include <numbers>

#include "direct_sums.hpp"
#include "pairwords/asymptotics.hpp"
#include "pairwords/exactgf.hpp"
#include "pairwords/oracle.hpp"
#include "pairwords/transfer.hpp"

using namespace pairwords;
using testing::G_direct;

TEST_SUITE("asymptotics") {
  TEST_CASE("complex gamma and digamma") {
    const double pi = std::numbers::pi;
    CHECK(std::abs(complex_gamma(1.0) - 1.0) < 1e-14);
    CHECK(std::abs(complex_gamma(0.5) - std::sqrt(pi)) < 1e-13);
    CHECK(std::abs(digamma(1.0) + kEulerGamma) < 1e-13);
    for (double x : {0.1, 0.7, 1.5, 3.2, 7.9, 15.5, -0.5, -2.7})
      CHECK(std::abs(complex_gamma(x).real() / std::tgamma(x) - 1.0) < 1e-12);
    for (cplx s : {cplx(0.3, 2.0), cplx(-1.2, 0.7), cplx(0.0, 10.0)}) {
      const cplx refl = complex_gamma(s) * complex_gamma(1.0 - s) * std::sin(pi * s);
      CHECK(std::abs(refl / pi - 1.0) < 1e-12);
      // digamma(s+1) = digamma(s) + 1/s
      CHECK(std::abs(digamma(s + 1.0) - digamma(s) - 1.0 / s) < 1e-12);
    }
    const double t = 10.0;
    const double asym = std::sqrt(2 * pi) * std::pow(t, -0.5) * std::exp(-pi * t / 2);
    CHECK(std::abs(std::abs(complex_gamma(cplx(0, t))) / asym - 1.0) < 0.01);
    CHECK_THROWS_AS(complex_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(complex_gamma(-3.0), std::domain_error);
    CHECK(std::abs(gamma_derivative(1.0) + kEulerGamma) < 1e-13);
  }

  TEST_CASE("G and G-tilde against their defining sums") {
    for (double p : {0.25, 0.5, 2.0 / 3.0}) {
      GeomParams g(p);
      for (double x : {1e3, 1e4, 1e5, 1e6}) {
        const auto G = G_sum(x, g);
        CHECK(std::abs(G.value() - G_direct(x, g)) < 1e-6);
        CHECK(std::abs(Gt_sum(x, g).value() - testing::Gt_direct(x, g)) < 1e-5);
        CHECK(G.imag_residue < 1e-13);
        CHECK(G.truncation_bound < kFourierTol);
      }
      const double x = 5e4, scale = 1.0 / (g.q() * g.q());
      const auto a = G_sum(x, g), b = G_sum(x * scale, g);
      CHECK(b.smooth - a.smooth == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(b.periodic - a.periodic) < 1e-10);
    }
    GeomParams g(0.5);
    const double x = 1e12, L = -g.log_q();
    CHECK(Gt_sum(x, g).value() * 2 * L * L / (std::log(x) * std::log(x)) == doctest::Approx(1.0).epsilon(0.15));
  }

  TEST_CASE("F1 and its derivative at zero") {
    for (double p : {0.25, 0.5, 2.0 / 3.0}) {
      GeomParams g(p);
      CHECK(std::abs(F1(0.0, g)) == 0.0);
      const cplx chi(0.0, 2 * std::numbers::pi / -g.log_q());
      for (cplx s : {chi, -chi, cplx(-0.5, 1.0), cplx(0.4, 3.0)}) {
        const cplx direct = testing::F1_direct(s, g);
        CHECK(std::abs(F1(s, g) - direct) < 1e-9 * std::max(1.0, std::abs(direct)));
      }
      CHECK(F1_prime_at_0(g) == doctest::Approx(testing::F1_prime_direct(g)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(F1(cplx(1.0, 0.5), GeomParams(0.5)), std::domain_error);
    const double q0 = 0.001, q1 = 0.999;
    CHECK(std::abs(2 * (1 - q0) * F1_prime_at_0(GeomParams(1 - q0)) / (2 * std::log(2.0)) - 1) < 0.01);
    CHECK(std::abs(2 * (1 - q1) * F1_prime_at_0(GeomParams(1 - q1)) / (4 * std::log(2.0)) - 1) < 0.02);
  }

  TEST_CASE("Ĝ with its first Mellin correction against the triple sum") {
    for (double p : {0.25, 0.5}) {
      GeomParams g(p);
      for (double x : {1e3, 1e4}) {
        const double n = x / (p * p);
        const auto v = Ghat_sum(n, g);
        CHECK(std::abs(v.value() - testing::Ghat_direct(n, g)) < 1e-5);
        CHECK(v.correction < 0.0);
      }
    }
  }

  TEST_CASE("variance formulas") {
    GeomParams g(0.25);
    const double L = -g.log_q();
    CHECK(S1(1e4, g).smooth == doctest::Approx(std::log(2.0) / (2 * L)).epsilon(1e-15));
    CHECK(std::abs(S1(1e4, g).value() - 1.205) < 0.001);
    for (double n : {1e3, 1e4, 1e6}) {
      CHECK(std::abs(var_x2(n, g).value() - var_x3(n, g).value() - S1(n, g).value()) < 1e-12);
      CHECK(std::abs(S1(n, g).value() - testing::S1_direct(n, g)) < 1e-6);
      CHECK(std::abs(S2(n, g).value() - testing::S2_direct(n, g)) < 1e-5);
    }
    // Periodic parts repeat when ln(n p^2) moves by 2L.
    for (double p : {0.25, 0.6, 0.9}) {
      GeomParams h(p);
      const double n = 3e4, n2 = n / (h.q() * h.q());
      CHECK(std::abs(S1(n, h).periodic - S1(n2, h).periodic) < 1e-10);
      CHECK(S1(n, h).imag_residue < 1e-13);
      CHECK(T2(n, h).imag_residue < 1e-13);
    }
  }

  TEST_CASE("means") {
    GeomParams g(0.25);
    const double n[] = {10000, 11547, 13333, 15396}, want[] = {12.692, 12.942, 13.192, 13.442};
    for (int k = 0; k < 4; ++k) CHECK(std::abs(mean_x1(n[k], g).value() - want[k]) < 0.001);
    CHECK(std::abs(mean_x3(500000, g).value() - 750.195) < 0.01);
    // E X1 is G(n p^2) itself; check against the defining sum.
    CHECK(std::abs(mean_x1(2e4, g).value() - G_direct(2e4 / 16, g)) < 1e-6);
    // Exact mean of X3 approaches the formula.
    const auto exact = mean_total(g, 200000, 1e-9);
    CHECK(std::abs(exact.off_diagonal - mean_x3(200000, g).value()) < 0.05);
  }

  TEST_CASE("cumulants") {
    CHECK(cumulant_coefficients(1) == std::vector<long long>{1});
    CHECK(cumulant_coefficients(2) == std::vector<long long>{1, -1});
    CHECK(cumulant_coefficients(3) == std::vector<long long>{1, -3, 2});
    CHECK(cumulant_coefficients(4) == std::vector<long long>{1, -7, 12, -6});
    GeomParams g(0.25);
    const double n = 1e4;
    CHECK(cumulant(n, 1, g).value() == doctest::Approx(Vj(n, 1, g).value()).epsilon(1e-14));
    CHECK(cumulant(n, 2, g).value() == doctest::Approx(Vj(n, 1, g).value() - Vj(n, 2, g).value()).epsilon(1e-13));
    CHECK(std::abs(cumulant(n, 2, g).value() - S1(n, g).value()) < 1e-3);
    for (int j = 1; j <= 5; ++j) CHECK(std::abs(Vj(n, j, g).value() - testing::Vj_direct(n, j, g)) < 1e-6);
    CHECK_THROWS(cumulant_coefficients(0));
  }

  TEST_CASE("covariance main terms") {
    GeomParams g(0.2);
    const double n = 1e3;
    CHECK(cov_main_term({1, 2}, {3, 4}, n, g).main == 0.0);
    CHECK(cov_main_term({1, 2}, {3, 4}, n, g).label == "4");
    CHECK(cov_main_term({1, 1}, {2, 2}, n, g).label == "identical letters");
    CHECK(cov_main_term({1, 2}, {1, 3}, n, g).label == "2a");
    CHECK(cov_main_term({1, 1}, {2, 3}, n, g).label == "3");
    CHECK(cov_main_term({1, 1}, {1, 2}, n, g).label == "6a");
    CHECK_THROWS_AS(cov_main_term({1, 2}, {1, 2}, n, g), std::domain_error);
    // Chain with n P_i P_r P_t small: main term ~ n P_i P_r P_t e^{...}.
    const double Pi = g.letter_prob(1), Pr = g.letter_prob(2), Pt = g.letter_prob(3);
    const double tiny = 1e-3;
    const auto chain = cov_main_term({1, 2}, {2, 3}, tiny, g);
    CHECK(chain.label == "1");
    CHECK(chain.main == doctest::Approx(tiny * Pi * Pr * Pt * std::exp(-tiny * (Pi * Pr + Pr * Pt))).epsilon(1e-3));
    // Swap case: the main term is the displayed closed form.
    const auto swap = cov_main_term({1, 2}, {2, 1}, 20, g);
    CHECK(swap.label == "5");
    CHECK(swap.main == doctest::Approx((std::exp(20 * Pi * Pr * (Pi + Pr)) - 1) * std::exp(-40 * Pi * Pr)));
  }

  // At n = 20 with both letters at probability 0.2 the exact covariance is 0.0468
  // and the main term 0.0761; the asymptotic regime is not reached yet.
  TEST_CASE("swap covariance within 25% of the exact value at n = 20" * doctest::may_fail()) {
    GeomParams g(0.2);
    const LetterWeights w{{0.2, 0.2}, 0.6};
    const double a = avoid_prob_matrix(w, PairSet({{1, 2}}), 20), b = avoid_prob_matrix(w, PairSet({{2, 1}}), 20);
    const double both = avoid_prob_matrix(w, PairSet({{1, 2}, {2, 1}}), 20);
    const double exact = both - a * b;
    const double main = (std::exp(20 * 0.04 * 0.4) - 1) * std::exp(-40 * 0.04);
    CHECK(exact > 0.0);
    CHECK(std::abs(main - exact) < 0.25 * exact);
  }

  TEST_CASE("Poisson pair law") {
    GeomParams g(0.05);
    const double lam = 200 * 0.05 * 0.05;
    CHECK(poisson_pair_pmf(200, 1, 1, 0, g) == doctest::Approx(std::exp(-lam)));
    double total = 0.0;
    for (long m = 0; m < 50; ++m) total += poisson_pair_pmf(200, 1, 1, m, g);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(poisson_pair_pmf(200, 1, 1, -1, g) == 0.0);
  }

  TEST_CASE("limit density of X1") {
    GeomParams g(0.25);
    const auto w = density_window(g, 7, 30, -5, 3);
    CHECK(w.upper_tail == doctest::Approx(7.28e-7).epsilon(0.002));
    CHECK(w.lower_tail == doctest::Approx(1.94e-8).epsilon(0.003));
    for (double delta : {0.0, 0.25, 0.5}) {
      double mass = 0.0;
      for (int k = -40; k <= 60; ++k) mass += limit_density_f(g, delta + k);
      CHECK(std::abs(mass - 1.0) < 2e-5);
    }
    double prev = 0.0;
    for (double eta = -6; eta <= 6; eta += 0.1) {
      REQUIRE(limit_density_f(g, eta) >= 0.0);
      const double F = limit_cdf_F(g, eta);
      REQUIRE(F >= prev - 1e-12);
      prev = F;
    }
    CHECK(limit_cdf_F(g, 30.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS(limit_density_f(g, 0.0, 1e-13));
    // The law does not depend on n: two word lengths with the same fractional i*
    // put the same mass at the same offset from i*.
    const double n1 = 1e4, n2 = n1 / (g.q() * g.q());
    CHECK(constants(g, n2).i_star - constants(g, n1).i_star == doctest::Approx(1.0));
  }

  TEST_CASE("Gaussian helpers") {
    CHECK(gaussian_cdf(0.0, 0.0, 1.0) == doctest::Approx(0.5));
    CHECK(gaussian_density(0.0, 0.0, 1.0) == doctest::Approx(1.0 / std::sqrt(2 * std::numbers::pi)));
    CHECK(gaussian_cdf(1.96, 0.0, 1.0) == doctest::Approx(0.9750021).epsilon(1e-6));
  }

  TEST_CASE("asymptotic independence and negative correlation of identical pairs") {
    GeomParams g(0.5);
    // n * |P(avoid both) - product| stays bounded over n = 8, 10, 12.
    // Sets over at most three letters keep n = 12 within the enumeration budget.
    for (const auto& ps : std::vector<std::vector<Pair>>{{{1, 1}, {2, 2}}, {{1, 2}, {3, 3}}, {{1, 2}, {2, 3}, {3, 1}}}) {
      std::vector<double> scaled;
      for (int n : {8, 10, 12}) {
        double prod = 1.0;
        for (const auto& pr : ps) prod *= avoid_prob_enum(g, {pr}, n);
        scaled.push_back(n * std::abs(avoid_prob_enum(g, ps, n) - prod));
      }
      CHECK(scaled[2] <= 1.5 * scaled[0] + 1e-12);
    }
    for (int n = 2; n <= 8; ++n)
      for (Letter i = 1; i <= 3; ++i)
        for (Letter k = i + 1; k <= 4; ++k) {
          const double cov = joint_indicator_expectation(g, {{i, i}, {k, k}}, {}, n) -
                             joint_indicator_expectation(g, {{i, i}}, {}, n) * joint_indicator_expectation(g, {{k, k}}, {}, n);
          REQUIRE(cov <= 1e-15);
        }
  }
}
