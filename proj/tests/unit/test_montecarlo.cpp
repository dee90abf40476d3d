#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "direct_sums.hpp"
#include "pairwords/asymptotics.hpp"
#include "pairwords/montecarlo.hpp"
#include "pairwords/parallel.hpp"

using namespace pairwords;

TEST_SUITE("montecarlo") {
  TEST_CASE("edge sizes") {
    GeomParams g(0.25);
    const auto two = simulate(g, 50, 2, 9);
    for (const auto& s : two.stats) {
      CHECK(std::isfinite(s.variance));
      CHECK(s.variance >= 0.0);
    }
    const auto r = simulate(g, 2, 500, 1);
    REQUIRE(r.stat(Stat::X2).histogram.size() == 1);
    CHECK(r.stat(Stat::X2).histogram.at(1) == 500);
    CHECK(r.stat(Stat::X2).variance == 0.0);
    const auto empty = simulate(g, 0, 10, 1);
    CHECK(empty.stat(Stat::X2).histogram.at(0) == 10);
    CHECK_THROWS_AS(simulate(g, 10, 1, 1), std::invalid_argument);
  }

  TEST_CASE("summaries are consistent with the per-word values") {
    GeomParams g(0.3);
    const auto r = simulate(g, 300, 1000, 4);
    for (const auto& s : r.stats) {
      std::uint64_t total = 0;
      for (const auto& [v, c] : s.histogram) total += c;
      CHECK(total == r.words);
    }
    CHECK(r.stat(Stat::X2).mean == doctest::Approx(r.stat(Stat::X1).mean + r.stat(Stat::X3).mean).epsilon(1e-12));
    double m = 0.0;
    for (auto v : r.x1) m += v;
    m /= r.words;
    double ss = 0.0;
    for (auto v : r.x1) ss += (v - m) * (v - m);
    CHECK(r.stat(Stat::X1).variance == doctest::Approx(ss / (r.words - 1)).epsilon(1e-12));
    // Word k is reproducible from its own substream.
    for (std::uint64_t k : {0ull, 63ull, 64ull, 999ull}) {
      Rng rng = Rng::substream(4, k);
      const auto ps = pair_stats(sample_word(g, 300, rng));
      CHECK(ps.x1 == r.x1[k]);
      CHECK(ps.x3 == r.x3[k]);
    }
  }

  TEST_CASE("bit-identical across worker counts") {
    GeomParams g(0.25);
    const auto a = simulate(g, 2000, 700, 17, 1);
    for (unsigned w : {2u, 4u}) {
      const auto b = simulate(g, 2000, 700, 17, w);
      CHECK(a.x1 == b.x1);
      CHECK(a.x3 == b.x3);
      for (int s = 0; s < 3; ++s) {
        CHECK(a.stats[s].mean == b.stats[s].mean);
        CHECK(a.stats[s].variance == b.stats[s].variance);
        CHECK(a.stats[s].histogram == b.stats[s].histogram);
      }
    }
    CHECK(simulate(g, 2000, 700, 18).x1 != a.x1);
  }

  TEST_CASE("letter frequencies fit the geometric law") {
    for (double p : {0.25, 0.5}) {
      const auto c = letter_frequency_chi2(GeomParams(p), 2'000'000, 3);
      CHECK(c.dof >= 5);
      CHECK(c.p_value > 1e-6);
    }
  }

  TEST_CASE("resource cap") {
    CHECK_THROWS_AS(simulate(GeomParams(0.25), 1'000'000, 1'000'000, 1), ResourceCapExceeded);
    try {
      simulate(GeomParams(0.25), 1000, 1000, 1, 0, 1e5);
    } catch (const ResourceCapExceeded& e) {
      CHECK(e.letters == 1e6);
      CHECK(e.cap == 1e5);
    }
  }

  TEST_CASE("pair occurrence counts follow the exact law") {
    GeomParams g(0.05);
    const int n = 200, N = 40000;
    for (auto [i, j] : std::vector<Pair>{{1, 1}, {1, 2}}) {
      const auto pmf = testing::pair_count_pmf(g, i, j, n, 4);
      CHECK(std::accumulate(pmf.begin(), pmf.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-13));
      std::vector<int> freq(5, 0);
      for (int k = 0; k < N; ++k) {
        Rng rng = Rng::substream(21, k);
        ++freq[std::min(testing::pair_occurrences(sample_word(g, n, rng), i, j), 4)];
      }
      for (int m = 0; m < 4; ++m) {
        const double sigma = std::sqrt(pmf[m] * (1 - pmf[m]) / N);
        CHECK(std::abs(freq[m] / double(N) - pmf[m]) < 4 * sigma);
      }
    }
    // The DP itself against enumeration on a short word.
    GeomParams h(0.5);
    const auto pmf = testing::pair_count_pmf(h, 1, 1, 4, 3);
    CHECK(pmf[0] == doctest::Approx(avoid_prob_enum(h, {{1, 1}}, 4)).epsilon(1e-13));
  }

  TEST_CASE("histogram against the limit density") {
    GeomParams g(0.25);
    const auto r = simulate(g, 10000, 4000, 2);
    const auto rows = histogram_vs_density(r, Stat::X1, g);
    double emp = 0.0, worst = 0.0;
    for (const auto& row : rows) {
      emp += row.empirical;
      worst = std::max(worst, std::abs(row.empirical - row.theoretical));
    }
    CHECK(emp == doctest::Approx(1.0));
    CHECK(worst < 0.04);
    const auto x3 = histogram_vs_density(r, Stat::X3, g);
    CHECK_FALSE(x3.empty());
    CHECK(ks_distance_gaussian(r, Stat::X3, mean_x3(1e4, g).value(), var_x3(1e4, g).value()) < 0.1);
  }

  TEST_CASE("worker resolution honours the environment cap") {
    ::setenv("PAIRWORDS_THREADS", "2", 1);
    CHECK(resolve_workers(8) == 2);
    CHECK(resolve_workers(1) == 1);
    ::setenv("PAIRWORDS_THREADS", "junk", 1);
    CHECK(resolve_workers(3) == 3);
    ::unsetenv("PAIRWORDS_THREADS");
    CHECK(resolve_workers(5) == 5);
    CHECK(resolve_workers(0) >= 1);
  }
}
