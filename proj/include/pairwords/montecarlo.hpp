#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pairwords/core.hpp"
#include "pairwords/oracle.hpp"

namespace pairwords {

struct StatSummary {
  double mean = 0.0;
  double variance = 0.0;  // 1/(N-1) normalisation
  std::map<std::uint64_t, std::uint64_t> histogram;
};

struct SimResult {
  double p = 0.0;
  std::uint64_t n = 0;
  std::uint64_t words = 0;
  std::uint64_t seed = 0;
  std::array<StatSummary, 3> stats;  // X1, X2, X3
  std::uint64_t clamped_letters = 0;
  // Per-word values, kept so tests and KS/histogram checks can re-derive anything.
  std::vector<std::uint32_t> x1, x3;

  const StatSummary& stat(Stat s) const { return stats[static_cast<int>(s)]; }
};

// Refuse runs whose total letter count n*N exceeds this.
inline constexpr double kDefaultLetterCap = 2e10;

class ResourceCapExceeded : public std::runtime_error {
 public:
  ResourceCapExceeded(double letters, double cap);
  double letters;
  double cap;
};

// N words of length n; word k uses the substream (seed, k). Bit-identical for any
// worker count.
SimResult simulate(const GeomParams& params, std::uint64_t n, std::uint64_t words, std::uint64_t seed,
                   unsigned workers = 0, double letter_cap = kDefaultLetterCap);

struct DensityRow {
  std::uint64_t value = 0;
  double empirical = 0.0;
  double theoretical = 0.0;
};

// X1: theoretical column is the limit density at value - i*. X3 (and X2): Gaussian
// density with the asymptotic mean and variance of X3 (X2 adds E X1 and uses var_x2).
std::vector<DensityRow> histogram_vs_density(const SimResult& result, Stat which, const GeomParams& params);

// Kolmogorov-Smirnov distance between the empirical law of a statistic and
// N(mean, var), comparing at half-integers (continuity correction).
double ks_distance_gaussian(const SimResult& result, Stat which, double mean, double var);

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Goodness of fit of sampled letter frequencies against the geometric law, on
// `letters` draws from substream (seed, 0); cells with expected count < 5 are pooled.
ChiSquare letter_frequency_chi2(const GeomParams& params, std::uint64_t letters, std::uint64_t seed);

}  // namespace pairwords
