#include "pairwords/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

#include "pairwords/asymptotics.hpp"
#include "pairwords/parallel.hpp"

namespace pairwords {

ResourceCapExceeded::ResourceCapExceeded(double letters_, double cap_)
    : std::runtime_error("simulation needs " + std::to_string(letters_) + " letters, cap is " +
                         std::to_string(cap_)),
      letters(letters_),
      cap(cap_) {}

namespace {

StatSummary summarize(const std::vector<std::uint32_t>& xs) {
  StatSummary s;
  std::uint64_t total = 0;
  for (auto x : xs) {
    total += x;
    ++s.histogram[x];
  }
  const double N = static_cast<double>(xs.size());
  s.mean = static_cast<double>(total) / N;
  double ss = 0.0;
  for (auto x : xs) ss += (x - s.mean) * (x - s.mean);
  s.variance = xs.size() > 1 ? ss / (N - 1) : 0.0;
  return s;
}

}  // namespace

SimResult simulate(const GeomParams& params, std::uint64_t n, std::uint64_t words, std::uint64_t seed,
                   unsigned workers, double letter_cap) {
  if (words < 2) throw std::invalid_argument("need at least two words");
  const double letters = static_cast<double>(n) * static_cast<double>(words);
  if (letters > letter_cap) throw ResourceCapExceeded(letters, letter_cap);

  SimResult r;
  r.p = params.p();
  r.n = n;
  r.words = words;
  r.seed = seed;
  r.x1.assign(words, 0);
  r.x3.assign(words, 0);
  std::vector<std::uint64_t> clamped(words, 0);

  // One counter per chunk of words keeps the hash set warm between words.
  const std::uint64_t chunk = 64;
  const std::uint64_t chunks = (words + chunk - 1) / chunk;
  parallel_for(chunks, workers, [&](std::size_t c) {
    DistinctPairCounter counter;
    const std::uint64_t end = std::min<std::uint64_t>(words, (c + 1) * chunk);
    for (std::uint64_t k = c * chunk; k < end; ++k) {
      Rng rng = Rng::substream(seed, k);
      LetterSampler draw(params);
      counter.reset();
      for (std::uint64_t t = 0; t < n; ++t) counter.push(draw(rng));
      r.x1[k] = static_cast<std::uint32_t>(counter.counts().x1);
      r.x3[k] = static_cast<std::uint32_t>(counter.counts().x3);
      clamped[k] = draw.clamped();
    }
  });

  std::vector<std::uint32_t> x2(words);
  for (std::uint64_t k = 0; k < words; ++k) {
    x2[k] = r.x1[k] + r.x3[k];
    r.clamped_letters += clamped[k];
  }
  r.stats[0] = summarize(r.x1);
  r.stats[1] = summarize(x2);
  r.stats[2] = summarize(r.x3);
  return r;
}

std::vector<DensityRow> histogram_vs_density(const SimResult& result, Stat which, const GeomParams& params) {
  const auto& hist = result.stat(which).histogram;
  std::vector<DensityRow> rows;
  if (hist.empty()) return rows;
  const double N = static_cast<double>(result.words);
  const double n = static_cast<double>(result.n);
  double mean = 0.0, var = 0.0;
  if (which == Stat::X3) {
    mean = mean_x3(n, params).value();
    var = var_x3(n, params).value();
  } else if (which == Stat::X2) {
    mean = mean_x1(n, params).value() + mean_x3(n, params).value();
    var = var_x2(n, params).value();
  }
  const double i_star = constants(params, n).i_star;
  for (std::uint64_t v = hist.begin()->first; v <= hist.rbegin()->first; ++v) {
    DensityRow row;
    row.value = v;
    const auto it = hist.find(v);
    row.empirical = it == hist.end() ? 0.0 : static_cast<double>(it->second) / N;
    row.theoretical = which == Stat::X1 ? limit_density_f(params, static_cast<double>(v) - i_star)
                                        : gaussian_density(static_cast<double>(v), mean, var);
    rows.push_back(row);
  }
  return rows;
}

double ks_distance_gaussian(const SimResult& result, Stat which, double mean, double var) {
  const auto& hist = result.stat(which).histogram;
  const double N = static_cast<double>(result.words);
  double below = 0.0, worst = 0.0;
  for (const auto& [v, count] : hist) {
    const double x = static_cast<double>(v);
    worst = std::max(worst, std::abs(below / N - gaussian_cdf(x - 0.5, mean, var)));
    below += static_cast<double>(count);
    worst = std::max(worst, std::abs(below / N - gaussian_cdf(x + 0.5, mean, var)));
  }
  return worst;
}

ChiSquare letter_frequency_chi2(const GeomParams& params, std::uint64_t letters, std::uint64_t seed) {
  Rng rng = Rng::substream(seed, 0);
  LetterSampler draw(params);
  std::vector<std::uint64_t> counts;
  for (std::uint64_t t = 0; t < letters; ++t) {
    const Letter a = draw(rng);
    if (a >= counts.size()) counts.resize(a + 1, 0);
    ++counts[a];
  }
  const double total = static_cast<double>(letters);
  // Cells 1..K with expected >= 5, then one pooled tail cell.
  ChiSquare out;
  Letter K = 1;
  while (total * params.letter_prob(K + 1) >= 5.0 && total * params.tail(K + 1) >= 5.0) ++K;
  std::uint64_t tail_count = 0;
  counts.resize(std::max<std::size_t>(counts.size(), K + 1), 0);
  for (Letter a = 1; a < counts.size(); ++a) {
    if (a <= K) {
      const double e = total * params.letter_prob(a);
      out.statistic += (counts[a] - e) * (counts[a] - e) / e;
    } else {
      tail_count += counts[a];
    }
  }
  const double e_tail = total * params.tail(K);
  out.statistic += (tail_count - e_tail) * (tail_count - e_tail) / e_tail;
  out.dof = static_cast<int>(K);  // K + 1 cells, one constraint
  out.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(out.dof), out.statistic));
  return out;
}

}  // namespace pairwords
