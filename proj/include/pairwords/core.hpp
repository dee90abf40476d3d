#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

namespace pairwords {

using Letter = std::uint32_t;
using Pair = std::pair<Letter, Letter>;
using Word = std::vector<Letter>;

// Letters above this value are clamped (and counted) by the sampler.
inline constexpr Letter kMaxLetter = Letter{1} << 15;

// Geometric letter law P(Z = i) = p q^(i-1), i >= 1.
class GeomParams {
 public:
  explicit GeomParams(double p);

  double p() const { return p_; }
  double q() const { return q_; }
  double log_q() const { return log_q_; }

  double letter_prob(long i) const;
  // P(Z > m) = q^m.
  double tail(long m) const;

 private:
  double p_;
  double q_;
  double log_q_;
};

double letter_prob(const GeomParams& params, long i);

// 64-bit mixer used to derive independent per-word streams from (seed, index).
std::uint64_t mix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(substream_seed(seed, index));
  }

  // Uniform on the open interval (0,1).
  double open_uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Inverse-CDF sampler: letter = 1 + floor(ln U / ln q).
class LetterSampler {
 public:
  explicit LetterSampler(const GeomParams& params, Letter max_letter = kMaxLetter);

  Letter operator()(Rng& rng) {
    const double t = std::log(rng.open_uniform()) * inv_log_q_;
    if (t >= max_index_) {
      ++clamped_;
      return max_letter_;
    }
    return 1 + static_cast<Letter>(t);
  }

  std::uint64_t clamped() const { return clamped_; }

 private:
  double inv_log_q_;
  double max_index_;
  Letter max_letter_;
  std::uint64_t clamped_ = 0;
};

// Samples n letters; the number of clamped letters is added to *clamped when given.
Word sample_word(const GeomParams& params, std::size_t n, Rng& rng,
                 std::uint64_t* clamped = nullptr);

struct PairStats {
  std::set<Pair> distinct_pairs;
  std::map<Pair, std::uint64_t> occurrence_counts;
  std::uint64_t x1 = 0;
  std::uint64_t x2 = 0;
  std::uint64_t x3 = 0;
};

PairStats pair_stats(const Word& word);

struct PairCounts {
  std::uint64_t x1 = 0;
  std::uint64_t x2 = 0;
  std::uint64_t x3 = 0;
};

// Streaming distinct-pair counter for simulation. Pairs of small letters go
// into a bitmap; the rest into a hash set keyed by the packed pair.
class DistinctPairCounter {
 public:
  DistinctPairCounter();

  void reset();
  void push(Letter letter);
  const PairCounts& counts() const { return counts_; }

 private:
  static constexpr Letter kDense = 128;
  void record(Letter a, Letter b);

  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint32_t> sparse_;
  PairCounts counts_;
  Letter last_ = 0;
  bool has_last_ = false;
};

PairCounts count_distinct_pairs(const Word& word);

}  // namespace pairwords
