#include "pairwords/core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pairwords {

GeomParams::GeomParams(double p) : p_(p), q_(1.0 - p), log_q_(0.0) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("p must lie in (0,1)");
  log_q_ = std::log(q_);
}

double GeomParams::letter_prob(long i) const {
  if (i < 1) throw std::domain_error("letter index must be >= 1");
  return p_ * std::pow(q_, static_cast<double>(i - 1));
}

double GeomParams::tail(long m) const {
  if (m <= 0) return 1.0;
  return std::pow(q_, static_cast<double>(m));
}

double letter_prob(const GeomParams& params, long i) { return params.letter_prob(i); }

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ mix64(index ^ 0x5851f42d4c957f2dULL));
}

LetterSampler::LetterSampler(const GeomParams& params, Letter max_letter)
    : inv_log_q_(1.0 / params.log_q()),
      max_index_(static_cast<double>(max_letter - 1)),
      max_letter_(max_letter) {}

Word sample_word(const GeomParams& params, std::size_t n, Rng& rng, std::uint64_t* clamped) {
  LetterSampler draw(params);
  Word word(n);
  for (auto& letter : word) letter = draw(rng);
  if (clamped) *clamped += draw.clamped();
  return word;
}

PairStats pair_stats(const Word& word) {
  PairStats s;
  for (std::size_t k = 1; k < word.size(); ++k) {
    Pair pr{word[k - 1], word[k]};
    ++s.occurrence_counts[pr];
    s.distinct_pairs.insert(pr);
  }
  s.x2 = s.distinct_pairs.size();
  for (const auto& [a, b] : s.distinct_pairs)
    if (a == b) ++s.x1;
  s.x3 = s.x2 - s.x1;
  return s;
}

DistinctPairCounter::DistinctPairCounter() : bits_(kDense * kDense / 64, 0) {}

void DistinctPairCounter::reset() {
  std::fill(bits_.begin(), bits_.end(), 0);
  sparse_.clear();
  counts_ = {};
  has_last_ = false;
}

void DistinctPairCounter::record(Letter a, Letter b) {
  bool fresh;
  if (a < kDense && b < kDense) {
    const std::size_t idx = a * kDense + b;
    const std::uint64_t mask = std::uint64_t{1} << (idx & 63);
    fresh = (bits_[idx >> 6] & mask) == 0;
    bits_[idx >> 6] |= mask;
  } else {
    fresh = sparse_.insert((a << 16) | b).second;
  }
  if (!fresh) return;
  ++counts_.x2;
  if (a == b)
    ++counts_.x1;
  else
    ++counts_.x3;
}

void DistinctPairCounter::push(Letter letter) {
  if (has_last_) record(last_, letter);
  last_ = letter;
  has_last_ = true;
}

PairCounts count_distinct_pairs(const Word& word) {
  DistinctPairCounter c;
  for (Letter l : word) c.push(l);
  return c.counts();
}

}  // namespace pairwords
