#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairwords/core.hpp"
#include "pairwords/rational.hpp"

namespace pairwords {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(double required, std::uint64_t budget);
  double required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  double required_;
  std::uint64_t budget_;
};

// Tracked letters J plus the lump symbol e, which absorbs every other letter.
template <class T>
struct LumpedAlphabet {
  std::vector<Letter> tracked;
  std::vector<T> prob;  // aligned with tracked
  T lump;
};

LumpedAlphabet<double> lumped_alphabet(const GeomParams& params, std::vector<Letter> tracked);
// Exact version for rational p.
LumpedAlphabet<Rational> lumped_alphabet(const Rational& p, std::vector<Letter> tracked);

// Probability that a length-n word contains none of the given pairs, by
// depth-first enumeration over the lumped alphabet. Empty pair lists are allowed.
double avoid_prob_enum(const GeomParams& params, const std::vector<Pair>& pairs, int n,
                       std::uint64_t budget = kDefaultBudget);
Rational avoid_prob_enum_exact(const Rational& p, const std::vector<Pair>& pairs, int n);

// P(every hit pair occurs, no miss pair occurs), by inclusion-exclusion over hit subsets.
double joint_indicator_expectation(const GeomParams& params, const std::vector<Pair>& hit,
                                   const std::vector<Pair>& miss, int n,
                                   std::uint64_t budget = kDefaultBudget);
Rational joint_indicator_expectation_exact(const Rational& p, const std::vector<Pair>& hit,
                                           const std::vector<Pair>& miss, int n);

enum class Stat { X1, X2, X3 };
Stat parse_stat(const std::string& name);
std::string stat_name(Stat s);

struct TruncatedSum {
  double value = 0.0;
  double tail_bound = 0.0;  // certified bound on the discarded remainder
  Letter max_letter = 0;    // letters 1..max_letter were summed
};

// Sum over pairs of P(pair occurs), each by enumeration. The alphabet is cut where
// the union bound n * sum of discarded P_i P_j drops below tol.
TruncatedSum mean_total_enum(const GeomParams& params, int n, Stat which, double tol,
                             std::uint64_t budget = kDefaultBudget);

}  // namespace pairwords
