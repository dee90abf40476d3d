#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pairwords/core.hpp"

namespace pairwords {

// A non-empty set of distinct ordered pairs together with its letter support J.
class PairSet {
 public:
  explicit PairSet(std::vector<Pair> pairs);
  PairSet(std::initializer_list<Pair> pairs) : PairSet(std::vector<Pair>(pairs)) {}

  const std::vector<Pair>& pairs() const { return pairs_; }
  // Support J in ascending order.
  const std::vector<Letter>& support() const { return support_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(Pair pr) const;
  // Position of a letter within J; throws if absent.
  std::size_t index_of(Letter letter) const;

 private:
  std::vector<Pair> pairs_;
  std::vector<Letter> support_;
};

// "(1,1),(2,3)" with arbitrary whitespace. Duplicates are rejected.
PairSet parse_pairs(std::string_view text);

// Pairs over named letters such as "(i,r),(r,t)". Letters are numbered 1,2,...
// in order of first appearance; names[k] is the name of letter k+1.
struct SymbolicPairs {
  PairSet pairs;
  std::vector<std::string> names;
};
SymbolicPairs parse_symbolic_pairs(std::string_view text);

std::string format_pairs(const std::vector<Pair>& pairs);

}  // namespace pairwords
