#include "pairwords/pairset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace pairwords {

PairSet::PairSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("pair set must be non-empty");
  std::sort(pairs_.begin(), pairs_.end());
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end())
    throw std::invalid_argument("duplicate pair in pair set");
  for (const auto& [a, b] : pairs_) {
    if (a < 1 || b < 1) throw std::invalid_argument("letters must be >= 1");
    support_.push_back(a);
    support_.push_back(b);
  }
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

bool PairSet::contains(Pair pr) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), pr);
}

std::size_t PairSet::index_of(Letter letter) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), letter);
  if (it == support_.end() || *it != letter) throw std::out_of_range("letter not in support");
  return static_cast<std::size_t>(it - support_.begin());
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Splits "(a,b),(c,d)" into token pairs; throws on malformed input.
std::vector<std::pair<std::string, std::string>> split_pairs(std::string_view text) {
  const std::string s = strip_spaces(text);
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (!out.empty()) {
      if (s[pos] != ',') throw std::invalid_argument("expected ',' between pairs");
      ++pos;
    }
    if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("expected '('");
    const auto comma = s.find(',', pos);
    const auto close = s.find(')', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw std::invalid_argument("malformed pair");
    out.emplace_back(s.substr(pos + 1, comma - pos - 1), s.substr(comma + 1, close - comma - 1));
    if (out.back().first.empty() || out.back().second.empty())
      throw std::invalid_argument("empty pair coordinate");
    pos = close + 1;
  }
  if (out.empty()) throw std::invalid_argument("no pairs given");
  return out;
}

Letter parse_letter(const std::string& tok) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1 ||
      v > static_cast<long>(kMaxLetter))
    throw std::invalid_argument("bad letter '" + tok + "'");
  return static_cast<Letter>(v);
}

void reject_duplicates(std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw std::invalid_argument("duplicate pair");
}

}  // namespace

PairSet parse_pairs(std::string_view text) {
  std::vector<Pair> pairs;
  for (const auto& [a, b] : split_pairs(text)) pairs.emplace_back(parse_letter(a), parse_letter(b));
  reject_duplicates(pairs);
  return PairSet(std::move(pairs));
}

SymbolicPairs parse_symbolic_pairs(std::string_view text) {
  std::vector<std::string> names;
  auto id = [&](const std::string& name) -> Letter {
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw std::invalid_argument("bad letter name '" + name + "'");
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return static_cast<Letter>(it - names.begin() + 1);
    names.push_back(name);
    return static_cast<Letter>(names.size());
  };
  std::vector<Pair> pairs;
  for (const auto& [a, b] : split_pairs(text)) {
    const Letter x = id(a);
    pairs.emplace_back(x, id(b));
  }
  reject_duplicates(pairs);
  return {PairSet(std::move(pairs)), std::move(names)};
}

std::string format_pairs(const std::vector<Pair>& pairs) {
  std::string out;
  for (const auto& [a, b] : pairs) {
    if (!out.empty()) out += ',';
    out += '(' + std::to_string(a) + ',' + std::to_string(b) + ')';
  }
  return out;
}

}  // namespace pairwords
