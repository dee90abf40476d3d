#include "pairwords/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace pairwords {

BudgetExceeded::BudgetExceeded(double required, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(required) +
                         " states, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

namespace {

std::vector<Letter> support_of(const std::vector<Pair>& pairs) {
  std::vector<Letter> out;
  for (const auto& [a, b] : pairs) {
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class T>
class Walker {
 public:
  Walker(const LumpedAlphabet<T>& alphabet, const std::vector<Pair>& pairs, int n)
      : n_(n), k_(alphabet.tracked.size() + 1), forbid_(k_ * k_, 0) {
    probs_.push_back(alphabet.lump);
    for (const auto& pr : alphabet.prob) probs_.push_back(pr);
    auto sym = [&](Letter l) {
      auto it = std::lower_bound(alphabet.tracked.begin(), alphabet.tracked.end(), l);
      return static_cast<std::size_t>(it - alphabet.tracked.begin()) + 1;
    };
    for (const auto& [a, b] : pairs) forbid_[sym(a) * k_ + sym(b)] = 1;
  }

  T run() {
    total_ = T(0);
    if (n_ == 0) return T(1);
    for (std::size_t s = 0; s < k_; ++s) walk(1, s, probs_[s]);
    return total_;
  }

 private:
  void walk(int depth, std::size_t last, const T& prob) {
    if (depth == n_) {
      total_ += prob;
      return;
    }
    const char* row = &forbid_[last * k_];
    for (std::size_t s = 0; s < k_; ++s)
      if (!row[s]) walk(depth + 1, s, prob * probs_[s]);
  }

  int n_;
  std::size_t k_;
  std::vector<char> forbid_;
  std::vector<T> probs_;
  T total_{0};
};

void check_budget(std::size_t symbols, int n, std::uint64_t budget) {
  const double states = std::pow(static_cast<double>(symbols), n);
  if (states > static_cast<double>(budget)) throw BudgetExceeded(states, budget);
}

std::vector<Pair> merged(const std::vector<Pair>& a, const std::vector<Pair>& b) {
  std::vector<Pair> out(a);
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class T, class Avoid>
T inclusion_exclusion(const std::vector<Pair>& hit, const std::vector<Pair>& miss, Avoid avoid) {
  if (hit.size() > 20) throw std::invalid_argument("too many hit pairs");
  T total(0);
  for (std::uint32_t mask = 0; mask < (1u << hit.size()); ++mask) {
    std::vector<Pair> chosen;
    for (std::size_t k = 0; k < hit.size(); ++k)
      if (mask & (1u << k)) chosen.push_back(hit[k]);
    const T term = avoid(merged(miss, chosen));
    if (std::popcount(mask) % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

}  // namespace

LumpedAlphabet<double> lumped_alphabet(const GeomParams& params, std::vector<Letter> tracked) {
  LumpedAlphabet<double> a;
  std::sort(tracked.begin(), tracked.end());
  a.tracked = std::move(tracked);
  double sum = 0.0;
  for (Letter l : a.tracked) {
    a.prob.push_back(params.letter_prob(l));
    sum += a.prob.back();
  }
  a.lump = 1.0 - sum;
  return a;
}

LumpedAlphabet<Rational> lumped_alphabet(const Rational& p, std::vector<Letter> tracked) {
  if (p <= 0 || p >= 1) throw std::domain_error("p must lie in (0,1)");
  LumpedAlphabet<Rational> a;
  std::sort(tracked.begin(), tracked.end());
  a.tracked = std::move(tracked);
  const Rational q = 1 - p;
  Rational sum = 0;
  for (Letter l : a.tracked) {
    Rational pr = p;
    for (Letter k = 1; k < l; ++k) pr *= q;
    a.prob.push_back(pr);
    sum += pr;
  }
  a.lump = 1 - sum;
  return a;
}

double avoid_prob_enum(const GeomParams& params, const std::vector<Pair>& pairs, int n,
                       std::uint64_t budget) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const auto alphabet = lumped_alphabet(params, support_of(pairs));
  if (alphabet.lump <= 0.0) throw std::domain_error("lumped probability must be positive");
  check_budget(alphabet.tracked.size() + 1, n, budget);
  return Walker<double>(alphabet, pairs, n).run();
}

Rational avoid_prob_enum_exact(const Rational& p, const std::vector<Pair>& pairs, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const auto alphabet = lumped_alphabet(p, support_of(pairs));
  if (n > 10 || alphabet.tracked.size() > 3)
    throw BudgetExceeded(std::pow(double(alphabet.tracked.size() + 1), n), 1u << 20);
  return Walker<Rational>(alphabet, pairs, n).run();
}

double joint_indicator_expectation(const GeomParams& params, const std::vector<Pair>& hit,
                                   const std::vector<Pair>& miss, int n, std::uint64_t budget) {
  return inclusion_exclusion<double>(hit, miss, [&](const std::vector<Pair>& avoid) {
    return avoid_prob_enum(params, avoid, n, budget);
  });
}

Rational joint_indicator_expectation_exact(const Rational& p, const std::vector<Pair>& hit,
                                           const std::vector<Pair>& miss, int n) {
  return inclusion_exclusion<Rational>(hit, miss, [&](const std::vector<Pair>& avoid) {
    return avoid_prob_enum_exact(p, avoid, n);
  });
}

Stat parse_stat(const std::string& name) {
  if (name == "x1" || name == "X1") return Stat::X1;
  if (name == "x2" || name == "X2") return Stat::X2;
  if (name == "x3" || name == "X3") return Stat::X3;
  throw std::invalid_argument("unknown statistic '" + name + "'");
}

std::string stat_name(Stat s) {
  switch (s) {
    case Stat::X1: return "x1";
    case Stat::X2: return "x2";
    case Stat::X3: return "x3";
  }
  return "?";
}

TruncatedSum mean_total_enum(const GeomParams& params, int n, Stat which, double tol,
                             std::uint64_t budget) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  TruncatedSum out;
  if (n < 2) return out;
  const double q = params.q(), p = params.p();
  const bool diag = which != Stat::X3, off = which != Stat::X1;
  auto tail = [&](int m) {
    const double qm = std::pow(q, m);
    double t = 0.0;
    if (diag) t += n * p * p * qm * qm / (1 - q * q);
    if (off) t += n * (2 * qm - qm * qm);
    return t;
  };
  int m = 1;
  while (tail(m) >= tol) ++m;
  out.max_letter = static_cast<Letter>(m);
  out.tail_bound = tail(m);
  for (Letter i = 1; i <= out.max_letter; ++i)
    for (Letter j = 1; j <= out.max_letter; ++j) {
      if ((i == j && !diag) || (i != j && !off)) continue;
      out.value += 1.0 - avoid_prob_enum(params, {{i, j}}, n, budget);
    }
  return out;
}

}  // namespace pairwords
