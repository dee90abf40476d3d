#include "pairwords/multiseries.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace pairwords {

int MultiSeries::degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool MultiSeries::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiSeries::MultiSeries(std::size_t vars, int order) : vars_(vars), order_(order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
}

MultiSeries MultiSeries::constant(std::size_t vars, int order, const Rational& c) {
  MultiSeries s(vars, order);
  s.add_term(Exponents(vars, 0), c);
  return s;
}

MultiSeries MultiSeries::variable(std::size_t vars, int order, std::size_t index) {
  MultiSeries s(vars, order);
  Exponents e(vars, 0);
  e.at(index) = 1;
  s.add_term(e, 1);
  return s;
}

Rational MultiSeries::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiSeries::constant_term() const { return coefficient(Exponents(vars_, 0)); }

void MultiSeries::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_) throw std::invalid_argument("exponent length mismatch");
  if (degree(e) > order_ || c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
  MultiSeries out(*this);
  out.order_ = std::min(order_, o.order_);
  out += o;
  return out.homogeneous(-1);
}

MultiSeries MultiSeries::operator-(const MultiSeries& o) const { return *this + o * Rational(-1); }

MultiSeries MultiSeries::operator*(const Rational& s) const {
  MultiSeries out(vars_, order_);
  if (s == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
  return out;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
  MultiSeries out(vars_, std::min(order_, o.order_));
  Exponents e(vars_);
  for (const auto& [ea, ca] : terms_) {
    const int da = degree(ea);
    for (const auto& [eb, cb] : o.terms_) {
      if (da + degree(eb) > out.order_) break;  // o's terms come in increasing degree
      for (std::size_t k = 0; k < vars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiSeries MultiSeries::reciprocal() const {
  const Rational c0 = constant_term();
  if (c0 == 0) throw std::domain_error("reciprocal of a series without constant term");
  // 1/(c0 + r) = (1/c0) sum_k (-r/c0)^k; r has no constant term so order_ rounds suffice.
  MultiSeries r = *this;
  r.terms_.erase(Exponents(vars_, 0));
  const MultiSeries step = r * Rational(-1 / c0);
  MultiSeries power = constant(vars_, order_, 1);
  MultiSeries sum = power;
  for (int k = 1; k <= order_; ++k) {
    power = power * step;
    if (power.terms_.empty()) break;
    sum += power;
  }
  return sum * Rational(1 / c0);
}

MultiSeries MultiSeries::homogeneous(int d) const {
  if (d < 0) {
    MultiSeries out(vars_, order_);
    for (const auto& [e, c] : terms_)
      if (degree(e) <= order_) out.terms_.emplace(e, c);
    return out;
  }
  MultiSeries out(vars_, order_);
  for (const auto& [e, c] : terms_)
    if (degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

double MultiSeries::evaluate(const std::vector<double>& x) const {
  if (x.size() != vars_) throw std::invalid_argument("variable count mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = to_double(c);
    for (std::size_t k = 0; k < vars_; ++k)
      for (int j = 0; j < e[k]; ++j) m *= x[k];
    acc += m;
  }
  return acc;
}

std::string MultiSeries::to_string(const std::vector<std::string>& names) const {
  if (names.size() != vars_) throw std::invalid_argument("name count mismatch");
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t k = 0; k < vars_; ++k) {
      if (!e[k]) continue;
      if (!mono.empty()) mono += '*';
      mono += names[k];
      if (e[k] > 1) mono += '^' + std::to_string(e[k]);
    }
    if (mono.empty())
      out += pairwords::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += pairwords::to_string(mag) + '*' + mono;
  }
  return out;
}

MultiSeries parse_multiseries(const std::string& text, const std::vector<std::string>& names,
                              int order) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  MultiSeries out(names.size(), order);
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected integer in '" + text + "'");
    return BigInt(s.substr(start, pos - start));
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    Rational coef = 1;
    MultiSeries::Exponents e(names.size(), 0);
    bool first = true;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (!first) {
        if (s[pos] != '*') throw std::invalid_argument("expected '*' in '" + text + "'");
        ++pos;
      }
      first = false;
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        Rational v(read_int());
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          v /= Rational(read_int());
        }
        coef *= v;
        continue;
      }
      std::size_t best = names.size(), best_len = 0;
      for (std::size_t k = 0; k < names.size(); ++k)
        if (s.compare(pos, names[k].size(), names[k]) == 0 && names[k].size() > best_len) {
          best = k;
          best_len = names[k].size();
        }
      if (best == names.size()) throw std::invalid_argument("unknown variable in '" + text + "'");
      pos += best_len;
      int power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        power = static_cast<int>(read_int());
      }
      e[best] += static_cast<std::uint16_t>(power);
    }
    out.add_term(e, coef * sign);
  }
  return out;
}

}  // namespace pairwords
