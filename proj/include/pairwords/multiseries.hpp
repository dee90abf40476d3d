#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pairwords/rational.hpp"

namespace pairwords {

// Truncated power series in variables x_0..x_{v-1} with exact rational
// coefficients; terms of total degree above the order are dropped.
class MultiSeries {
 public:
  using Exponents = std::vector<std::uint16_t>;

  // Graded lexicographic: lower total degree first, then larger leading exponents.
  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Rational, GradedLex>;

  MultiSeries(std::size_t vars, int order);
  static MultiSeries constant(std::size_t vars, int order, const Rational& c);
  static MultiSeries variable(std::size_t vars, int order, std::size_t index);

  std::size_t vars() const { return vars_; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }

  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;
  void add_term(const Exponents& e, const Rational& c);

  MultiSeries operator+(const MultiSeries& o) const;
  MultiSeries operator-(const MultiSeries& o) const;
  MultiSeries operator*(const MultiSeries& o) const;
  MultiSeries operator*(const Rational& s) const;
  MultiSeries& operator+=(const MultiSeries& o);
  // 1/this; the constant term must be nonzero.
  MultiSeries reciprocal() const;
  // Part of total degree exactly d.
  MultiSeries homogeneous(int d) const;

  double evaluate(const std::vector<double>& x) const;
  // E.g. "1 - Pi^2 + Pi^3 - 2*Pi^4" with names {"Pi"}.
  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const MultiSeries& o) const { return terms_ == o.terms_; }

 private:
  static int degree(const Exponents& e);
  std::size_t vars_;
  int order_;
  Terms terms_;
};

// Reads a polynomial such as "1 - 2*Pi*Pr + Pi^2*Pr" over the given variable names.
MultiSeries parse_multiseries(const std::string& text, const std::vector<std::string>& names,
                              int order);

}  // namespace pairwords
