#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace pairwords {

// Dense polynomial in z, coefficient k multiplies z^k.
using Poly = std::vector<double>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, double s);
// Drops trailing coefficients with |c| <= eps * max|c|.
Poly poly_trim(Poly a, double eps = 0.0);
// Exact quotient a / b for b(0) != 0, computed as a power-series division.
Poly poly_exact_div(const Poly& a, const Poly& b);
double poly_eval(const Poly& a, double z);
std::complex<double> poly_eval(const Poly& a, std::complex<double> z);
std::size_t poly_degree(const Poly& a);

// Rational generating function num(z)/den(z) with den(0) = 1.
class RationalGF {
 public:
  RationalGF() : num_{1.0}, den_{1.0} {}
  RationalGF(Poly num, Poly den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  // [z^n] by the recurrence induced by the denominator; above the fast-path
  // threshold the recurrence is advanced by companion-matrix powers.
  double coefficient(std::size_t n) const;
  std::vector<double> coefficients(std::size_t count) const;
  double evaluate(double z) const;

  static constexpr std::size_t kFastPathThreshold = 10'000;

 private:
  double coefficient_by_power(std::size_t n) const;

  Poly num_;
  Poly den_;
};

}  // namespace pairwords
