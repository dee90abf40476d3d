#include "pairwords/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pairwords {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real();
}

// log sin(pi z), stable when |Im z| is large.
cplx log_sin_pi(cplx z) {
  const cplx i(0.0, 1.0);
  const cplx w = std::numbers::pi * z;
  if (w.imag() >= 0.0)  // sin w = e^{-iw} (e^{2iw} - 1) / (2i)
    return -i * w + std::log((std::exp(2.0 * i * w) - 1.0) / (2.0 * i));
  return i * w + std::log((1.0 - std::exp(-2.0 * i * w)) / (2.0 * i));
}

}  // namespace

cplx cot_pi(cplx z) {
  const cplx i(0.0, 1.0);
  if (z.imag() < 0.0) return std::conj(cot_pi(std::conj(z)));
  const cplx w = std::exp(2.0 * i * std::numbers::pi * z);  // |w| <= 1
  return i * (w + 1.0) / (w - 1.0);
}

cplx log_gamma(cplx s) {
  if (is_pole(s)) throw std::domain_error("gamma has a pole at nonpositive integers");
  if (s.real() < 0.5) return std::log(std::numbers::pi) - log_sin_pi(s) - log_gamma(1.0 - s);
  const cplx z = s - 1.0;
  cplx a = kLanczos[0];
  for (int k = 1; k < 9; ++k) a += kLanczos[k] / (z + static_cast<double>(k));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

cplx complex_gamma(cplx s) {
  return std::exp(log_gamma(s));
}

cplx digamma(cplx s) {
  if (is_pole(s)) throw std::domain_error("digamma has a pole at nonpositive integers");
  if (s.real() < 0.5) return digamma(1.0 - s) - std::numbers::pi * cot_pi(s);
  cplx shift = 0.0;
  while (std::abs(s) < 16.0) {
    shift -= 1.0 / s;
    s += 1.0;
  }
  // Asymptotic series with Bernoulli numbers B_2..B_14.
  static const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
  const cplx inv2 = 1.0 / (s * s);
  cplx pw = inv2, acc = std::log(s) - 0.5 / s;
  for (int k = 1; k <= 7; ++k) {
    acc -= b[k - 1] / (2.0 * k) * pw;
    pw *= inv2;
  }
  return acc + shift;
}

cplx gamma_derivative(cplx s) { return complex_gamma(s) * digamma(s); }

}  // namespace pairwords
