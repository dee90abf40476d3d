#pragma once

#include <complex>

namespace pairwords {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286061;

// Lanczos (g = 7, nine coefficients) with reflection for Re s < 1/2.
cplx log_gamma(cplx s);
cplx complex_gamma(cplx s);
cplx digamma(cplx s);
// Gamma'(s) = Gamma(s) digamma(s).
cplx gamma_derivative(cplx s);

// cot(pi z) without overflow for large |Im z|.
cplx cot_pi(cplx z);

}  // namespace pairwords
