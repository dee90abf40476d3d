#pragma once

#include <string>
#include <vector>

#include "pairwords/core.hpp"
#include "pairwords/special.hpp"

namespace pairwords {

struct Constants {
  double L;       // ln(1/q)
  cplx chi;       // 2 pi i / L
  double gamma;   // Euler's constant
  double n2;      // n p^2 / q^2
  double alpha;   // q^2 / (1 - q^2)
  double i_star;  // ln(n2) / (2L)
};

Constants constants(const GeomParams& params, double n);

// A value split into its non-oscillating part and the Fourier series in ln x.
struct FourierValue {
  double smooth = 0.0;
  double periodic = 0.0;
  int terms = 0;                  // number of l > 0 harmonics kept (each with its -l twin)
  double truncation_bound = 0.0;  // estimate of the omitted harmonics
  double imag_residue = 0.0;      // imaginary part left after pairing l with -l
  double correction = 0.0;        // residue of the first pole right of the imaginary axis, if kept
  double value() const { return smooth + periodic + correction; }
};

inline constexpr double kFourierTol = 1e-15;

// sum_{i>=0} (1 - exp(-x q^{2i}))
FourierValue G_sum(double x, const GeomParams& params, double tol = kFourierTol);
// sum_{k>=0} (k+1)(1 - exp(-x q^k))
FourierValue Gt_sum(double x, const GeomParams& params, double tol = kFourierTol);
// sum_{i,j,k>=1} (exp(n P_i P_j P_k) - 1) exp(-n P_i P_j - n P_j P_k).
// Besides the Fourier part, keeps the O(1/n) term from the simple pole of F1 at s = 1.
FourierValue Ghat_sum(double n, const GeomParams& params, double tol = kFourierTol);

// sum_{i,k>=1} (q^i + q^k - p q^{i+k-1})^{-s} - (q^i + q^k)^{-s}, Re s < 1.
cplx F1(cplx s, const GeomParams& params, double tol = 1e-16);
// ln prod_{i,k} (q^i + q^k) / (q^i + q^k - p q^{i+k-1}).
double F1_prime_at_0(const GeomParams& params, double tol = 1e-17);

FourierValue S1(double n, const GeomParams& params, double tol = kFourierTol);
FourierValue S2(double n, const GeomParams& params, double tol = kFourierTol);
FourierValue T2(double n, const GeomParams& params, double tol = kFourierTol);

FourierValue var_x1(double n, const GeomParams& params);
FourierValue var_x2(double n, const GeomParams& params);
FourierValue var_x3(double n, const GeomParams& params);
FourierValue mean_x1(double n, const GeomParams& params);
FourierValue mean_x3(double n, const GeomParams& params);

// V_j = sum_{i>=1} (1 - exp(-n2 q^{2i}))^j, asymptotic form.
FourierValue Vj(double n, int j, const GeomParams& params, double tol = kFourierTol);
// Row m of the cumulant formula: coefficient of V_j is (-1)^{j+1} (j-1)! S(m,j).
std::vector<long long> cumulant_coefficients(int m);
FourierValue cumulant(double n, int m, const GeomParams& params);

struct CovarianceTerm {
  std::string label;   // "1", "2a", ..., "6b" or "identical letters"
  double main = 0.0;   // 0 where only an error bound is known
  double error_scale = 0.0;
  std::string error_form;
};

// Leading covariance term of X_a and X_b for distinct pairs a, b.
CovarianceTerm cov_main_term(Pair a, Pair b, double n, const GeomParams& params);

double poisson_pair_pmf(double n, Letter i, Letter j, long m, const GeomParams& params);

struct DensityWindow {
  int lower = 0;  // m: factors start at i = -m
  int upper = 0;  // M: factors end at i = M
  double upper_tail = 0.0;
  double lower_tail = 0.0;
};

// Tail bounds of the finite product for the window (m, M) over eta in [eta_lo, eta_hi].
DensityWindow density_window(const GeomParams& params, int m, int M, double eta_lo, double eta_hi);
// Smallest window with both tails below tol/2 at the given eta.
DensityWindow choose_density_window(const GeomParams& params, double eta, double tol);

// Limit law of X1 - i*: f(eta) = [z^{m+1}] prod_{i=-m}^{M} (1 + (z-1)(1 - exp(-q^{2i+2eta}))).
// Letter i* + eta + i carries Poisson rate q^{2i+2eta}.
double limit_density_f(const GeomParams& params, double eta, double tol = 1e-9);
double limit_cdf_F(const GeomParams& params, double eta, double tol = 1e-9);

double gaussian_density(double x, double mean, double var);
double gaussian_cdf(double x, double mean, double var);

}  // namespace pairwords
