#include "pairwords/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pairwords {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr int kMaxHarmonics = 2000;

// Adds sum over l != 0 of term(l) to v.periodic, pairing l with -l; stops once a
// pair contributes less than tol.
template <class Term>
void add_harmonics(FourierValue& v, Term term, double tol) {
  cplx acc = 0.0;
  for (int l = 1; l <= kMaxHarmonics; ++l) {
    const cplx a = term(l), b = term(-l);
    acc += a + b;
    v.terms = l;
    const double mag = std::abs(a) + std::abs(b);
    if (mag < tol) {
      v.truncation_bound = mag;
      break;
    }
  }
  v.periodic += acc.real();
  v.imag_residue = std::max(v.imag_residue, std::abs(acc.imag()));
}

// x^{-w} for real x > 0.
cplx xpow(double x, cplx w) { return std::exp(-w * std::log(x)); }

}  // namespace

Constants constants(const GeomParams& params, double n) {
  Constants c;
  c.L = -params.log_q();
  c.chi = cplx(0.0, 2.0 * kPi / c.L);
  c.gamma = kEulerGamma;
  c.n2 = n * params.p() * params.p() / (params.q() * params.q());
  c.alpha = params.q() * params.q() / (1.0 - params.q() * params.q());
  c.i_star = std::log(c.n2) / (2.0 * c.L);
  return c;
}

FourierValue G_sum(double x, const GeomParams& params, double tol) {
  if (!(x > 0)) throw std::domain_error("x must be positive");
  const double L = -params.log_q();
  const cplx chi(0.0, 2.0 * kPi / L);
  FourierValue v;
  v.smooth = std::log(x) / (2 * L) + kEulerGamma / (2 * L) + 0.5;
  add_harmonics(v, [&](int l) {
    const cplx w = double(l) * chi / 2.0;
    return -complex_gamma(w) * xpow(x, w) / (2 * L);
  }, tol);
  return v;
}

FourierValue Gt_sum(double x, const GeomParams& params, double tol) {
  if (!(x > 0)) throw std::domain_error("x must be positive");
  const double L = -params.log_q(), g = kEulerGamma, lx = std::log(x);
  const cplx chi(0.0, 2.0 * kPi / L);
  FourierValue v;
  v.smooth = lx * lx / (2 * L * L) + (g / (L * L) + 1 / L) * lx +
             (kPi * kPi + 6 * g * g) / (12 * L * L) + 5.0 / 12 + g / L;
  add_harmonics(v, [&](int l) {
    const cplx w = double(l) * chi;
    const cplx gam = complex_gamma(w);
    return (gam * digamma(w) - (lx + L) * gam) * xpow(x, w) / (L * L);
  }, tol);
  return v;
}

cplx F1(cplx s, const GeomParams& params, double tol) {
  if (s.real() >= 1.0) throw std::domain_error("F1 needs Re s < 1");
  if (s == cplx(0.0)) return 0.0;
  // Along the diagonals k = i + d the sum over i is geometric after expanding
  // (1 - c q^{i-1})^{-s} in powers of c = p q^d / (1 + q^d):
  //   sum_i (...) = (1+q^d)^{-s} q^{-s} sum_{m>=1} (s)_m/m! c^m / (1 - q^{m-s}).
  const double p = params.p(), q = params.q(), lq = params.log_q();
  const double sigma = s.real(), as = std::abs(s);
  const cplx q_ms = std::exp(-s * lq);
  cplx total = 0.0;
  for (int d = 0;; ++d) {
    const double qd = std::pow(q, d);
    const double c = p * qd / (1.0 + qd);
    cplx inner = 0.0, rising = 1.0;
    for (int m = 1; m < 10'000; ++m) {
      rising *= (s + double(m - 1)) / double(m);
      const cplx term = rising * std::pow(c, m) / (1.0 - std::exp((double(m) - s) * lq));
      inner += term;
      if (m > as && std::abs(term) < 1e-18 * std::max(1.0, std::abs(inner))) break;
    }
    const cplx contrib = (d == 0 ? 1.0 : 2.0) * std::exp(-s * std::log1p(qd)) * q_ms * inner;
    total += contrib;
    // Remaining diagonals: c_d <= p q^d, |inner| <= ((1-c)^{-|s|} - 1)/(1-q).
    const double qn = qd * q;
    const double rest = 2.0 * std::exp(-sigma * lq) * std::max(1.0, std::pow(2.0, -sigma)) * as * p * qn /
                        ((1 - q) * (1 - q) * std::pow(1.0 - p * qn, as + 1.0));
    if (rest < tol && d > 0) break;
    if (d > 1'000'000) break;
  }
  return total;
}

double F1_prime_at_0(const GeomParams& params, double tol) {
  // -sum_{i,k} ln(1 - p q^{i+k-1}/(q^i+q^k)) with the sum over i done per diagonal:
  // sum_i -ln(1 - c q^{i-1}) = sum_{m>=1} c^m / (m (1 - q^m)).
  const double p = params.p(), q = params.q();
  double total = 0.0;
  for (int d = 0;; ++d) {
    const double qd = std::pow(q, d);
    const double c = p * qd / (1.0 + qd);
    double inner = 0.0, cm = 1.0;
    for (int m = 1; m < 100'000; ++m) {
      cm *= c;
      const double term = cm / (m * -std::expm1(m * params.log_q()));
      inner += term;
      if (term < 1e-18 * inner) break;
    }
    total += (d == 0 ? 1.0 : 2.0) * inner;
    const double rest = 2.0 * p * qd * q / ((1 - q) * (1 - q) * (1 - p));
    if (rest < tol * std::max(1.0, total) && d > 0) break;
  }
  return total;
}

FourierValue Ghat_sum(double n, const GeomParams& params, double tol) {
  const double L = -params.log_q(), x = n * params.p() * params.p();
  const cplx chi(0.0, 2.0 * kPi / L);
  FourierValue v;
  v.smooth = F1_prime_at_0(params) / L;
  add_harmonics(v, [&](int l) {
    const cplx w = double(l) * chi;
    return complex_gamma(w) * F1(w, params) * xpow(x, w) / L;
  }, tol);
  // Only the m = 1 term of F1 is singular at s = 1.
  const double q = params.q();
  double diag = 0.0;
  for (int d = 0; d < 100'000; ++d) {
    const double qd = std::pow(q, d), t = (d == 0 ? 1.0 : 2.0) * qd / ((1 + qd) * (1 + qd));
    diag += t;
    if (t < 1e-18 * diag) break;
  }
  v.correction = -params.p() * q * diag / (L * (1 - q) * x);
  return v;
}

FourierValue S1(double n, const GeomParams& params, double tol) {
  const double L = -params.log_q(), x = n * params.p() * params.p();
  const cplx chi(0.0, 2.0 * kPi / L);
  FourierValue v;
  v.smooth = kLn2 / (2 * L);
  add_harmonics(v, [&](int l) {
    const cplx w = double(l) * chi / 2.0;
    return complex_gamma(w) * xpow(x, w) * (1.0 - xpow(2.0, w)) / (2 * L);
  }, tol);
  return v;
}

FourierValue S2(double n, const GeomParams& params, double tol) {
  const double L = -params.log_q(), x = n * params.p() * params.p(), lx = std::log(x);
  const cplx chi(0.0, 2.0 * kPi / L);
  FourierValue v;
  v.smooth = kLn2 / (L * L) * lx + kLn2 / (2 * L * L) * (2 * kEulerGamma + kLn2 + 2 * L);
  add_harmonics(v, [&](int l) {
    const cplx w = double(l) * chi;
    const cplx gx = complex_gamma(w) * xpow(x, w);
    const cplx two = xpow(2.0, w);
    return lx / (L * L) * gx * (1.0 - two) - gx * ((1.0 - two) * (digamma(w) - L) + two * kLn2) / (L * L);
  }, tol);
  return v;
}

FourierValue T2(double n, const GeomParams& params, double tol) {
  const double L = -params.log_q(), x = n * params.p() * params.p();
  const cplx chi(0.0, 2.0 * kPi / L);
  FourierValue v;
  v.smooth = 2.0 / L * F1_prime_at_0(params);
  add_harmonics(v, [&](int l) {
    const cplx w = double(l) * chi;
    return 2.0 / L * complex_gamma(w) * F1(w, params) * xpow(x, w);
  }, tol);
  return v;
}

namespace {

FourierValue combine(std::initializer_list<std::pair<double, FourierValue>> parts) {
  FourierValue out;
  for (const auto& [w, f] : parts) {
    out.smooth += w * f.smooth;
    out.periodic += w * f.periodic;
    out.terms = std::max(out.terms, f.terms);
    out.truncation_bound += std::abs(w) * f.truncation_bound;
    out.imag_residue += std::abs(w) * f.imag_residue;
  }
  return out;
}

}  // namespace

FourierValue var_x1(double n, const GeomParams& params) { return S1(n, params); }

FourierValue var_x2(double n, const GeomParams& params) {
  return combine({{1.0, S2(n, params)}, {1.0, T2(n, params)}});
}

FourierValue var_x3(double n, const GeomParams& params) {
  return combine({{1.0, S2(n, params)}, {-1.0, S1(n, params)}, {1.0, T2(n, params)}});
}

FourierValue mean_x1(double n, const GeomParams& params) {
  return G_sum(n * params.p() * params.p(), params);
}

FourierValue mean_x3(double n, const GeomParams& params) {
  const double L = -params.log_q(), g = kEulerGamma, x = n * params.p() * params.p(), lx = std::log(x);
  const cplx chi(0.0, 2.0 * kPi / L);
  FourierValue v;
  v.smooth = lx * lx / (2 * L * L) + (g / (L * L) + 1 / (2 * L)) * lx + (kPi * kPi + 6 * g * g) / (12 * L * L) +
             g / (2 * L) - 1.0 / 12;
  add_harmonics(v, [&](int l) {
    const cplx w = double(l) * chi, h = w / 2.0;
    const cplx gam = complex_gamma(w);
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    return (-lx * gam + gam * digamma(w)) * xpow(x, w) / (L * L) - sign * complex_gamma(h) * xpow(x, h) / (2 * L);
  }, kFourierTol);
  return v;
}

FourierValue Vj(double n, int j, const GeomParams& params, double tol) {
  if (j < 1) throw std::invalid_argument("j must be >= 1");
  const double L = -params.log_q(), x = n * params.p() * params.p();
  const cplx chi(0.0, 2.0 * kPi / L);
  std::vector<double> binom(j + 1, 1.0);
  for (int k = 1; k <= j; ++k) binom[k] = binom[k - 1] * (j - k + 1) / k;
  FourierValue v;
  v.smooth = std::log(x) / (2 * L) + kEulerGamma / (2 * L) + 0.5;
  for (int k = 2; k <= j; ++k) v.smooth += (k % 2 ? -1.0 : 1.0) * -binom[k] * std::log(double(k)) / (2 * L);
  add_harmonics(v, [&](int l) {
    const cplx h = double(l) * chi / 2.0;
    cplx mix = 0.0;
    for (int k = 1; k <= j; ++k) mix += (k % 2 ? -1.0 : 1.0) * binom[k] * xpow(double(k), h);
    return mix * complex_gamma(h) * xpow(x, h) / (2 * L);
  }, tol);
  return v;
}

std::vector<long long> cumulant_coefficients(int m) {
  if (m < 1 || m > 20) throw std::invalid_argument("cumulant order must lie in 1..20");
  // Stirling numbers of the second kind S(m, j).
  std::vector<std::vector<long long>> s(m + 1, std::vector<long long>(m + 1, 0));
  s[0][0] = 1;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= a; ++b) s[a][b] = b * s[a - 1][b] + s[a - 1][b - 1];
  std::vector<long long> row;
  long long fact = 1;  // (j-1)!
  for (int j = 1; j <= m; ++j) {
    if (j > 1) fact *= (j - 1);
    row.push_back((j % 2 ? 1 : -1) * fact * s[m][j]);
  }
  return row;
}

FourierValue cumulant(double n, int m, const GeomParams& params) {
  const auto row = cumulant_coefficients(m);
  FourierValue out;
  for (int j = 1; j <= m; ++j) {
    const FourierValue v = Vj(n, j, params);
    const double w = static_cast<double>(row[j - 1]);
    out.smooth += w * v.smooth;
    out.periodic += w * v.periodic;
    out.terms = std::max(out.terms, v.terms);
    out.truncation_bound += std::abs(w) * v.truncation_bound;
    out.imag_residue += std::abs(w) * v.imag_residue;
  }
  return out;
}

CovarianceTerm cov_main_term(Pair a, Pair b, double n, const GeomParams& params) {
  if (a == b) throw std::domain_error("covariance main term needs two distinct pairs");
  auto P = [&](Letter x) { return params.letter_prob(x); };
  const bool da = a.first == a.second, db = b.first == b.second;
  if (!da && db) std::swap(a, b);
  const auto [i, j] = a;
  const auto [k, l] = b;
  std::vector<Letter> letters{i, j, k, l};
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  double sum = 0.0;
  for (Letter x : letters) sum += P(x);
  const double delta = 1.0 - sum;
  CovarianceTerm t;
  auto decay = [&](double eps, double factor) { return std::exp(-factor * delta * n * eps); };
  if (da && db) {
    t.label = "identical letters";
    t.error_form = "O(e^{-n eps/2})";
    t.error_scale = std::exp(-0.5 * n * (P(i) * P(i) + P(k) * P(k)));
  } else if (da) {
    const Letter r = (k == i) ? l : k;
    if (k != i && l != i) {
      t.label = "3";
      const double eps = P(i) * P(i) + P(k) * P(l);
      t.error_form = "O(n P_i^2 P_r P_t + P_i P_r P_t) e^{-delta n eps/4}";
      t.error_scale = (n * P(i) * P(i) * P(k) * P(l) + P(i) * P(k) * P(l)) * decay(eps, 0.25);
    } else {
      t.label = k == i ? "6a" : "6b";
      const double eps = P(i) * P(i) + P(i) * P(r);
      t.error_form = "O(n P_i^2 P_r + P_i P_r) e^{-delta n eps/4}";
      t.error_scale = (n * P(i) * P(i) * P(r) + P(i) * P(r)) * decay(eps, 0.25);
    }
  } else if (k == j && l == i) {
    t.label = "5";
    const double w = P(i) * P(j);
    t.main = std::expm1(n * w * (P(i) + P(j))) * std::exp(-2.0 * n * w);
    t.error_form = "O(n P_i^2 P_r^2 + sqrt(n) P_i P_r) e^{-delta n P_i P_r/2}";
    t.error_scale = (n * w * w + std::sqrt(n) * w) * decay(w, 0.5);
  } else if (k == j || l == i) {
    // Chain x -> y -> z.
    const Letter x = (k == j) ? i : k, y = (k == j) ? j : i, z = (k == j) ? l : j;
    t.label = "1";
    const double e1 = P(x) * P(y), e2 = P(y) * P(z);
    t.main = std::expm1(n * P(x) * P(y) * P(z)) * std::exp(-n * (e1 + e2));
    t.error_form = "O(n P_i P_r^2 P_t + sqrt(n) P_i P_r P_t) e^{-delta n eps/4}";
    t.error_scale = (n * P(x) * P(y) * P(y) * P(z) + std::sqrt(n) * P(x) * P(y) * P(z)) * decay(e1 + e2, 0.25);
  } else if (k == i || l == j) {
    t.label = k == i ? "2a" : "2b";
    const Letter s = k == i ? i : j;   // shared letter
    const Letter r = k == i ? j : i, u = k == i ? l : k;
    const double eps = P(s) * P(r) + P(s) * P(u);
    t.error_form = "O(n P_i^2 P_r P_t + P_i P_r P_t) e^{-delta n eps/4}";
    t.error_scale = (n * P(s) * P(s) * P(r) * P(u) + P(s) * P(r) * P(u)) * decay(eps, 0.25);
  } else {
    t.label = "4";
    const double eps = P(i) * P(j) + P(k) * P(l);
    t.error_form = "O(n P_i P_j P_r P_t) e^{-delta n eps/4}";
    t.error_scale = n * P(i) * P(j) * P(k) * P(l) * decay(eps, 0.25);
  }
  return t;
}

double poisson_pair_pmf(double n, Letter i, Letter j, long m, const GeomParams& params) {
  if (m < 0) return 0.0;
  const double lam = n * params.letter_prob(i) * params.letter_prob(j);
  return std::exp(-lam + m * std::log(lam) - std::lgamma(m + 1.0));
}

DensityWindow density_window(const GeomParams& params, int m, int M, double eta_lo, double eta_hi) {
  const double q = params.q(), lq = params.log_q();
  DensityWindow w{m, M, 0.0, 0.0};
  // Rates q^{2i+2eta} are largest at eta_lo for the upper tail, smallest at eta_hi below.
  w.upper_tail = -std::expm1(-std::exp((2.0 * M + 2.0 + 2.0 * eta_lo) * lq) / (1.0 - q * q));
  for (int j = m + 1;; ++j) {
    const double t = std::exp(-std::exp((-2.0 * j + 2.0 * eta_hi) * lq));
    w.lower_tail += t;
    if (t < 1e-300 || t < 1e-17 * w.lower_tail) break;
  }
  return w;
}

DensityWindow choose_density_window(const GeomParams& params, double eta, double tol) {
  int M = 0, m = 0;
  while (density_window(params, 0, M, eta, eta).upper_tail >= tol / 2) ++M;
  while (density_window(params, m, 0, eta, eta).lower_tail >= tol / 2) ++m;
  return density_window(params, m, M, eta, eta);
}

double limit_density_f(const GeomParams& params, double eta, double tol) {
  if (!(tol >= 1e-12)) throw std::invalid_argument("tol must be at least 1e-12");
  const auto w = choose_density_window(params, eta, tol);
  const int target = w.lower + 1;
  std::vector<double> poly(target + 1, 0.0);
  poly[0] = 1.0;
  const double lq = params.log_q();
  for (int i = -w.lower; i <= w.upper; ++i) {
    const double hit = -std::expm1(-std::exp((2.0 * i + 2.0 * eta) * lq));
    for (int k = target; k >= 0; --k) poly[k] = poly[k] * (1.0 - hit) + (k ? poly[k - 1] * hit : 0.0);
  }
  return poly[target];
}

double limit_cdf_F(const GeomParams& params, double eta, double tol) {
  // Walk left from eta; stop only once past the bulk, which sits within a few 1/L of 0.
  const double bulk_edge = -1.0 - 1.0 / -params.log_q();
  double total = 0.0;
  for (int i = 0; i < 10'000; ++i) {
    const double f = limit_density_f(params, eta - i, tol);
    total += f;
    if (f < 1e-3 * tol && eta - i < bulk_edge) break;
  }
  return std::min(total, 1.0);
}

double gaussian_density(double x, double mean, double var) {
  return std::exp(-(x - mean) * (x - mean) / (2 * var)) / std::sqrt(2 * kPi * var);
}

double gaussian_cdf(double x, double mean, double var) {
  return 0.5 * std::erfc(-(x - mean) / std::sqrt(2 * var));
}

}  // namespace pairwords
