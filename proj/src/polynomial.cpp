#include "pairwords/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace pairwords {

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_scale(b, -1.0)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_scale(const Poly& a, double s) {
  Poly out(a);
  for (auto& c : out) c *= s;
  return out;
}

Poly poly_trim(Poly a, double eps) {
  double top = 0.0;
  for (double c : a) top = std::max(top, std::abs(c));
  while (!a.empty() && std::abs(a.back()) <= eps * top) a.pop_back();
  return a;
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
  const Poly bt = poly_trim(b);
  const Poly at = poly_trim(a);
  if (bt.empty() || bt[0] == 0.0) throw std::domain_error("divisor needs a nonzero constant term");
  if (at.empty()) return {};
  if (at.size() < bt.size()) return {};  // only round-off can leave such a remainder
  const std::size_t len = at.size() - bt.size() + 1;
  Poly quot(len, 0.0);
  for (std::size_t k = 0; k < len; ++k) {
    double acc = at[k];
    for (std::size_t j = 1; j <= k && j < bt.size(); ++j) acc -= bt[j] * quot[k - j];
    quot[k] = acc / bt[0];
  }
  return quot;
}

double poly_eval(const Poly& a, double z) {
  double acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> poly_eval(const Poly& a, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::size_t poly_degree(const Poly& a) {
  const Poly t = poly_trim(a);
  return t.empty() ? 0 : t.size() - 1;
}

RationalGF::RationalGF(Poly num, Poly den) : num_(poly_trim(std::move(num))), den_(poly_trim(std::move(den))) {
  if (den_.empty() || den_[0] == 0.0) throw std::domain_error("denominator needs a nonzero constant term");
  const double c = den_[0];
  for (auto& x : num_) x /= c;
  for (auto& x : den_) x /= c;
  if (num_.empty()) num_ = {0.0};
}

std::vector<double> RationalGF::coefficients(std::size_t count) const {
  std::vector<double> a(count, 0.0);
  for (std::size_t n = 0; n < count; ++n) {
    double acc = n < num_.size() ? num_[n] : 0.0;
    const std::size_t top = std::min(n, den_.size() - 1);
    for (std::size_t k = 1; k <= top; ++k) acc -= den_[k] * a[n - k];
    a[n] = acc;
  }
  return a;
}

double RationalGF::coefficient(std::size_t n) const {
  if (n > kFastPathThreshold && den_.size() > 1) return coefficient_by_power(n);
  return coefficients(n + 1)[n];
}

double RationalGF::coefficient_by_power(std::size_t n) const {
  // Beyond index start the numerator no longer contributes and
  // a_m = -sum_k den_k a_{m-k} holds.
  const std::size_t d = den_.size() - 1;
  const std::size_t start = std::max(num_.size(), d);
  if (n < start + d) return coefficients(n + 1)[n];
  const auto head = coefficients(start + d);
  Eigen::VectorXd state(d);  // (a_{m-1}, ..., a_{m-d}) for m = start + d
  for (std::size_t k = 0; k < d; ++k) state[k] = head[start + d - 1 - k];
  Eigen::MatrixXd step = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t k = 0; k < d; ++k) step(0, k) = -den_[k + 1];
  for (std::size_t k = 1; k < d; ++k) step(k, k - 1) = 1.0;
  std::size_t e = n - (start + d) + 1;  // steps to bring a_n into state[0]
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(d, d);
  while (e) {
    if (e & 1) acc = step * acc;
    step = step * step;
    e >>= 1;
  }
  return (acc * state)[0];
}

double RationalGF::evaluate(double z) const { return poly_eval(num_, z) / poly_eval(den_, z); }

}  // namespace pairwords
