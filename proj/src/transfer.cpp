#include "pairwords/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace pairwords {

LetterWeights letter_weights(const GeomParams& params, const PairSet& pairs) {
  LetterWeights w;
  double sum = 0.0;
  for (Letter l : pairs.support()) {
    w.tracked.push_back(params.letter_prob(l));
    sum += w.tracked.back();
  }
  w.lump = 1.0 - sum;
  return w;
}

LetterWeights scaled_weights(const LetterWeights& w, double v) {
  LetterWeights out;
  double sum = 0.0;
  for (double x : w.tracked) {
    out.tracked.push_back(v * x);
    sum += v * x;
  }
  out.lump = 1.0 - sum;
  return out;
}

TransferMatrix build_transfer(const LetterWeights& w, const PairSet& pairs) {
  if (!(w.lump > 0.0)) throw std::domain_error("lumped probability must be positive");
  const auto& J = pairs.support();
  const std::size_t d = J.size() + 1;
  TransferMatrix t{J, Eigen::MatrixXd(d, d)};
  for (std::size_t k = 0; k < d; ++k) {
    t.matrix(k, 0) = w.lump;
    for (std::size_t m = 1; m < d; ++m) {
      const bool forbidden = k > 0 && pairs.contains({J[k - 1], J[m - 1]});
      t.matrix(k, m) = forbidden ? 0.0 : w.tracked[m - 1];
    }
  }
  return t;
}

TransferMatrix build_transfer(const GeomParams& params, const PairSet& pairs) {
  return build_transfer(letter_weights(params, pairs), pairs);
}

Eigen::MatrixXd cluster_matrix(const LetterWeights& w, const PairSet& pairs) {
  const std::size_t d = pairs.support().size();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (const auto& [a, b] : pairs.pairs()) c(pairs.index_of(a), pairs.index_of(b)) = w.tracked[pairs.index_of(b)];
  return c;
}

double avoid_prob_matrix(const LetterWeights& w, const PairSet& pairs, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const auto t = build_transfer(w, pairs);
  Eigen::RowVectorXd x = Eigen::RowVectorXd::Zero(t.matrix.rows());
  x[0] = 1.0;
  for (int k = 0; k < n; ++k) x = x * t.matrix;
  return x.sum();
}

double avoid_prob_matrix(const GeomParams& params, const PairSet& pairs, int n) {
  return avoid_prob_matrix(letter_weights(params, pairs), pairs, n);
}

EigenResult dominant_eigen(const LetterWeights& w, const PairSet& pairs) {
  const auto t = build_transfer(w, pairs);
  const Eigen::MatrixXd& m = t.matrix;
  const auto d = m.rows();
  const double tol = std::max(kPowerIterationTol, 8.0 * d * std::numeric_limits<double>::epsilon());
  Eigen::VectorXd v = Eigen::VectorXd::Ones(d);
  Eigen::RowVectorXd u = Eigen::RowVectorXd::Ones(d);
  EigenResult r;
  double prev_res = std::numeric_limits<double>::infinity(), ratio = 0.0;
  for (int it = 1; it <= kPowerIterationCap; ++it) {
    Eigen::VectorXd mv = m * v;
    Eigen::RowVectorXd um = u * m;
    const double lam = u.dot(mv) / u.dot(v);
    const double res = std::max((mv - lam * v).lpNorm<Eigen::Infinity>() / v.lpNorm<Eigen::Infinity>(),
                                (um - lam * u).lpNorm<Eigen::Infinity>() / u.lpNorm<Eigen::Infinity>());
    r.iterations = it;
    r.residual = res / lam;
    r.lambda = lam;
    if (res <= tol * lam) break;
    if (it == kPowerIterationCap)
      throw std::runtime_error("power iteration did not converge; estimated |lambda2/lambda1| = " +
                               std::to_string(ratio));
    if (prev_res < std::numeric_limits<double>::infinity()) ratio = res / prev_res;
    prev_res = res;
    v = mv / mv.lpNorm<Eigen::Infinity>();
    u = um / um.lpNorm<Eigen::Infinity>();
  }
  const double pe = w.lump;
  u /= u[0];
  v *= (1.0 / pe) / v[0];
  double beta_sum = 0.0, beta_mu = 0.0;
  for (Eigen::Index k = 1; k < d; ++k) {
    r.beta.push_back(u[k]);
    r.mu.push_back(v[k]);
    beta_sum += u[k];
    beta_mu += u[k] * v[k];
  }
  r.c1 = (1.0 + beta_sum) / (1.0 + pe * beta_mu);
  return r;
}

EigenResult dominant_eigen(const GeomParams& params, const PairSet& pairs) {
  return dominant_eigen(letter_weights(params, pairs), pairs);
}

double subdominant_eigenvalue(const GeomParams& params, const PairSet& pairs) {
  const auto t = build_transfer(params, pairs);
  Eigen::EigenSolver<Eigen::MatrixXd> es(t.matrix, false);
  std::vector<double> mods;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) mods.push_back(std::abs(es.eigenvalues()[k]));
  std::sort(mods.rbegin(), mods.rend());
  return mods.size() > 1 ? mods[1] : 0.0;
}

double phi_n(const GeomParams& params, const PairSet& pairs, int n) {
  const auto e = dominant_eigen(params, pairs);
  return avoid_prob_matrix(params, pairs, n) / (e.c1 * std::pow(e.lambda, n));
}

IdenticalPairsEigen identical_pairs_eigen(const GeomParams& params, const std::vector<Letter>& letters,
                                          double tol) {
  std::vector<Letter> ls(letters);
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  if (ls.empty()) return {};
  std::vector<double> pr;
  IdenticalPairsEigen out;
  for (Letter l : ls) {
    pr.push_back(params.letter_prob(l));
    out.epsilon += pr.back() * pr.back();
  }
  if (out.epsilon > 0.25) {
    std::vector<Pair> pairs;
    for (Letter l : ls) pairs.emplace_back(l, l);
    const auto e = dominant_eigen(params, PairSet(pairs));
    out.lambda = e.lambda;
    out.c1 = e.c1;
    out.fallback = true;
    out.notice = "sum of squared letter probabilities exceeds 1/4; used the matrix route";
    return out;
  }
  auto f = [&](double lam) {
    double s = lam - 1.0, ds = 1.0;
    for (double x : pr) {
      s += x * x / (lam + x);
      ds -= x * x / ((lam + x) * (lam + x));
    }
    return std::pair{s, ds};
  };
  double lo = 0.0, hi = 1.0;
  if (out.epsilon <= 1.0 / 9.0) {
    lo = 1.0 - 1.5 * out.epsilon;
    hi = 1.0 - 0.75 * out.epsilon;
    if (f(lo).first > 0.0 || f(hi).first < 0.0) lo = 0.0, hi = 1.0;
  }
  double lam = 0.5 * (lo + hi);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const auto [val, der] = f(lam);
    if (val == 0.0) break;
    (val < 0.0 ? lo : hi) = lam;
    double next = der > 0.0 ? lam - val / der : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - lam) <= tol * 0.25) {
      lam = next;
      break;
    }
    lam = next;
  }
  out.lambda = lam;
  out.c1 = 1.0 / f(lam).second;
  return out;
}

Algorithm1Result algorithm1_series(const PairSet& pairs, int order) {
  const auto& J = pairs.support();
  const std::size_t d = J.size();
  const MultiSeries one = MultiSeries::constant(d, order, 1);
  const MultiSeries zero(d, order);
  std::vector<MultiSeries> var;
  MultiSeries pe = one;
  for (std::size_t k = 0; k < d; ++k) {
    var.push_back(MultiSeries::variable(d, order, k));
    pe = pe - var.back();
  }
  auto entry = [&](std::size_t k, std::size_t m) -> const MultiSeries& {
    return pairs.contains({J[k], J[m]}) ? zero : var[m];
  };
  MultiSeries lambda = one;
  std::vector<MultiSeries> beta(d, zero), mu(d, one);
  for (int it = 0; it < order; ++it) {
    const MultiSeries inv = lambda.reciprocal();
    std::vector<MultiSeries> nb(d, zero);
    for (std::size_t m = 0; m < d; ++m) {
      MultiSeries acc = var[m];
      for (std::size_t k = 0; k < d; ++k) acc += beta[k] * entry(k, m);
      nb[m] = inv * acc;
    }
    beta = std::move(nb);
    MultiSeries bsum = one;
    for (const auto& b : beta) bsum += b;
    lambda = pe * bsum;
    const MultiSeries inv2 = lambda.reciprocal();
    std::vector<MultiSeries> nm(d, zero);
    for (std::size_t k = 0; k < d; ++k) {
      MultiSeries acc = one;
      for (std::size_t m = 0; m < d; ++m) acc += entry(k, m) * mu[m];
      nm[k] = inv2 * acc;
    }
    mu = std::move(nm);
  }
  MultiSeries bsum = one, bmu = zero;
  for (std::size_t k = 0; k < d; ++k) {
    bsum += beta[k];
    bmu += beta[k] * mu[k];
  }
  MultiSeries c1 = bsum * (one + pe * bmu).reciprocal();
  return {lambda, beta, mu, c1};
}

std::vector<double> psi_values(const LetterWeights& w, const PairSet& pairs, int count) {
  std::vector<double> out;
  if (count <= 0) return out;
  const Eigen::MatrixXd c = cluster_matrix(w, pairs);
  Eigen::RowVectorXd row = Eigen::Map<const Eigen::RowVectorXd>(w.tracked.data(), w.tracked.size());
  out.push_back(row.sum());
  for (int k = 1; k < count; ++k) {
    row = row * c;
    out.push_back(row.sum());
  }
  return out;
}

double psi(const GeomParams& params, const PairSet& pairs, int k) {
  if (k < 1) throw std::invalid_argument("psi index must be >= 1");
  return psi_values(letter_weights(params, pairs), pairs, k).back();
}

PsiFunction psi_function(const LetterWeights& w, const PairSet& pairs) {
  const Eigen::MatrixXd c = cluster_matrix(w, pairs);
  const std::size_t d = c.rows();
  // Augmented system [I + zC | 1], reduced by fraction-free (Bareiss) elimination.
  // Every leading principal minor of I + zC is 1 at z = 0, so pivots never vanish.
  std::vector<std::vector<Poly>> a(d, std::vector<Poly>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = {i == j ? 1.0 : 0.0, c(i, j)};
    a[i][d] = {1.0};
  }
  Poly prev{1.0};
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j <= d; ++j)
        a[i][j] = poly_exact_div(poly_sub(poly_mul(a[k][k], a[i][j]), poly_mul(a[i][k], a[k][j])), prev);
      a[i][k] = {};
    }
    prev = a[k][k];
  }
  const Poly det = d ? a[d - 1][d - 1] : Poly{1.0};
  // y = adj(I + zC) 1 by fraction-free back substitution.
  std::vector<Poly> y(d);
  for (std::size_t ii = d; ii-- > 0;) {
    Poly acc = poly_mul(det, a[ii][d]);
    for (std::size_t j = ii + 1; j < d; ++j) acc = poly_sub(acc, poly_mul(a[ii][j], y[j]));
    y[ii] = poly_exact_div(acc, a[ii][ii]);
  }
  Poly num;
  for (std::size_t k = 0; k < d; ++k) num = poly_add(num, poly_scale(y[k], w.tracked[k]));
  num.insert(num.begin(), 0.0);  // times z
  return {poly_trim(num), poly_trim(det)};
}

RationalGF avoidance_gf(const LetterWeights& w, const PairSet& pairs) {
  if (!(w.lump > 0.0)) throw std::domain_error("lumped probability must be positive");
  const PsiFunction f = psi_function(w, pairs);
  // 1/(1 - P_e z - N/D) = D / (D - P_e z D - N)
  Poly zd = f.denominator;
  zd.insert(zd.begin(), 0.0);
  const Poly den = poly_sub(poly_sub(f.denominator, poly_scale(zd, w.lump)), f.numerator);
  return RationalGF(f.denominator, den);
}

RationalGF avoidance_gf(const GeomParams& params, const PairSet& pairs) {
  return avoidance_gf(letter_weights(params, pairs), pairs);
}

double lambda_of_v_eigen(const GeomParams& params, const PairSet& pairs, double v) {
  return dominant_eigen(scaled_weights(letter_weights(params, pairs), v), pairs).lambda;
}

double lambda_of_v(const GeomParams& params, const PairSet& pairs, double v) {
  if (v < 0.0 || v > 1.0) throw std::domain_error("v must lie in [0,1]");
  const LetterWeights w = letter_weights(params, pairs);
  const PsiFunction f = psi_function(w, pairs);
  const double psi1 = std::accumulate(w.tracked.begin(), w.tracked.end(), 0.0);
  double lam = 1.0;
  for (int it = 0; it < 10'000; ++it) {
    const double z = v / lam;
    const double den = poly_eval(f.denominator, z);
    if (!(den > 0.0)) break;
    const double denom = 1.0 - poly_eval(f.numerator, z) / den;
    if (!(denom > 0.0)) break;
    const double next = (1.0 - v * psi1) / denom;
    if (std::abs(next - lam) <= 4 * std::numeric_limits<double>::epsilon() * next) return next;
    lam = next;
  }
  return lambda_of_v_eigen(params, pairs, v);
}

double C_of_v(const GeomParams& params, const PairSet& pairs, double v) {
  if (v < 0.0 || v > 1.0) throw std::domain_error("v must lie in [0,1]");
  return dominant_eigen(scaled_weights(letter_weights(params, pairs), v), pairs).c1;
}

}  // namespace pairwords
