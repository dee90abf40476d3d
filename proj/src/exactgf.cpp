#include "pairwords/exactgf.hpp"
#include "pairwords/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "pairwords/parallel.hpp"

namespace pairwords {

std::string case_name(GFCase c) {
  static const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
  return names[static_cast<int>(c)];
}

namespace {

ClusterGF cubic_case(GFCase label, std::vector<Letter> letters, Poly num, double a, double b,
                     double c, double d) {
  ClusterGF g{label, std::move(letters), RationalGF(std::move(num), {d, c, b, a}), {a, b, c, d}, true};
  return g;
}

}  // namespace

ClusterGF gf_case_A(const GeomParams& params, Letter i, Letter j) {
  const double w = params.letter_prob(i) * params.letter_prob(j);
  return {GFCase::A, {i, j}, RationalGF({1.0}, {1.0, -1.0, w}), {}, false};
}

ClusterGF gf_case_B(const GeomParams& params, Letter i) {
  const double pi = params.letter_prob(i);
  return {GFCase::B, {i}, RationalGF({1.0, pi}, {1.0, -(1.0 - pi), -pi * (1.0 - pi)}), {}, false};
}

ClusterGF gf_single(const GeomParams& params, Letter i, Letter j) {
  return i == j ? gf_case_B(params, i) : gf_case_A(params, i, j);
}

ClusterGF gf_case_C(const GeomParams&, double w1, double w2, std::vector<Letter> letters) {
  return {GFCase::C, std::move(letters), RationalGF({1.0}, {1.0, -1.0, w1 + w2}), {}, false};
}

ClusterGF gf_case_D(const GeomParams& params, Letter i, Letter l) {
  const double pi = params.letter_prob(i), pl = params.letter_prob(l);
  return {GFCase::D, {i, l}, RationalGF({1.0, pi}, {1.0, -(1.0 - pi), pi * pi + pl * pi - pi}), {}, false};
}

ClusterGF gf_case_E(const GeomParams& params, Letter i, Letter k) {
  const double pi = params.letter_prob(i), pk = params.letter_prob(k);
  return cubic_case(GFCase::E, {i, k}, poly_mul({1.0, pi}, {1.0, pk}), pi * pk * (pi + pk - 1.0),
                    pi * pi + pi * pk + pk * pk - pi - pk, pi + pk - 1.0, 1.0);
}

ClusterGF gf_case_F(const GeomParams& params, Letter i, Letter k, Letter l) {
  const double pi = params.letter_prob(i), pk = params.letter_prob(k), pl = params.letter_prob(l);
  return cubic_case(GFCase::F, {i, k, l}, {1.0, pi}, pi * pk * pl, pi * pi + pk * pl - pi, pi - 1.0, 1.0);
}

ClusterGF gf_case_G(const GeomParams& params, Letter i, Letter j, Letter l) {
  const double pi = params.letter_prob(i), pj = params.letter_prob(j), pl = params.letter_prob(l);
  return cubic_case(GFCase::G, {i, j, l}, {1.0}, -pi * pj * pl, pi * pj + pj * pl, -1.0, 1.0);
}

ClusterGF gf_case_H(const GeomParams& params, Letter i, Letter j) {
  const double w = params.letter_prob(i) * params.letter_prob(j);
  const double pi = params.letter_prob(i), pj = params.letter_prob(j);
  return cubic_case(GFCase::H, {i, j}, {1.0, 0.0, -w}, w * (1.0 - pi - pj), w, -1.0, 1.0);
}

double prob_pair_occurs(const GeomParams& params, Letter i, Letter j, long n) {
  if (n < 2) return 0.0;
  return 1.0 - gf_single(params, i, j).gf.coefficient(static_cast<std::size_t>(n));
}

double prob_pair_occurs_closed(const GeomParams& params, Letter i, Letter j, long n) {
  if (n < 2) return 0.0;
  const double m = static_cast<double>(n);
  if (i != j) {
    // Roots (1 +- s)/2 of x^2 - x + P_i P_j.
    const double w = params.letter_prob(i) * params.letter_prob(j);
    const double s = std::sqrt(1.0 - 4.0 * w);
    return 1.0 - (std::pow((1.0 + s) / 2.0, m + 1) - std::pow((1.0 - s) / 2.0, m + 1)) / s;
  }
  const double pi = params.letter_prob(i);
  const double root = std::sqrt((1.0 - pi) * (1.0 + 3.0 * pi));
  const double a = 0.5 - (1.0 + pi) / (2.0 * root), b = 0.5 + (1.0 + pi) / (2.0 * root);
  const double r1 = -2.0 * pi * (1.0 - pi) / (1.0 - pi + root);
  const double r2 = -2.0 * pi * (1.0 - pi) / (1.0 - pi - root);
  return 1.0 - a * std::pow(r1, m) - b * std::pow(r2, m);
}

JointRegime joint_regime(const GeomParams& params, Pair a, Pair b) {
  JointRegime r;
  r.marginal1 = gf_single(params, a.first, a.second);
  r.marginal2 = gf_single(params, b.first, b.second);
  if (a == b) {
    r.regime = "same pair";
    r.same_pair = true;
    r.joint = r.marginal1;
    return r;
  }
  const bool da = a.first == a.second, db = b.first == b.second;
  if (!da && db) {
    auto swapped = joint_regime(params, b, a);
    std::swap(swapped.marginal1, swapped.marginal2);
    return swapped;
  }
  const auto [i, j] = a;
  const auto [k, l] = b;
  auto P = [&](Letter x) { return params.letter_prob(x); };
  if (da && db) {
    r.regime = "i=j, k=l, i!=k";
    r.joint = gf_case_E(params, i, k);
  } else if (da) {
    if (k != i && l != i) {
      r.regime = "i=j, k!=l distinct from i";
      r.joint = gf_case_F(params, i, k, l);
    } else if (k == i) {
      r.regime = "i=j=k!=l";
      r.joint = gf_case_D(params, i, l);
    } else {
      r.regime = "i=j=l!=k";
      r.joint = gf_case_D(params, i, k);
    }
  } else if (k == j && l == i) {
    r.regime = "i=l, j=k";
    r.joint = gf_case_H(params, i, j);
  } else if (k == j) {
    r.regime = "k=j";
    r.joint = gf_case_G(params, i, j, l);
  } else if (l == i) {
    r.regime = "i=l";
    r.joint = gf_case_G(params, k, i, j);
  } else if (k == i) {
    r.regime = "k=i";
    r.joint = gf_case_C(params, P(i) * P(j), P(i) * P(l), {i, j, l});
  } else if (l == j) {
    r.regime = "l=j";
    r.joint = gf_case_C(params, P(i) * P(j), P(k) * P(j), {i, j, k});
  } else {
    r.regime = "four distinct";
    r.joint = gf_case_C(params, P(i) * P(j), P(k) * P(l), {i, j, k, l});
  }
  return r;
}

double joint_prob(const GeomParams& params, Pair a, Pair b, long n) {
  if (n < 2) return 0.0;
  const auto r = joint_regime(params, a, b);
  const auto m = static_cast<std::size_t>(n);
  if (r.same_pair) return 1.0 - r.marginal1.gf.coefficient(m);
  return 1.0 - r.marginal1.gf.coefficient(m) - r.marginal2.gf.coefficient(m) + r.joint.gf.coefficient(m);
}

double joint_prob_partial_fractions(const GeomParams& params, Pair a, Pair b, long n) {
  if (n < 2) return 0.0;
  const auto r = joint_regime(params, a, b);
  auto pf = [&](const ClusterGF& g) {
    return partial_fraction_coefficient(g.gf.numerator(), g.gf.denominator(), n);
  };
  if (r.same_pair) return 1.0 - pf(r.marginal1);
  return 1.0 - pf(r.marginal1) - pf(r.marginal2) + pf(r.joint);
}

CubicRoots cubic_roots(double a, double b, double c, double d) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (scale == 0.0) throw std::domain_error("zero polynomial has no roots");
  const Poly poly{d, c, b, a};
  const Poly dpoly{c, 2 * b, 3 * a};
  CubicRoots out;
  using C = std::complex<double>;
  const double small = 1e-15 * scale;
  if (std::abs(a) > small) {
    Eigen::Matrix3d comp = Eigen::Matrix3d::Zero();
    comp(0, 0) = -b / a;
    comp(0, 1) = -c / a;
    comp(0, 2) = -d / a;
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    Eigen::EigenSolver<Eigen::Matrix3d> es(comp, false);
    for (int k = 0; k < 3; ++k) out.roots.push_back(es.eigenvalues()[k]);
  } else if (std::abs(b) > small) {
    const C disc = std::sqrt(C(c * c - 4 * b * d));
    const C q = -0.5 * (c + (c >= 0 ? disc : -disc));
    if (std::abs(q) > 0) out.roots = {q / b, d / q};
    else out.roots = {0.0, 0.0};
  } else if (std::abs(c) > small) {
    out.roots = {C(-d / c)};
  } else {
    throw std::domain_error("constant polynomial has no roots");
  }
  for (auto& r : out.roots) {
    for (int it = 0; it < 50; ++it) {
      const C f = poly_eval(poly, r), df = poly_eval(dpoly, r);
      if (std::abs(df) == 0.0) break;
      const C step = f / df;
      r -= step;
      if (std::abs(step) <= 1e-16 * std::abs(r)) break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](C x, C y) { return std::abs(x) < std::abs(y); });
  for (std::size_t x = 0; x < out.roots.size(); ++x)
    for (std::size_t y = x + 1; y < out.roots.size(); ++y) {
      const double gap = std::abs(out.roots[x] - out.roots[y]);
      if (gap < 1e-6 * std::max(std::abs(out.roots[x]), std::abs(out.roots[y]))) out.near_coincident = true;
    }
  return out;
}

double partial_fraction_coefficient(const Poly& num, const Poly& den, long n) {
  const Poly d = poly_trim(den);
  if (d.size() < 2) throw std::domain_error("denominator must have positive degree");
  if (poly_trim(num).size() >= d.size()) throw std::domain_error("numerator degree too high");
  Poly padded(4, 0.0);
  std::copy(d.begin(), d.end(), padded.begin());
  const auto roots = cubic_roots(padded[3], padded[2], padded[1], padded[0]);
  if (roots.near_coincident) return std::numeric_limits<double>::quiet_NaN();
  Poly dd;
  for (std::size_t k = 1; k < d.size(); ++k) dd.push_back(k * d[k]);
  std::complex<double> acc = 0.0;
  for (const auto& r : roots.roots)
    acc -= poly_eval(num, r) / (poly_eval(dd, r) * std::pow(r, static_cast<double>(n + 1)));
  return acc.real();
}

MeanTotal mean_total(const GeomParams& params, long n, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  MeanTotal out;
  if (n < 2) return out;
  const double p = params.p(), q = params.q(), nn = static_cast<double>(n);
  const auto m = static_cast<std::size_t>(n);
  // Diagonal: remainder from letter i on is at most n P_i^2 / (1 - q^2).
  long i = 1;
  for (;; ++i) {
    const double pi = params.letter_prob(i);
    const double rest = nn * pi * pi / (1.0 - q * q);
    if (rest < 0.5 * tol) {
      out.tail_bound += rest;
      break;
    }
    out.diagonal += 1.0 - gf_case_B(params, static_cast<Letter>(i)).gf.coefficient(m);
  }
  out.diagonal_terms = i - 1;
  // Off-diagonal, grouped by u = i + j: P_i P_j = (p/q)^2 q^u, with u-1-[u even] ordered pairs.
  const double r2 = (p / q) * (p / q);
  auto tail = [&](long u) {
    const double qu = std::pow(q, static_cast<double>(u + 1));
    return nn * r2 * qu * (static_cast<double>(u) / (1.0 - q) + q / ((1.0 - q) * (1.0 - q)));
  };
  long u = 3;
  for (;; ++u) {
    const double w = r2 * std::pow(q, static_cast<double>(u));
    const double count = static_cast<double>(u - 1 - (u % 2 == 0 ? 1 : 0));
    const double e = 1.0 - RationalGF({1.0}, {1.0, -1.0, w}).coefficient(m);
    out.off_diagonal += count * e;
    const double rest = tail(u);
    if (rest < 0.5 * tol) {
      out.tail_bound += rest;
      break;
    }
  }
  out.max_index_sum = u;
  out.total = out.diagonal + out.off_diagonal;
  return out;
}

SecondMoment second_moment_total(const GeomParams& params, long n, double tol, unsigned workers,
                                 double budget) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  SecondMoment out;
  if (n < 2) return out;
  const double q = params.q(), nn = static_cast<double>(n);
  // Quadruples touching a letter above M: at most 2 (n-1) * sum over such pairs of E X_ij,
  // and that sum is at most (n-1)(1 - (1-q^M)^2).
  auto tail = [&](int mm) {
    const double qm = std::pow(q, mm);
    return 2.0 * (nn - 1.0) * (nn - 1.0) * (2.0 * qm - qm * qm);
  };
  int mm = 1;
  while (tail(mm) >= tol) ++mm;
  out.max_letter = static_cast<Letter>(mm);
  out.tail_bound = tail(mm);
  // Each unordered pair of pairs costs a few coefficient extractions of length ~n.
  const double pair_count = double(mm) * mm;
  const double work = 0.5 * pair_count * (pair_count + 1) * std::min(nn + 1.0, 64.0 * std::log2(nn + 2.0));
  if (work > budget) throw BudgetExceeded(work, static_cast<std::uint64_t>(budget));
  std::vector<Pair> pairs;
  for (Letter i = 1; i <= out.max_letter; ++i)
    for (Letter j = 1; j <= out.max_letter; ++j) pairs.emplace_back(i, j);
  struct Partial {
    double x1 = 0.0, x3 = 0.0, cross = 0.0;
  };
  std::vector<Partial> partial(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t ia) {
    const Pair a = pairs[ia];
    const bool diag_a = a.first == a.second;
    Partial s;
    for (std::size_t ib = ia; ib < pairs.size(); ++ib) {
      const Pair b = pairs[ib];
      const double v = (ib == ia ? 1.0 : 2.0) * joint_prob(params, a, b, n);
      const bool diag_b = b.first == b.second;
      if (diag_a && diag_b)
        s.x1 += v;
      else if (!diag_a && !diag_b)
        s.x3 += v;
      else
        s.cross += 0.5 * v;  // E[X1 X3] receives each mixed unordered pair once
    }
    partial[ia] = s;
  });
  for (const auto& s : partial) {
    out.x1 += s.x1;
    out.x3 += s.x3;
    out.cross += s.cross;
  }
  out.total = out.x1 + out.x3 + 2.0 * out.cross;
  return out;
}

}  // namespace pairwords
