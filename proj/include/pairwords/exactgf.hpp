#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "pairwords/core.hpp"
#include "pairwords/polynomial.hpp"

namespace pairwords {

// Cluster generating functions for one or two forbidden pairs, labelled by
// the shape of the pair set:
//   A (i,j) i!=j            B (i,i)
//   C two pairs sharing no overlap (i,j),(k,l)
//   D (i,i),(i,l)           E (i,i),(k,k)
//   F (i,i),(k,l) k,l != i  G chain (i,j),(j,l)
//   H (i,j),(j,i)
enum class GFCase { A, B, C, D, E, F, G, H };

struct ClusterGF {
  GFCase label;
  std::vector<Letter> letters;
  RationalGF gf;                    // avoidance probabilities, [z^n] = P(avoid, length n)
  std::array<double, 4> cubic{};    // a, b, c, d of the denominator for E..H
  bool is_cubic = false;
};

std::string case_name(GFCase c);

ClusterGF gf_single(const GeomParams& params, Letter i, Letter j);  // A or B
ClusterGF gf_case_A(const GeomParams& params, Letter i, Letter j);
ClusterGF gf_case_B(const GeomParams& params, Letter i);
ClusterGF gf_case_C(const GeomParams& params, double w1, double w2, std::vector<Letter> letters);
ClusterGF gf_case_D(const GeomParams& params, Letter i, Letter l);
ClusterGF gf_case_E(const GeomParams& params, Letter i, Letter k);
ClusterGF gf_case_F(const GeomParams& params, Letter i, Letter k, Letter l);
ClusterGF gf_case_G(const GeomParams& params, Letter i, Letter j, Letter l);
ClusterGF gf_case_H(const GeomParams& params, Letter i, Letter j);

// E[X_ij^(n)]: recurrence on the cluster GF.
double prob_pair_occurs(const GeomParams& params, Letter i, Letter j, long n);
// Same quantity from the quadratic closed forms.
double prob_pair_occurs_closed(const GeomParams& params, Letter i, Letter j, long n);

// Joint avoidance GF of two distinct pairs, with the regime that produced it.
struct JointRegime {
  std::string regime;
  bool same_pair = false;
  ClusterGF marginal1;
  ClusterGF marginal2;
  ClusterGF joint;  // unused when same_pair
};
JointRegime joint_regime(const GeomParams& params, Pair a, Pair b);

// E[X_a X_b] = [z^n](1/(1-z) - F_a - F_b + F_ab).
double joint_prob(const GeomParams& params, Pair a, Pair b, long n);
// Same, with every term's coefficient from partial fractions. Returns NaN when
// a cubic denominator has near-coincident roots.
double joint_prob_partial_fractions(const GeomParams& params, Pair a, Pair b, long n);

struct CubicRoots {
  std::vector<std::complex<double>> roots;  // ordered by modulus
  bool near_coincident = false;
};

// Roots of d + c z + b z^2 + a z^3, degenerate leading coefficients handled.
CubicRoots cubic_roots(double a, double b, double c, double d);

// [z^n] num(z)/den(z) by partial fractions over simple roots of den (deg num < deg den).
// Returns NaN when the roots are near-coincident.
double partial_fraction_coefficient(const Poly& num, const Poly& den, long n);

struct MeanTotal {
  double total = 0.0;
  double diagonal = 0.0;      // identical pairs, E X1
  double off_diagonal = 0.0;  // E X3
  double tail_bound = 0.0;
  long diagonal_terms = 0;
  long max_index_sum = 0;  // off-diagonal sum covers i + j <= this
};

MeanTotal mean_total(const GeomParams& params, long n, double tol);

struct SecondMoment {
  double total = 0.0;  // E[X2^2]
  double x1 = 0.0;     // E[X1^2]
  double x3 = 0.0;     // E[X3^2]
  double cross = 0.0;  // E[X1 X3]
  double tail_bound = 0.0;
  Letter max_letter = 0;
};

// Refuses (BudgetExceeded) when the estimated work, pairs^2 / 2 times the cost of one
// coefficient extraction, exceeds the budget.
inline constexpr double kSecondMomentBudget = 2e9;
SecondMoment second_moment_total(const GeomParams& params, long n, double tol, unsigned workers = 0,
                                 double budget = kSecondMomentBudget);

}  // namespace pairwords
