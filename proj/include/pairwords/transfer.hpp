#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pairwords/core.hpp"
#include "pairwords/multiseries.hpp"
#include "pairwords/pairset.hpp"
#include "pairwords/polynomial.hpp"

namespace pairwords {

// Letter probabilities restricted to the support J of a pair set, plus the
// lumped mass of every other letter. All transfer routines work from this, so
// a non-geometric law only needs a different constructor.
struct LetterWeights {
  std::vector<double> tracked;  // aligned with PairSet::support()
  double lump = 1.0;
};

LetterWeights letter_weights(const GeomParams& params, const PairSet& pairs);
// Tracked weights scaled by v, lump set to 1 - v * sum.
LetterWeights scaled_weights(const LetterWeights& w, double v);

// Substochastic matrix over {e} followed by J ascending. Entry (k,m) is 0 for
// a forbidden pair and the weight of m otherwise.
struct TransferMatrix {
  std::vector<Letter> letters;
  Eigen::MatrixXd matrix;
};

TransferMatrix build_transfer(const GeomParams& params, const PairSet& pairs);
TransferMatrix build_transfer(const LetterWeights& w, const PairSet& pairs);

// Cluster matrix: weight of m at forbidden (k,m), zero elsewhere (|J| x |J|).
Eigen::MatrixXd cluster_matrix(const LetterWeights& w, const PairSet& pairs);

double avoid_prob_matrix(const GeomParams& params, const PairSet& pairs, int n);
double avoid_prob_matrix(const LetterWeights& w, const PairSet& pairs, int n);

struct EigenResult {
  double lambda = 1.0;
  double c1 = 1.0;
  std::vector<double> beta;  // left vector u = [1, beta]
  std::vector<double> mu;    // right vector v = [1/P_e, mu]
  int iterations = 0;
  double residual = 0.0;
};

inline constexpr int kPowerIterationCap = 100'000;
inline constexpr double kPowerIterationTol = 1e-14;

EigenResult dominant_eigen(const GeomParams& params, const PairSet& pairs);
EigenResult dominant_eigen(const LetterWeights& w, const PairSet& pairs);

// Diagnostics only: second eigenvalue (by modulus) from a dense solver, and the
// finite-n ratio P(avoid) / (C1 lambda1^n).
double subdominant_eigenvalue(const GeomParams& params, const PairSet& pairs);
double phi_n(const GeomParams& params, const PairSet& pairs, int n);

struct IdenticalPairsEigen {
  double lambda = 1.0;
  double c1 = 1.0;
  double epsilon = 0.0;  // sum of P_i^2
  bool fallback = false;
  std::string notice;
};

// Pairs (i,i) for the given letters; Perron root from the scalar equation
// lambda = 1 - sum P_i^2 / (lambda + P_i).
IdenticalPairsEigen identical_pairs_eigen(const GeomParams& params, const std::vector<Letter>& letters,
                                          double tol = 1e-15);

struct Algorithm1Result {
  MultiSeries lambda;
  std::vector<MultiSeries> beta;
  std::vector<MultiSeries> mu;
  MultiSeries c1;
};

// Symbolic iteration in the letter probabilities (variable k is the k-th letter
// of J). Exact through total degree K.
Algorithm1Result algorithm1_series(const PairSet& pairs, int order);

// psi_1 = sum of tracked weights; psi_{k+1} = pbar * C^k * 1 with C the cluster matrix.
double psi(const GeomParams& params, const PairSet& pairs, int k);
std::vector<double> psi_values(const LetterWeights& w, const PairSet& pairs, int count);

// Psi(z) as numerator/denominator polynomials (denominator det(I + zC)).
struct PsiFunction {
  Poly numerator;
  Poly denominator;
};
PsiFunction psi_function(const LetterWeights& w, const PairSet& pairs);

// Generating function of the avoidance probabilities, 1/(1 - (1-psi_1) z - Psi(z)).
RationalGF avoidance_gf(const GeomParams& params, const PairSet& pairs);
RationalGF avoidance_gf(const LetterWeights& w, const PairSet& pairs);

// lambda(v) from the fixed point lambda = (1 - v psi_1) / (1 - Psi(v / lambda)),
// falling back to the eigen route when the iteration does not contract.
double lambda_of_v(const GeomParams& params, const PairSet& pairs, double v);
double lambda_of_v_eigen(const GeomParams& params, const PairSet& pairs, double v);
double C_of_v(const GeomParams& params, const PairSet& pairs, double v);

}  // namespace pairwords
