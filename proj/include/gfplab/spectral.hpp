#pragma once

#include <vector>

#include "gfplab/markov.hpp"
#include "gfplab/ortho.hpp"
#include "gfplab/polynomial.hpp"

namespace gfp {

// Orthogonal polynomials attached to a chain: Q_0 = 1, p_0 Q_1 = x - r_0,
// then p_j Q_{j+1} = (x - r_j) Q_j - q_j Q_{j-1}. The continuous variant uses
// -x Q_j = mu_j Q_{j-1} + beta_j Q_j + lambda_j Q_{j+1}. Coefficients are
// exact rationals.
struct WalkPolynomials {
  std::vector<Polynomial> Q;  // Q[0..n_max]
  int n_max = 0;
  bool continuous = false;
};

WalkPolynomials walk_polys(const DiscreteChain& ch, int n_max);
WalkPolynomials walk_polys(const ContinuousGenerator& gen, int n_max);

// Probability-normalized orthogonality measure of the walk polynomials: the
// Lucas weight of the underlying family scaled to unit mass. The density is
// supported on [center - halfwidth, center + halfwidth]; nodes for the
// substituted Gauss-Chebyshev rule are center + halfwidth * u with u the
// classical nodes on [-1, 1], each carrying weight 1/N.
struct SpectralMeasure {
  WeightSpec weight;  // scale set so the total mass is 1
  double center = 0.0, halfwidth = 0.0;
  bool discrete_time = true;
  double lo() const { return center - halfwidth; }
  double hi() const { return center + halfwidth; }
  double node(double u) const { return center + halfwidth * u; }
  double moment(int k);  // cached integral of x^k
 private:
  std::vector<double> moments_;
};

// Discrete chains must carry the walk shape (p_0 = 2p, r_0 = r) and their
// support must sit inside [-1, 1]; both are checked in exact arithmetic and
// SupportViolation / HypothesisViolated is raised otherwise. Continuous
// generators must carry lambda_0 = 2 lambda; their support never leaves
// [0, inf) since the lower endpoint is (sqrt(lambda) - sqrt(mu))^2.
SpectralMeasure spectral_measure(const DiscreteChain& ch);
SpectralMeasure spectral_measure(const ContinuousGenerator& gen);

enum class TransitionMethod { KarlinMcGregor, MatrixPower, MatrixExponential, MonteCarlo };

const char* transition_method_name(TransitionMethod m);

struct TransitionResult {
  int i = 0, j = 0;
  double horizon = 0.0;  // step count n, or time t
  double value = 0.0;
  TransitionMethod method = TransitionMethod::KarlinMcGregor;
  double error_bar = 0.0;  // Monte Carlo only
};

// P_ij(n) = pi_j * integral of x^n Q_i Q_j dmu, evaluated with
// ceil((n+i+j)/2) + 8 nodes, exact for the polynomial integrand.
TransitionResult km_discrete(const DiscreteChain& ch, int i, int j, int n);

// P_ij(t) = pi_j * integral of e^{-xt} Q_i Q_j dmu; the node count doubles
// until the quadrature settles (the integrand is analytic on the compact
// support, so convergence is geometric).
TransitionResult km_continuous(const ContinuousGenerator& gen, int i, int j, double t);

// integral of Q_j^2 dmu; equals 1/pi_j.
double q_norm_squared(const DiscreteChain& ch, int j);
double q_norm_squared(const ContinuousGenerator& gen, int j);

// Dense n-th power of the size x size truncation of the transition matrix.
// Entry reads enforce the no-boundary-contact condition size > max(i,j) + n,
// under which truncation is exact: mass moves at most one level per step.
struct TruncatedPower {
  int size = 0, n = 0;
  std::vector<double> data;  // row-major
  double at(int i, int j) const;  // TruncationTooSmall when size <= max(i,j)+n
  double row_sum(int i) const;    // over the stored columns
};

TruncatedPower power_oracle(const DiscreteChain& ch, int size, int n);

// e^{tA} for the size x size truncation of the generator.
struct TruncatedExp {
  int size = 0;
  double t = 0.0;
  std::vector<double> data;  // row-major
  double at(int i, int j) const;
  double row_sum(int i) const;
};

TruncatedExp expm_oracle(const ContinuousGenerator& gen, int size, double t);

// Seeded empirical distribution of the chain after n steps from state i.
// Counter-based per-trial random streams make the result independent of the
// number of worker threads (capped by GFP_LAB_THREADS).
struct McResult {
  int i = 0, n = 0;
  long long trials = 0;
  unsigned long long seed = 0;
  std::vector<long long> counts;  // counts[j] = trials that ended at state j
  long long absorbed = 0;

  double frequency(int j) const;
  double std_error(int j) const;  // binomial, sqrt(f(1-f)/trials)
  double absorbed_frequency() const;
  double absorbed_std_error() const;
};

McResult mc_simulate(const DiscreteChain& ch, int i, int n, long long trials,
                     unsigned long long seed);

}  // namespace gfp
