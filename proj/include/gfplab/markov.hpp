#pragma once

#include <string>
#include <vector>

#include "gfplab/rational.hpp"

namespace gfp {

// Birth-and-death random walk on {0, 1, 2, ...} induced by a Lucas-type
// family with d(x) = c x + h and constant g = -(c - 1 + h). The chain is
// level-independent beyond row 0, so it is stored as interior scalars plus a
// first-row override.
struct DiscreteChain {
  Rational p, r, q;  // interior rows (n >= 1): up, hold, down
  Rational p0, r0;   // row 0
  Rational q0;       // absorption leak at state 0: 1 - p0 - r0
  int levels_defined = 1;  // rows stored explicitly; all later rows repeat (q, r, p)

  bool stochastic() const { return q0.is_zero(); }
  Rational p_at(int n) const { return n == 0 ? p0 : p; }
  Rational r_at(int n) const { return n == 0 ? r0 : r; }
  Rational q_at(int n) const;  // n >= 1

  // recovered construction parameters
  Rational c() const { return p.inv(); }
  Rational h() const { return -r / p; }
  Rational big_g() const { return q / p; }  // c - 1 + h
};

// pre: h <= 0, c > 1 - h > 0, c + h >= 2 (row 0 must not leak more than all
// of its mass). Interior: q = (c-1+h)/c, r = -h/c, p = 1/c; row 0: r0 = -h/c,
// p0 = 2/c. Violations raise HypothesisViolated naming the failed inequality.
DiscreteChain walk_from_lucas(const Rational& c, const Rational& h);

// Continuous-time birth-and-death generator induced by a Lucas-type family
// with d(x) = c x + (k+4)/4 and constant g = -k/4, c < 0, k > 0.
struct ContinuousGenerator {
  Rational lambda0, lambda;  // birth rates: row 0, interior
  Rational mu;               // death rate, rows n >= 1
  Rational mu0;              // absorption rate out of state 0 (k > 4 leak)
  Rational beta;             // diagonal, every row: -(lambda + mu)

  bool conservative() const { return mu0.is_zero(); }
  Rational lambda_at(int n) const { return n == 0 ? lambda0 : lambda; }
  Rational mu_at(int n) const;  // n >= 1
  Rational beta_at(int) const { return beta; }

  Rational c() const { return -lambda.inv(); }
  Rational k() const { return 4 * mu / lambda; }
};

// pre: c < 0, k > 0 (HypothesisViolated otherwise). Rates: lambda0 = -2/c,
// lambda = -1/c, mu = -k/(4c), beta = (4+k)/(4c). Row 0 sums to -mu0 with
// mu0 = (4-k)/(4c): zero at k = 4, an absorption rate for k > 4, and negative
// for k < 4, which no generator allows -> GeneratorAxiomViolation.
ContinuousGenerator generator_from_lucas(const Rational& c, const Rational& k);

struct PotentialCoefficients {
  std::vector<Rational> pi;  // pi[0..n_max], pi[0] = 1
  Rational sum_partial;      // sum of the stored entries
  Rational ratio;            // pi_{n+1}/pi_n for n >= 1 (geometric tail)
  bool convergent = false;
  Rational limit;  // full series sum when convergent
};

PotentialCoefficients potential_coefficients(const DiscreteChain& ch, int n_max);
PotentialCoefficients potential_coefficients(const ContinuousGenerator& gen, int n_max);

enum class ChainKind { ReflectingDiscrete, AbsorbingDiscrete, Continuous };

const char* chain_kind_name(ChainKind k);

struct ErgodicityVerdict {
  ChainKind chain_kind = ChainKind::ReflectingDiscrete;
  bool ergodic = false;  // sum of potential coefficients converges
  bool divergent = true;
  Rational ratio;         // geometric tail ratio
  Rational series_value;  // exact series sum, meaningful when !divergent
  // stricter sufficient window (big_g > 2 discrete, k > 8 continuous),
  // equivalent to ratio < 1/2; reported alongside the series-level verdict
  bool in_strict_window = false;
};

ErgodicityVerdict ergodicity(const DiscreteChain& ch);
ErgodicityVerdict ergodicity(const ContinuousGenerator& gen);

// Decides whether a monic three-term recurrence x phi_n = phi_{n+1} +
// alpha_n phi_n + beta_n phi_{n-1} is realizable as a random walk:
// r_n = alpha_n, p_n q_{n+1} = beta_{n+1}, p_n + r_n + q_n = 1 for n >= 1,
// p_0 + r_0 <= 1, all p_n > 0, q_n > 0, r_n >= 0. beta[m] carries
// beta_{m+1}.
struct RwTestResult {
  bool is_random_walk = false;
  std::string reason;  // the violated condition when !is_random_walk
  bool level_independent = false;
  bool exact = true;  // false when the closed form required an irrational root
  std::vector<Rational> p, r, q;  // per level; q[0] = 0 by convention
};

// Constant (alpha, beta) reduce to p + q = 1 - alpha, p q = beta with
// p <= q; otherwise a forward search runs with the maximal admissible
// p_0 = 1 - alpha_0 (any smaller choice only shrinks every later p_n).
RwTestResult rw_polynomial_test(const std::vector<Rational>& alpha,
                                const std::vector<Rational>& beta);

}  // namespace gfp
