#include "gfplab/markov.hpp"

#include <algorithm>
#include <cmath>

#include "gfplab/errors.hpp"

namespace gfp {

namespace {

Rational geometric_total(const Rational& pi1, const Rational& ratio) {
  // 1 + pi1 (1 + ratio + ratio^2 + ...) for ratio < 1
  return Rational(1) + pi1 / (Rational(1) - ratio);
}

ErgodicityVerdict verdict_from(ChainKind kind, const Rational& pi1, const Rational& ratio) {
  ErgodicityVerdict v;
  v.chain_kind = kind;
  v.ratio = ratio;
  v.ergodic = ratio < Rational(1);
  v.divergent = !v.ergodic;
  if (v.ergodic) v.series_value = geometric_total(pi1, ratio);
  v.in_strict_window = ratio < Rational(1, 2);
  return v;
}

bool all_equal(const std::vector<Rational>& xs) {
  for (const Rational& x : xs) {
    if (x != xs.front()) return false;
  }
  return true;
}

}  // namespace

Rational DiscreteChain::q_at(int n) const {
  if (n < 1) fail(ErrorCode::DomainError, "down-probabilities start at level 1");
  return q;
}

DiscreteChain walk_from_lucas(const Rational& c, const Rational& h) {
  if (h > Rational(0)) fail(ErrorCode::HypothesisViolated, "h <= 0 fails");
  if (Rational(1) - h <= Rational(0)) fail(ErrorCode::HypothesisViolated, "1 - h > 0 fails");
  if (c <= Rational(1) - h) fail(ErrorCode::HypothesisViolated, "c > 1 - h fails");
  if (c + h < Rational(2)) {
    fail(ErrorCode::HypothesisViolated, "c + h >= 2 fails (row 0 would leak more than its mass)");
  }
  DiscreteChain ch;
  ch.p = c.inv();
  ch.r = -h / c;
  ch.q = (c - 1 + h) / c;
  ch.p0 = Rational(2) / c;
  ch.r0 = ch.r;
  ch.q0 = Rational(1) - ch.p0 - ch.r0;
  return ch;
}

Rational ContinuousGenerator::mu_at(int n) const {
  if (n < 1) fail(ErrorCode::DomainError, "death rates start at level 1");
  return mu;
}

ContinuousGenerator generator_from_lucas(const Rational& c, const Rational& k) {
  if (c >= Rational(0)) fail(ErrorCode::HypothesisViolated, "c < 0 fails");
  if (k <= Rational(0)) fail(ErrorCode::HypothesisViolated, "k > 0 fails");
  ContinuousGenerator gen;
  gen.lambda0 = Rational(-2) / c;
  gen.lambda = Rational(-1) / c;
  gen.mu = -k / (4 * c);
  gen.beta = (4 + k) / (4 * c);
  gen.mu0 = (4 - k) / (4 * c);
  if (gen.mu0.sign() < 0) {
    fail(ErrorCode::GeneratorAxiomViolation, "k < 4 makes row 0 sum positive");
  }
  return gen;
}

static PotentialCoefficients build_potential(const Rational& pi1, const Rational& ratio,
                                             int n_max) {
  if (n_max < 0) fail(ErrorCode::DomainError, "n_max must be >= 0");
  PotentialCoefficients pc;
  pc.ratio = ratio;
  pc.pi.reserve(static_cast<size_t>(n_max) + 1);
  pc.pi.push_back(Rational(1));
  Rational cur = pi1;
  for (int n = 1; n <= n_max; ++n) {
    pc.pi.push_back(cur);
    cur *= ratio;
  }
  pc.sum_partial = Rational(0);
  for (const Rational& x : pc.pi) pc.sum_partial += x;
  pc.convergent = ratio < Rational(1);
  if (pc.convergent) pc.limit = geometric_total(pi1, ratio);
  return pc;
}

PotentialCoefficients potential_coefficients(const DiscreteChain& ch, int n_max) {
  return build_potential(ch.p0 / ch.q, ch.p / ch.q, n_max);
}

PotentialCoefficients potential_coefficients(const ContinuousGenerator& gen, int n_max) {
  return build_potential(gen.lambda0 / gen.mu, gen.lambda / gen.mu, n_max);
}

const char* chain_kind_name(ChainKind k) {
  switch (k) {
    case ChainKind::ReflectingDiscrete: return "ReflectingDiscrete";
    case ChainKind::AbsorbingDiscrete: return "AbsorbingDiscrete";
    case ChainKind::Continuous: return "Continuous";
  }
  return "Continuous";
}

ErgodicityVerdict ergodicity(const DiscreteChain& ch) {
  const ChainKind kind =
      ch.stochastic() ? ChainKind::ReflectingDiscrete : ChainKind::AbsorbingDiscrete;
  return verdict_from(kind, ch.p0 / ch.q, ch.p / ch.q);
}

ErgodicityVerdict ergodicity(const ContinuousGenerator& gen) {
  return verdict_from(ChainKind::Continuous, gen.lambda0 / gen.mu, gen.lambda / gen.mu);
}

RwTestResult rw_polynomial_test(const std::vector<Rational>& alpha,
                                const std::vector<Rational>& beta) {
  if (alpha.empty()) fail(ErrorCode::DomainError, "alpha must be nonempty");
  RwTestResult res;
  auto reject = [&res](std::string why) {
    res.is_random_walk = false;
    res.reason = std::move(why);
    return res;
  };

  for (size_t n = 0; n < alpha.size(); ++n) {
    if (alpha[n].sign() < 0) return reject("alpha_n >= 0 fails at n=" + std::to_string(n));
    if (alpha[n] >= Rational(1)) return reject("alpha_n < 1 fails at n=" + std::to_string(n));
  }
  for (size_t m = 0; m < beta.size(); ++m) {
    if (beta[m].sign() <= 0) {
      return reject("beta_{n+1} > 0 fails at n+1=" + std::to_string(m + 1));
    }
  }

  res.level_independent = !beta.empty() && all_equal(alpha) && all_equal(beta);
  if (res.level_independent) {
    const Rational a = alpha.front();
    const Rational b = beta.front();
    const Rational s = Rational(1) - a;  // p + q
    const Rational disc = s * s - 4 * b;
    if (disc.sign() < 0) return reject("(1 - alpha)^2 >= 4 beta fails");
    Rational root;
    if (disc.perfect_square(&root)) {
      res.exact = true;
    } else {
      res.exact = false;
      root = Rational(std::sqrt(disc.to_double()));
    }
    const Rational p = (s - root) / 2;
    const Rational q = (s + root) / 2;
    const size_t levels = std::max(alpha.size(), beta.size() + 1);
    res.p.assign(levels, p);
    res.r.assign(levels, a);
    res.q.assign(levels, q);
    res.q[0] = Rational(0);
    res.is_random_walk = true;
    return res;
  }

  if (beta.size() + 1 > alpha.size()) {
    fail(ErrorCode::DomainError, "beta sequence longer than alpha admits");
  }
  res.exact = true;
  res.r = alpha;
  res.p.assign(beta.size() + 1, Rational(0));
  res.q.assign(beta.size() + 1, Rational(0));
  res.p[0] = Rational(1) - alpha[0];  // maximal admissible start
  for (size_t m = 1; m <= beta.size(); ++m) {
    res.q[m] = beta[m - 1] / res.p[m - 1];
    res.p[m] = Rational(1) - alpha[m] - res.q[m];
    if (res.p[m].sign() <= 0) {
      res.p.clear();
      res.q.clear();
      res.r.clear();
      return reject("p_n > 0 fails at n=" + std::to_string(m));
    }
  }
  res.is_random_walk = true;
  return res;
}

}  // namespace gfp
