#include "gfplab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <thread>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "gfplab/errors.hpp"
#include "gfplab/gfp.hpp"
#include "gfplab/quadrature.hpp"

namespace gfp {

namespace {

Rational potential_pi(const Rational& pi1, const Rational& ratio, int j) {
  if (j == 0) return Rational(1);
  Rational v = pi1;
  for (int m = 1; m < j; ++m) v *= ratio;
  return v;
}

double int_pow(double x, int n) {
  double v = 1.0;
  for (int s = 0; s < n; ++s) v *= x;
  return v;
}

int thread_cap() {
  if (const char* env = std::getenv("GFP_LAB_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

// Counter-based stream: every (seed, trial, step) triple maps to one uniform
// draw, so the schedule of trials onto threads cannot change the result.
inline std::uint64_t fmix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline double u01(std::uint64_t seed, std::uint64_t trial, std::uint64_t step) {
  std::uint64_t h = fmix64(seed + 0x9E3779B97F4A7C15ULL * (trial + 1));
  h = fmix64(h ^ (0xD1B54A32D192ED03ULL * (step + 1)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace

WalkPolynomials walk_polys(const DiscreteChain& ch, int n_max) {
  if (n_max < 1) fail(ErrorCode::DomainError, "n_max must be >= 1");
  WalkPolynomials wp;
  wp.n_max = n_max;
  wp.continuous = false;
  const Polynomial x = Polynomial::x();
  wp.Q.reserve(static_cast<size_t>(n_max) + 1);
  wp.Q.push_back(Polynomial(Rational(1)));
  wp.Q.push_back((x - Polynomial(ch.r0)) / ch.p0);
  for (int j = 1; j < n_max; ++j) {
    wp.Q.push_back(((x - Polynomial(ch.r)) * wp.Q[static_cast<size_t>(j)] -
                    ch.q * wp.Q[static_cast<size_t>(j) - 1]) /
                   ch.p);
  }
  return wp;
}

WalkPolynomials walk_polys(const ContinuousGenerator& gen, int n_max) {
  if (n_max < 1) fail(ErrorCode::DomainError, "n_max must be >= 1");
  WalkPolynomials wp;
  wp.n_max = n_max;
  wp.continuous = true;
  const Polynomial x = Polynomial::x();
  wp.Q.reserve(static_cast<size_t>(n_max) + 1);
  wp.Q.push_back(Polynomial(Rational(1)));
  wp.Q.push_back(-(x + Polynomial(gen.beta)) / gen.lambda0);
  for (int j = 1; j < n_max; ++j) {
    wp.Q.push_back(-((x + Polynomial(gen.beta)) * wp.Q[static_cast<size_t>(j)] +
                     gen.mu * wp.Q[static_cast<size_t>(j) - 1]) /
                   gen.lambda);
  }
  return wp;
}

SpectralMeasure spectral_measure(const DiscreteChain& ch) {
  if (ch.p0 != 2 * ch.p || ch.r0 != ch.r) {
    fail(ErrorCode::HypothesisViolated, "chain does not carry the walk shape p0 = 2p, r0 = r");
  }
  const Rational four_pq = 4 * ch.p * ch.q;
  const Rational up = (Rational(1) - ch.r) * (Rational(1) - ch.r);
  const Rational dn = (Rational(1) + ch.r) * (Rational(1) + ch.r);
  if (four_pq > up || four_pq > dn) {
    fail(ErrorCode::SupportViolation, "support exits [-1, 1]");
  }
  const Rational c = ch.c(), h = ch.h();
  const GfpFamily fam = GfpFamily::lucas_type(Polynomial(std::vector<Rational>{h, c}),
                                              Polynomial(-ch.big_g()), Rational(2));
  SpectralMeasure m;
  m.weight = build_weight(fam);
  m.weight.scale = 1.0 / m.weight.mass;
  m.weight.mass = 1.0;
  m.discrete_time = true;
  m.center = ch.r.to_double();
  m.halfwidth = 2.0 * std::sqrt((ch.p * ch.q).to_double());
  return m;
}

SpectralMeasure spectral_measure(const ContinuousGenerator& gen) {
  if (gen.lambda0 != 2 * gen.lambda) {
    fail(ErrorCode::HypothesisViolated, "generator does not carry the shape lambda0 = 2 lambda");
  }
  const Rational c = gen.c(), k = gen.k();
  const GfpFamily fam =
      GfpFamily::lucas_type(Polynomial(std::vector<Rational>{(k + 4) / 4, c}),
                            Polynomial(-k / 4), Rational(2));
  SpectralMeasure m;
  m.weight = build_weight(fam);
  m.weight.scale = 1.0 / m.weight.mass;
  m.weight.mass = 1.0;
  m.discrete_time = false;
  m.center = (gen.lambda + gen.mu).to_double();
  m.halfwidth = 2.0 * std::sqrt((gen.lambda * gen.mu).to_double());
  if (m.lo() < -1e-12) fail(ErrorCode::SupportViolation, "support exits [0, inf)");
  return m;
}

double SpectralMeasure::moment(int k) {
  if (k < 0) fail(ErrorCode::DomainError, "moment order must be >= 0");
  while (static_cast<int>(moments_.size()) <= k) {
    const int order = static_cast<int>(moments_.size());
    const int n_nodes = order / 2 + 2;
    const QuadratureRule rule = gauss_chebyshev_first(n_nodes);
    double sum = 0.0;
    for (double u : rule.nodes) sum += int_pow(node(u), order);
    moments_.push_back(sum / n_nodes);
  }
  return moments_[static_cast<size_t>(k)];
}

const char* transition_method_name(TransitionMethod m) {
  switch (m) {
    case TransitionMethod::KarlinMcGregor: return "KarlinMcGregor";
    case TransitionMethod::MatrixPower: return "MatrixPower";
    case TransitionMethod::MatrixExponential: return "MatrixExponential";
    case TransitionMethod::MonteCarlo: return "MonteCarlo";
  }
  return "KarlinMcGregor";
}

// Q_i(x) and Q_j(x) by the three-term recurrence at the point. Expanded
// monomial coefficients grow like (1/halfwidth)^j and their cancellation
// noise crosses 1e-8 before j reaches 10; the recurrence stays O(j eps).
void q_pair_discrete(const DiscreteChain& ch, int i, int j, double x,
                     double* qi, double* qj) {
  const double p0 = ch.p0.to_double(), r0 = ch.r0.to_double();
  const double p = ch.p.to_double(), r = ch.r.to_double(), q = ch.q.to_double();
  const int top = std::max(i, j);
  double prev = 1.0;
  if (i == 0) *qi = prev;
  if (j == 0) *qj = prev;
  if (top == 0) return;
  double cur = (x - r0) / p0;
  if (i == 1) *qi = cur;
  if (j == 1) *qj = cur;
  for (int m = 2; m <= top; ++m) {
    const double next = ((x - r) * cur - q * prev) / p;
    prev = cur;
    cur = next;
    if (i == m) *qi = cur;
    if (j == m) *qj = cur;
  }
}

void q_pair_continuous(const ContinuousGenerator& gen, int i, int j, double x,
                       double* qi, double* qj) {
  const double l0 = gen.lambda0.to_double(), l = gen.lambda.to_double();
  const double mu = gen.mu.to_double(), beta = gen.beta.to_double();
  const int top = std::max(i, j);
  double prev = 1.0;
  if (i == 0) *qi = prev;
  if (j == 0) *qj = prev;
  if (top == 0) return;
  double cur = -(x + beta) / l0;
  if (i == 1) *qi = cur;
  if (j == 1) *qj = cur;
  for (int m = 2; m <= top; ++m) {
    const double next = (-(x + beta) * cur - mu * prev) / l;
    prev = cur;
    cur = next;
    if (i == m) *qi = cur;
    if (j == m) *qj = cur;
  }
}

TransitionResult km_discrete(const DiscreteChain& ch, int i, int j, int n) {
  if (i < 0 || j < 0 || n < 0) fail(ErrorCode::DomainError, "i, j, n must be >= 0");
  SpectralMeasure m = spectral_measure(ch);
  const Rational pij = potential_pi(ch.p0 / ch.q, ch.p / ch.q, j);
  const int n_nodes = (n + i + j + 1) / 2 + 8;
  const QuadratureRule rule = gauss_chebyshev_first(n_nodes);
  double sum = 0.0;
  for (double u : rule.nodes) {
    const double x = m.node(u);
    double qi = 0.0, qj = 0.0;
    q_pair_discrete(ch, i, j, x, &qi, &qj);
    sum += int_pow(x, n) * qi * qj;
  }
  TransitionResult res;
  res.i = i;
  res.j = j;
  res.horizon = n;
  res.value = pij.to_double() * sum / n_nodes;
  res.method = TransitionMethod::KarlinMcGregor;
  return res;
}

TransitionResult km_continuous(const ContinuousGenerator& gen, int i, int j, double t) {
  if (i < 0 || j < 0) fail(ErrorCode::DomainError, "i, j must be >= 0");
  if (t < 0) fail(ErrorCode::DomainError, "t must be >= 0");
  SpectralMeasure m = spectral_measure(gen);
  const Rational pij = potential_pi(gen.lambda0 / gen.mu, gen.lambda / gen.mu, j);
  const double scale = pij.to_double();
  auto estimate = [&](int n_nodes) {
    const QuadratureRule rule = gauss_chebyshev_first(n_nodes);
    double sum = 0.0;
    for (double u : rule.nodes) {
      const double x = m.node(u);
      double qi = 0.0, qj = 0.0;
      q_pair_continuous(gen, i, j, x, &qi, &qj);
      sum += std::exp(-x * t) * qi * qj;
    }
    return scale * sum / n_nodes;
  };
  int n_nodes = 48 + (i + j) / 2;
  double value = estimate(n_nodes);
  for (int round = 0; round < 8; ++round) {
    n_nodes *= 2;
    const double next = estimate(n_nodes);
    const bool settled = std::fabs(next - value) <= 1e-10 * std::max(1.0, std::fabs(next));
    value = next;
    if (settled) break;
  }
  TransitionResult res;
  res.i = i;
  res.j = j;
  res.horizon = t;
  res.value = value;
  res.method = TransitionMethod::KarlinMcGregor;
  return res;
}

template <typename EvalQ>
static double q_norm_squared_impl(SpectralMeasure& m, int j, EvalQ&& eval_q) {
  const int n_nodes = j + 8;
  const QuadratureRule rule = gauss_chebyshev_first(n_nodes);
  double sum = 0.0;
  for (double u : rule.nodes) {
    const double v = eval_q(m.node(u));
    sum += v * v;
  }
  return sum / n_nodes;
}

double q_norm_squared(const DiscreteChain& ch, int j) {
  if (j < 0) fail(ErrorCode::DomainError, "j must be >= 0");
  SpectralMeasure m = spectral_measure(ch);
  return q_norm_squared_impl(m, j, [&](double x) {
    double qi = 0.0, qj = 0.0;
    q_pair_discrete(ch, j, j, x, &qi, &qj);
    return qj;
  });
}

double q_norm_squared(const ContinuousGenerator& gen, int j) {
  if (j < 0) fail(ErrorCode::DomainError, "j must be >= 0");
  SpectralMeasure m = spectral_measure(gen);
  return q_norm_squared_impl(m, j, [&](double x) {
    double qi = 0.0, qj = 0.0;
    q_pair_continuous(gen, j, j, x, &qi, &qj);
    return qj;
  });
}

double TruncatedPower::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= size || j >= size) {
    fail(ErrorCode::DomainError, "entry outside the truncation");
  }
  if (size <= std::max(i, j) + n) {
    fail(ErrorCode::TruncationTooSmall, "need size > max(i, j) + n for an exact entry");
  }
  return data[static_cast<size_t>(i) * static_cast<size_t>(size) + static_cast<size_t>(j)];
}

double TruncatedPower::row_sum(int i) const {
  if (i < 0 || i >= size) fail(ErrorCode::DomainError, "row outside the truncation");
  if (size <= i + n) {
    fail(ErrorCode::TruncationTooSmall, "need size > i + n for an exact row");
  }
  double sum = 0.0;
  for (int j = 0; j < size; ++j) {
    sum += data[static_cast<size_t>(i) * static_cast<size_t>(size) + static_cast<size_t>(j)];
  }
  return sum;
}

TruncatedPower power_oracle(const DiscreteChain& ch, int size, int n) {
  if (size < 2) fail(ErrorCode::DomainError, "size must be >= 2");
  if (n < 0) fail(ErrorCode::DomainError, "n must be >= 0");
  TruncatedPower tp;
  tp.size = size;
  tp.n = n;
  const size_t sz = static_cast<size_t>(size);
  tp.data.assign(sz * sz, 0.0);
  for (size_t a = 0; a < sz; ++a) tp.data[a * sz + a] = 1.0;

  const double p0 = ch.p0.to_double(), r0 = ch.r0.to_double();
  const double p = ch.p.to_double(), r = ch.r.to_double(), q = ch.q.to_double();
  std::vector<double> next(sz * sz);
  for (int step = 0; step < n; ++step) {
    for (size_t a = 0; a < sz; ++a) {
      const double* row = &tp.data[a * sz];
      double* out = &next[a * sz];
      for (size_t b = 0; b < sz; ++b) {
        double v = row[b] * (b == 0 ? r0 : r);
        if (b > 0) v += row[b - 1] * (b == 1 ? p0 : p);
        if (b + 1 < sz) v += row[b + 1] * q;
        out[b] = v;
      }
    }
    tp.data.swap(next);
  }
  return tp;
}

double TruncatedExp::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= size || j >= size) {
    fail(ErrorCode::DomainError, "entry outside the truncation");
  }
  return data[static_cast<size_t>(i) * static_cast<size_t>(size) + static_cast<size_t>(j)];
}

double TruncatedExp::row_sum(int i) const {
  if (i < 0 || i >= size) fail(ErrorCode::DomainError, "row outside the truncation");
  double sum = 0.0;
  for (int j = 0; j < size; ++j) {
    sum += data[static_cast<size_t>(i) * static_cast<size_t>(size) + static_cast<size_t>(j)];
  }
  return sum;
}

TruncatedExp expm_oracle(const ContinuousGenerator& gen, int size, double t) {
  if (size < 2) fail(ErrorCode::DomainError, "size must be >= 2");
  if (t < 0) fail(ErrorCode::DomainError, "t must be >= 0");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size);
  const double l0 = gen.lambda0.to_double(), l = gen.lambda.to_double();
  const double mu = gen.mu.to_double(), beta = gen.beta.to_double();
  for (int m = 0; m < size; ++m) {
    a(m, m) = beta;
    if (m + 1 < size) a(m, m + 1) = (m == 0 ? l0 : l);
    if (m > 0) a(m, m - 1) = mu;
  }
  const Eigen::MatrixXd e = (a * t).exp();
  TruncatedExp te;
  te.size = size;
  te.t = t;
  te.data.resize(static_cast<size_t>(size) * static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      te.data[static_cast<size_t>(i) * static_cast<size_t>(size) + static_cast<size_t>(j)] =
          e(i, j);
    }
  }
  return te;
}

double McResult::frequency(int j) const {
  if (trials == 0 || j < 0 || j >= static_cast<int>(counts.size())) return 0.0;
  return static_cast<double>(counts[static_cast<size_t>(j)]) / static_cast<double>(trials);
}

double McResult::std_error(int j) const {
  if (trials == 0) return 0.0;
  const double f = frequency(j);
  return std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
}

double McResult::absorbed_frequency() const {
  if (trials == 0) return 0.0;
  return static_cast<double>(absorbed) / static_cast<double>(trials);
}

double McResult::absorbed_std_error() const {
  if (trials == 0) return 0.0;
  const double f = absorbed_frequency();
  return std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
}

McResult mc_simulate(const DiscreteChain& ch, int i, int n, long long trials,
                     unsigned long long seed) {
  if (i < 0 || n < 0) fail(ErrorCode::DomainError, "i, n must be >= 0");
  if (trials < 1) fail(ErrorCode::DomainError, "trials must be >= 1");
  McResult res;
  res.i = i;
  res.n = n;
  res.trials = trials;
  res.seed = seed;
  const int top = i + n;  // farthest reachable state
  res.counts.assign(static_cast<size_t>(top) + 1, 0);

  const double p0 = ch.p0.to_double(), r0 = ch.r0.to_double();
  const double p = ch.p.to_double(), r = ch.r.to_double();
  const bool leak0 = !ch.q0.is_zero();

  auto run_block = [&](long long lo, long long hi, std::vector<long long>& counts,
                       long long& absorbed) {
    for (long long trial = lo; trial < hi; ++trial) {
      int state = i;
      bool dead = false;
      for (int step = 0; step < n; ++step) {
        const double u = u01(seed, static_cast<std::uint64_t>(trial),
                             static_cast<std::uint64_t>(step));
        if (state == 0) {
          if (u < p0) {
            state = 1;
          } else if (u < p0 + r0 || !leak0) {
            // stay
          } else {
            dead = true;
            break;
          }
        } else {
          if (u < p) {
            ++state;
          } else if (u < p + r) {
            // stay
          } else {
            --state;
          }
        }
      }
      if (dead) {
        ++absorbed;
      } else {
        ++counts[static_cast<size_t>(state)];
      }
    }
  };

  int workers = thread_cap();
  if (trials < 10000) workers = 1;
  if (workers <= 1) {
    run_block(0, trials, res.counts, res.absorbed);
    return res;
  }
  std::vector<std::vector<long long>> counts(static_cast<size_t>(workers),
                                             std::vector<long long>(res.counts.size(), 0));
  std::vector<long long> absorbed(static_cast<size_t>(workers), 0);
  std::vector<std::thread> pool;
  const long long block = (trials + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long long lo = static_cast<long long>(w) * block;
    const long long hi = std::min(trials, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi] {
      run_block(lo, hi, counts[static_cast<size_t>(w)], absorbed[static_cast<size_t>(w)]);
    });
  }
  for (std::thread& th : pool) th.join();
  for (size_t w = 0; w < counts.size(); ++w) {
    res.absorbed += absorbed[w];
    for (size_t s = 0; s < res.counts.size(); ++s) res.counts[s] += counts[w][s];
  }
  return res;
}

}  // namespace gfp
