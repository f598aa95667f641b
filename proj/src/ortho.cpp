#include "gfplab/ortho.hpp"

#include <algorithm>
#include <cmath>

#include "gfplab/quadrature.hpp"

namespace gfp {

namespace {

double signed_root(double y, int t) {
  if (t == 1) return y;
  return std::copysign(std::pow(std::fabs(y), 1.0 / t), y);
}

double bisect_d(const Polynomial& d, double target) {
  // expanding bracket, then bisection; d is checked monotone by the caller
  double lo = -1.0, hi = 1.0;
  int guard = 0;
  auto f = [&](double x) { return d.eval(x) - target; };
  while (f(lo) * f(hi) > 0.0) {
    lo *= 2.0;
    hi *= 2.0;
    if (++guard > 60) fail(ErrorCode::NoRealSupport, "d(x) never attains a support endpoint");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(lo) * f(mid) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double ip_nodes(const Polynomial& p, const Polynomial& q, const WeightSpec& w, int n_nodes) {
  const double four_g = 4.0 * w.big_g.to_double();
  double sum = 0.0;
  if (w.kind == WeightKind::FibonacciWeight) {
    const QuadratureRule rule = gauss_chebyshev_second(n_nodes);
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
      const double x = w.x_of_u(rule.nodes[k]);
      sum += rule.weights[k] * p.eval(x) * q.eval(x);
    }
    return four_g * sum * w.scale;
  }
  const QuadratureRule rule = gauss_chebyshev_first(n_nodes);
  for (size_t k = 0; k < rule.nodes.size(); ++k) {
    const double x = w.x_of_u(rule.nodes[k]);
    sum += rule.weights[k] * p.eval(x) * q.eval(x);
  }
  return sum * w.scale;
}

int base_nodes(const Polynomial& p, const Polynomial& q) {
  const int dp = std::max(p.degree(), 0);
  const int dq = std::max(q.degree(), 0);
  return (dp + dq) / 2 + 4;
}

void require_parity_hypotheses(const GfpFamily& f) {
  if (!f.d.is_odd_function() || !f.g.is_even_function()) {
    fail(ErrorCode::HypothesisViolated, "parity split needs d odd and g even");
  }
}

}  // namespace

double WeightSpec::x_of_u(double u) const {
  const double target = 2.0 * std::sqrt(big_g.to_double()) * u;
  if (monomial_form) {
    return signed_root((target - mono_h) / mono_c, mono_t);
  }
  return bisect_d(family.d, target);
}

double WeightSpec::density(double x) const {
  const double dv = family.d.eval(x);
  const double arg = 4.0 * big_g.to_double() - dv * dv;
  if (arg <= 0.0) return 0.0;
  const double dp = std::fabs(family.d.derivative().eval(x));
  if (kind == WeightKind::FibonacciWeight) return std::sqrt(arg) * dp * scale;
  return dp / std::sqrt(arg) * scale;
}

WeightSpec build_weight(const GfpFamily& f) {
  if (f.g.degree() != 0) {
    fail(ErrorCode::PositiveG, "g must be a negative constant");
  }
  const Rational g0 = f.g.coeff(0);
  if (g0.sign() >= 0) {
    fail(ErrorCode::PositiveG, "g must be a negative constant");
  }
  WeightSpec w;
  w.family = f;
  w.kind = (f.kind == GfpKind::FibonacciType) ? WeightKind::FibonacciWeight : WeightKind::LucasWeight;
  w.big_g = -g0;

  // d = c x^t + h?
  const int deg = f.d.degree();
  bool mono = deg >= 1;
  for (int k = 1; k < deg && mono; ++k) {
    if (!f.d.coeff(k).is_zero()) mono = false;
  }
  const double edge = 2.0 * std::sqrt(w.big_g.to_double());
  if (mono) {
    if (deg % 2 == 0) {
      fail(ErrorCode::NonMonotoneD, "d = c x^t + h with even t is not injective");
    }
    w.monomial_form = true;
    w.mono_c = f.d.leading().to_double();
    w.mono_h = f.d.coeff(0).to_double();
    w.mono_t = deg;
    const double e1 = signed_root((-edge - w.mono_h) / w.mono_c, w.mono_t);
    const double e2 = signed_root((edge - w.mono_h) / w.mono_c, w.mono_t);
    w.s1 = std::min(e1, e2);
    w.s2 = std::max(e1, e2);
  } else {
    const double e1 = bisect_d(f.d, -edge);
    const double e2 = bisect_d(f.d, edge);
    w.s1 = std::min(e1, e2);
    w.s2 = std::max(e1, e2);
    // strict monotonicity of d across the support
    const int samples = 1024;
    double prev = f.d.eval(w.s1);
    const bool up = f.d.eval(w.s2) > prev;
    for (int k = 1; k <= samples; ++k) {
      const double x = w.s1 + (w.s2 - w.s1) * k / samples;
      const double v = f.d.eval(x);
      if ((up && v <= prev) || (!up && v >= prev)) {
        fail(ErrorCode::NonMonotoneD, "d is not strictly monotone on the support");
      }
      prev = v;
    }
  }
  const Polynomial one{Rational(1)};
  w.mass = ip_nodes(one, one, w, 8);
  return w;
}

double inner_product(const Polynomial& p, const Polynomial& q, const WeightSpec& w) {
  if (p.is_zero() || q.is_zero()) return 0.0;
  int n = base_nodes(p, q);
  const bool affine = w.monomial_form && w.mono_t == 1;
  double value = ip_nodes(p, q, w, n);
  if (affine) return value;
  // non-affine substitution: the integrand is no longer polynomial in u;
  // double the node count until the estimate settles
  for (int round = 0; round < 14; ++round) {
    n *= 2;
    const double next = ip_nodes(p, q, w, n);
    if (std::fabs(next - value) <= 1e-12 * std::max(1.0, std::fabs(next))) {
      return next;
    }
    value = next;
  }
  return value;
}

double GramMatrix::at(int i, int j) const {
  const int n = size();
  const int a = i - lo, b = j - lo;
  if (a < 0 || b < 0 || a >= n || b >= n) fail(ErrorCode::DomainError, "Gram subscript out of range");
  return entries[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)];
}

double GramMatrix::max_offdiag() const {
  const int n = size();
  double m = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      m = std::max(m, std::fabs(entries[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)]));
    }
  }
  return m;
}

double GramMatrix::max_diag() const {
  const int n = size();
  double m = 0.0;
  for (int a = 0; a < n; ++a) {
    m = std::max(m, std::fabs(entries[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(a)]));
  }
  return m;
}

GramMatrix gram(const GfpFamily& f, int n_max, const WeightSpec& w) {
  if (n_max < 1) fail(ErrorCode::DomainError, "n_max must be >= 1");
  GramMatrix gm;
  gm.lo = (f.kind == GfpKind::FibonacciType) ? 1 : 0;
  gm.hi = n_max;
  const int n = gm.size();
  gm.entries.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  const GfpSequence seq = generate(f, n_max);

  const int deg_top = std::max(seq.terms[static_cast<size_t>(n_max)].degree(), 0);
  const int n1 = deg_top + 4;  // covers every pair
  const int n2 = 2 * n1;
  double drift = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const Polynomial& pa = seq.terms[static_cast<size_t>(a + gm.lo)];
      const Polynomial& pb = seq.terms[static_cast<size_t>(b + gm.lo)];
      const double v1 = ip_nodes(pa, pb, w, n1);
      const double v2 = ip_nodes(pa, pb, w, n2);
      drift = std::max(drift, std::fabs(v2 - v1));
      gm.entries[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] = v2;
      gm.entries[static_cast<size_t>(b) * static_cast<size_t>(n) + static_cast<size_t>(a)] = v2;
    }
  }
  gm.quad_error = drift;
  return gm;
}

GramMatrix gram(const GfpFamily& f, int n_max) {
  return gram(f, n_max, build_weight(f));
}

const char* ortho_class_name(OrthoClass c) {
  switch (c) {
    case OrthoClass::Orthogonal: return "Orthogonal";
    case OrthoClass::NotOrthogonal: return "NotOrthogonal";
    case OrthoClass::Undecided: return "Undecided";
  }
  return "Undecided";
}

OrthoVerdict classify(const GfpFamily& f, int n_max, double tol) {
  OrthoVerdict v;
  if (f.g.degree() != 0) {
    v.verdict = OrthoClass::Undecided;
    v.reason = "g is not a constant; no weight construction applies";
    return v;
  }
  if (f.g.coeff(0).sign() > 0) {
    // terms of subscript 3 (Fibonacci type) resp. 2 (Lucas type) equal
    // d^2 + g resp. (p0/2)(d^2 + 2g) up to the initial data and have no real
    // roots, which rules out orthogonality with respect to a positive weight
    v.verdict = OrthoClass::NotOrthogonal;
    v.reason = "g is a positive constant: low-order terms have no real roots";
    return v;
  }
  try {
    WeightSpec w = build_weight(f);
    GramMatrix gm = gram(f, n_max, w);
    v.max_offdiag = gm.max_offdiag();
    if (v.max_offdiag <= tol) {
      v.verdict = OrthoClass::Orthogonal;
      v.reason = "Gram off-diagonals vanish under the constructed weight";
      v.weight = std::move(w);
    } else {
      v.verdict = OrthoClass::Undecided;
      v.reason = "Gram off-diagonals do not vanish under the constructed weight";
    }
  } catch (const Error& e) {
    v.verdict = OrthoClass::Undecided;
    v.reason = e.what();
  }
  return v;
}

Rational parity_vanish_integral(const GfpFamily& f, int n, int m, const Rational& a) {
  require_parity_hypotheses(f);
  if (n < 0 || m < 0) fail(ErrorCode::DomainError, "subscripts must be >= 0");
  const Polynomial product = term(f, n) * term(f, m);
  return product.integral_symmetric(a);
}

ComplementSplit complement_split(const GfpFamily& f, int n_max, const Rational& a,
                                 const Polynomial& weight) {
  require_parity_hypotheses(f);
  if (!weight.is_even_function() || weight.is_zero()) {
    fail(ErrorCode::HypothesisViolated, "the weight must be a nonzero even polynomial");
  }
  if (n_max < 1) fail(ErrorCode::DomainError, "n_max must be >= 1");
  const int lo = (f.kind == GfpKind::FibonacciType) ? 1 : 0;
  const GfpSequence seq = generate(f, n_max);

  ComplementSplit split;
  for (int k = lo; k <= n_max; ++k) {
    (k % 2 == 0 ? split.even_subscripts : split.odd_subscripts).push_back(k);
  }
  auto entry = [&](int i, int j) {
    return (seq.terms[static_cast<size_t>(i)] * seq.terms[static_cast<size_t>(j)] * weight)
        .integral_symmetric(a);
  };
  split.cross_all_zero = true;
  for (int i : split.even_subscripts) {
    for (int j : split.odd_subscripts) {
      Rational v = entry(i, j);
      if (!v.is_zero()) split.cross_all_zero = false;
      split.cross.push_back(std::move(v));
    }
  }
  for (size_t ii = 0; ii < split.even_subscripts.size(); ++ii) {
    for (size_t jj = ii; jj < split.even_subscripts.size(); ++jj) {
      split.within_even.push_back(entry(split.even_subscripts[ii], split.even_subscripts[jj]));
    }
  }
  for (size_t ii = 0; ii < split.odd_subscripts.size(); ++ii) {
    for (size_t jj = ii; jj < split.odd_subscripts.size(); ++jj) {
      split.within_odd.push_back(entry(split.odd_subscripts[ii], split.odd_subscripts[jj]));
    }
  }
  return split;
}

}  // namespace gfp
