#include "gfplab/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace gfp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDedupe = 1e-9;

bool lex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Diagonal similarity scaling (Parlett-Reinsch); leaves eigenvalues intact,
// improves their conditioning for companion matrices.
void balance(Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  bool converged = false;
  int guard = 0;
  while (!converged && guard++ < 100) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      double row = m.row(i).lpNorm<1>() - std::fabs(m(i, i));
      double col = m.col(i).lpNorm<1>() - std::fabs(m(i, i));
      if (row == 0.0 || col == 0.0) continue;
      const double s = row + col;
      double factor = 1.0;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        factor *= 2.0;
      }
      while (col > row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        factor /= 2.0;
      }
      if (row + col < 0.95 * s) {
        converged = false;
        m.row(i) /= factor;
        m.col(i) *= factor;
      }
    }
  }
}

Complex horner(const std::vector<double>& c, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Double-double helpers. Plain Horner on high-degree expansions (Morgan-Voyce
// around n = 15) bottoms out near 1e-6 absolute; Newton cannot polish through
// that floor, so residual evaluation runs in compensated arithmetic.
struct DD {
  double hi = 0.0, lo = 0.0;
};

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD dd_norm(double hi, double lo) {
  const DD s = two_sum(hi, lo);
  return s;
}

DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  return dd_norm(s.hi, s.lo + a.lo + b.lo);
}

DD dd_mul_d(DD a, double b) {
  const double p = a.hi * b;
  const double err = std::fma(a.hi, b, -p);
  return dd_norm(p, err + a.lo * b);
}

struct CDD {
  DD re, im;
};

// acc * z + c with z and c in plain doubles
CDD cdd_fma(const CDD& acc, Complex z, double c) {
  const DD rr = dd_mul_d(acc.re, z.real());
  const DD ii = dd_mul_d(acc.im, z.imag());
  const DD ri = dd_mul_d(acc.re, z.imag());
  const DD ir = dd_mul_d(acc.im, z.real());
  CDD out;
  out.re = dd_add(dd_add(rr, {-ii.hi, -ii.lo}), {c, 0.0});
  out.im = dd_add(ri, ir);
  return out;
}

Complex horner_dd(const std::vector<double>& c, Complex z) {
  CDD acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = cdd_fma(acc, z, *it);
  return Complex(acc.re.hi, acc.im.hi);
}

Complex polish(const std::vector<double>& c, const std::vector<double>& dc, Complex z) {
  double best = std::abs(horner_dd(c, z));
  for (int it = 0; it < 6; ++it) {
    const Complex pv = horner_dd(c, z);
    if (std::abs(pv) == 0.0) break;
    const Complex dv = horner(dc, z);
    if (std::abs(dv) == 0.0) break;
    const Complex step = pv / dv;
    const Complex znew = z - step;
    const double residual = std::abs(horner_dd(c, znew));
    if (residual >= best) break;
    z = znew;
    best = residual;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(z)) break;
  }
  return z;
}

}  // namespace

RootLattice classical_root_lattice(GfpKind kind, int n) {
  RootLattice lat;
  lat.kind = kind;
  lat.n = n;
  if (kind == GfpKind::FibonacciType) {
    if (n < 2) fail(ErrorCode::HypothesisViolated, "Fibonacci-type lattice needs n >= 2");
    for (int j = 1; j <= n - 1; ++j) {
      lat.values.emplace_back(0.0, 2.0 * std::cos(j * kPi / n));
    }
  } else {
    if (n < 1) fail(ErrorCode::HypothesisViolated, "Lucas-type lattice needs n >= 1");
    for (int j = 0; j <= n - 1; ++j) {
      lat.values.emplace_back(0.0, 2.0 * std::cos((2.0 * j + 1.0) * kPi / (2.0 * n)));
    }
  }
  return lat;
}

std::vector<Complex> companion_roots(std::vector<double> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.empty()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg == 0) return {};
  if (deg == 1) return {Complex(-coeffs[0] / coeffs[1], 0.0)};

  std::vector<double> dc(static_cast<size_t>(deg));
  for (int k = 1; k <= deg; ++k) dc[static_cast<size_t>(k - 1)] = k * coeffs[static_cast<size_t>(k)];

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) {
    comp(i, deg - 1) = -coeffs[static_cast<size_t>(i)] / coeffs[static_cast<size_t>(deg)];
  }
  balance(comp);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) fail(ErrorCode::NoRootsFound, "eigenvalue iteration failed");

  std::vector<Complex> roots;
  roots.reserve(static_cast<size_t>(deg));
  for (int i = 0; i < deg; ++i) {
    const auto ev = solver.eigenvalues()[i];
    roots.push_back(polish(coeffs, dc, Complex(ev.real(), ev.imag())));
  }
  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

std::vector<Complex> all_roots_companion(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<double> c(static_cast<size_t>(p.degree()) + 1);
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<size_t>(k)] = p.coeff(k).to_double();
  return companion_roots(std::move(c));
}

RootSet gfp_roots(const GfpFamily& f, int n, double tol) {
  if (f.kind == GfpKind::FibonacciType && n < 2) {
    fail(ErrorCode::HypothesisViolated, "Fibonacci-type roots need n >= 2");
  }
  if (f.kind == GfpKind::LucasType && n < 1) {
    fail(ErrorCode::HypothesisViolated, "Lucas-type roots need n >= 1");
  }
  if (!(tol > 0.0)) fail(ErrorCode::DomainError, "tolerance must be positive");

  const RootLattice lat = classical_root_lattice(f.kind, n);
  const bool d_linear = f.d.degree() == 1;
  const bool g_const = f.g.degree() <= 0;

  std::vector<Complex> candidates;
  for (const Complex& lambda : lat.values) {
    const double lam2 = -std::norm(lambda);  // lambda is purely imaginary
    if (d_linear && g_const) {
      // (a1 r + a0)^2 = lam2 g0
      const double a1 = f.d.coeff(1).to_double();
      const double a0 = f.d.coeff(0).to_double();
      const Complex s = std::sqrt(Complex(lam2 * f.g.coeff(0).to_double(), 0.0));
      candidates.push_back((-a0 + s) / a1);
      candidates.push_back((-a0 - s) / a1);
    } else {
      Polynomial target = f.d * f.d;
      std::vector<double> c(static_cast<size_t>(std::max(target.degree(), f.g.degree())) + 1, 0.0);
      for (int k = 0; k <= target.degree(); ++k) c[static_cast<size_t>(k)] = target.coeff(k).to_double();
      for (int k = 0; k <= f.g.degree(); ++k) c[static_cast<size_t>(k)] -= lam2 * f.g.coeff(k).to_double();
      while (!c.empty() && c.back() == 0.0) c.pop_back();
      if (c.size() <= 1) continue;  // constant: no candidate for this lattice value
      for (const Complex& r : companion_roots(std::move(c))) candidates.push_back(r);
    }
  }

  RootSet out;
  out.n = n;
  out.tolerance = tol;
  for (const Complex& r : candidates) {
    if (std::abs(f.g.eval(r)) < 1e-12) {
      fail(ErrorCode::DegenerateG, "g vanishes at a transfer candidate");
    }
    const double res = std::abs(eval_term_at(f, n, r));
    if (res > tol) continue;
    bool dup = false;
    for (const Complex& kept : out.roots) {
      if (std::abs(kept - r) <= kDedupe) {
        dup = true;
        break;
      }
    }
    if (!dup) out.roots.push_back(r);
  }
  if (out.roots.empty()) {
    fail(ErrorCode::NoRootsFound, "no transfer candidate passed the residual filter");
  }
  std::sort(out.roots.begin(), out.roots.end(), lex_less);
  out.residuals.reserve(out.roots.size());
  for (const Complex& r : out.roots) {
    out.residuals.push_back(std::abs(eval_term_at(f, n, r)));
  }
  return out;
}

}  // namespace gfp
