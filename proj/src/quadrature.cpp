#include "gfplab/quadrature.hpp"

#include <cmath>

#include "gfplab/errors.hpp"

namespace gfp {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 15-point Kronrod extension of 7-point Gauss, positive-half abscissae.
// Their correctness is pinned by the polynomial-exactness unit test
// (degree 13 for G7, degree 22 for K15).
const double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
const double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
const double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct GkEstimate {
  double kronrod;
  double err;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double kron = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kron += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) {
      gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
  }
  kron *= h;
  gauss *= h;
  return {kron, std::fabs(kron - gauss)};
}

double gk_recurse(const std::function<double(double)>& f, double a, double b,
                  double tol, int depth) {
  const GkEstimate e = gk15(f, a, b);
  if (e.err <= tol || depth <= 0) return e.kronrod;
  const double c = 0.5 * (a + b);
  return gk_recurse(f, a, c, 0.5 * tol, depth - 1) +
         gk_recurse(f, c, b, 0.5 * tol, depth - 1);
}

}  // namespace

QuadratureRule gauss_chebyshev_first(int n) {
  if (n < 1) fail(ErrorCode::DomainError, "node count must be >= 1");
  QuadratureRule r;
  r.nodes.resize(static_cast<size_t>(n));
  r.weights.assign(static_cast<size_t>(n), kPi / n);
  for (int k = 1; k <= n; ++k) {
    r.nodes[static_cast<size_t>(k - 1)] = std::cos((2.0 * k - 1.0) * kPi / (2.0 * n));
  }
  return r;
}

QuadratureRule gauss_chebyshev_second(int n) {
  if (n < 1) fail(ErrorCode::DomainError, "node count must be >= 1");
  QuadratureRule r;
  r.nodes.resize(static_cast<size_t>(n));
  r.weights.resize(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const double t = static_cast<double>(k) * kPi / (n + 1.0);
    const double s = std::sin(t);
    r.nodes[static_cast<size_t>(k - 1)] = std::cos(t);
    r.weights[static_cast<size_t>(k - 1)] = kPi / (n + 1.0) * s * s;
  }
  return r;
}

double adaptive_gauss_kronrod(const std::function<double(double)>& f,
                              double a, double b, double tol, int max_depth) {
  if (!(a < b)) fail(ErrorCode::DomainError, "empty integration interval");
  return gk_recurse(f, a, b, tol, max_depth);
}

}  // namespace gfp
