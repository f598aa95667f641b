#pragma once

#include <functional>
#include <vector>

namespace gfp {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Integrates f(u) / sqrt(1 - u^2) over [-1, 1]; exact for deg f <= 2n - 1.
QuadratureRule gauss_chebyshev_first(int n);

// Integrates f(u) * sqrt(1 - u^2) over [-1, 1]; exact for deg f <= 2n - 1.
QuadratureRule gauss_chebyshev_second(int n);

// Adaptive Gauss-Kronrod (G7, K15) for non-polynomial integrands. The
// embedded pair supplies the per-interval error estimate.
double adaptive_gauss_kronrod(const std::function<double(double)>& f,
                              double a, double b,
                              double tol = 1e-10, int max_depth = 48);

}  // namespace gfp
