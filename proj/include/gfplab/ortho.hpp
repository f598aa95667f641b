#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfplab/gfp.hpp"

namespace gfp {

enum class WeightKind { FibonacciWeight, LucasWeight };

// Orthogonality weight for a family with constant negative g = -big_g.
// Unnormalized densities on the support [s1, s2], where d(s1) = -2 sqrt(big_g)
// and d(s2) = +2 sqrt(big_g):
//   FibonacciWeight: sqrt(4 big_g - d(x)^2) |d'(x)|
//   LucasWeight:     |d'(x)| / sqrt(4 big_g - d(x)^2)
// The substitution u = d(x) / (2 sqrt(big_g)) turns both into classical
// Chebyshev weights on [-1, 1].
struct WeightSpec {
  GfpFamily family;
  WeightKind kind = WeightKind::FibonacciWeight;
  Rational big_g;
  double s1 = 0.0, s2 = 0.0;
  double mass = 0.0;   // integral of the unnormalized density, by quadrature
  double scale = 1.0;  // multiplies the density; linearity hook

  // d = mono_c x^mono_t + mono_h when monomial_form; otherwise the inverse
  // substitution falls back to bisection on the (monotone) d.
  bool monomial_form = false;
  double mono_c = 0.0, mono_h = 0.0;
  int mono_t = 1;

  double density(double x) const;  // 0 outside the open support
  double x_of_u(double u) const;   // inverse of u = d(x) / (2 sqrt(big_g))
};

WeightSpec build_weight(const GfpFamily& f);

// Weighted inner product of two polynomials by substituted Gauss-Chebyshev
// quadrature; exact (up to rounding) when the substitution is affine.
double inner_product(const Polynomial& p, const Polynomial& q, const WeightSpec& w);

struct GramMatrix {
  int lo = 0, hi = 0;  // subscript range: 1..n_max Fibonacci type, 0..n_max Lucas type
  std::vector<double> entries;  // row-major, size() x size()
  double quad_error = 0.0;      // node-doubling drift, max over entries
  int size() const { return hi - lo + 1; }
  double at(int i, int j) const;  // i, j are subscripts in [lo, hi]
  double max_offdiag() const;
  double max_diag() const;
};

GramMatrix gram(const GfpFamily& f, int n_max, const WeightSpec& w);
GramMatrix gram(const GfpFamily& f, int n_max);

enum class OrthoClass { Orthogonal, NotOrthogonal, Undecided };

const char* ortho_class_name(OrthoClass c);

struct OrthoVerdict {
  OrthoClass verdict = OrthoClass::Undecided;
  std::string reason;
  std::optional<WeightSpec> weight;
  double max_offdiag = 0.0;  // meaningful when a Gram matrix was computed
};

OrthoVerdict classify(const GfpFamily& f, int n_max = 10, double tol = 1e-8);

// Exact integral of G_n G_m over [-a, a] (Lebesgue weight). Zero exactly for
// subscripts of different parity when d is odd and g is even.
Rational parity_vanish_integral(const GfpFamily& f, int n, int m, const Rational& a);

struct ComplementSplit {
  std::vector<int> even_subscripts, odd_subscripts;
  std::vector<Rational> cross;  // every cross-block inner product, exact
  std::vector<Rational> within_even, within_odd;  // upper triangles, diagonal included
  bool cross_all_zero = false;
};

// Splits terms by subscript parity and integrates exactly against an even
// polynomial weight on [-a, a].
ComplementSplit complement_split(const GfpFamily& f, int n_max, const Rational& a,
                                 const Polynomial& weight = Polynomial(Rational(1)));

}  // namespace gfp
