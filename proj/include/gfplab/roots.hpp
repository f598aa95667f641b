#pragma once

#include <vector>

#include "gfplab/gfp.hpp"

namespace gfp {

// Purely imaginary root lattice of the classical families:
// Fibonacci type  2i cos(j pi / n),        j = 1..n-1  (n >= 2)
// Lucas type      2i cos((2j+1) pi / 2n),  j = 0..n-1  (n >= 1)
struct RootLattice {
  GfpKind kind;
  int n;
  std::vector<Complex> values;
};

RootLattice classical_root_lattice(GfpKind kind, int n);

struct RootSet {
  int n;
  double tolerance;
  std::vector<Complex> roots;     // sorted by (re, im)
  std::vector<double> residuals;  // |G_n(root)| via the point recurrence
};

// Roots of the n-th term by lattice transfer: solve d(r)^2 = lambda^2 g(r)
// for each lattice value lambda, keep candidates whose recurrence residual
// is within tol, dedupe within 1e-9.
RootSet gfp_roots(const GfpFamily& f, int n, double tol = 1e-8);

// All complex roots via the balanced companion matrix, with guarded Newton
// polish. Independent of the lattice path.
std::vector<Complex> all_roots_companion(const Polynomial& p);
std::vector<Complex> companion_roots(std::vector<double> coeffs);  // low to high

}  // namespace gfp
