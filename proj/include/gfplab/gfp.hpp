#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfplab/polynomial.hpp"

namespace gfp {

enum class GfpKind { FibonacciType, LucasType };

const char* kind_name(GfpKind k);

// A generalized Fibonacci polynomial family G_n = d G_{n-1} + g G_{n-2},
// Fibonacci type starting (0, 1), Lucas type starting (p0, p1) with
// d = (2/p0) p1 and p0 in {1, -1, 2, -2}.
//
// The classical degree constraint deg d > deg g is advisory at construction
// (the Jacobsthal pair has d = 1, g = 2x and must remain constructible);
// consumers whose math needs it check satisfies_degree_constraint().
struct GfpFamily {
  GfpKind kind = GfpKind::FibonacciType;
  Polynomial d, g;
  Rational p0;    // Lucas type only
  Polynomial p1;  // Lucas type only
  std::string name;

  Rational alpha() const;  // 2/p0
  bool satisfies_degree_constraint() const;

  static GfpFamily fibonacci_type(Polynomial d, Polynomial g, std::string name = "");
  // p1 derived as d p0 / 2.
  static GfpFamily lucas_type(Polynomial d, Polynomial g, Rational p0, std::string name = "");
  // d derived as (2/p0) p1.
  static GfpFamily lucas_type_from_p1(Polynomial p1, Polynomial g, Rational p0, std::string name = "");
};

struct GfpSequence {
  GfpFamily family;
  std::vector<Polynomial> terms;  // terms[n] = G_n for n = 0..n_max
};

// Exact terms 0..n_max by the recurrence.
GfpSequence generate(const GfpFamily& f, int n_max);

// Closed-form binomial expansions; exact, independent of the recurrence.
Polynomial expand_fibonacci_type(const GfpFamily& f, int n);  // n >= 0
Polynomial expand_lucas_type(const GfpFamily& f, int n);      // n >= 1

// Kind-dispatched closed form, total for n >= 0.
Polynomial term(const GfpFamily& f, int n);

struct BinetParts {
  Complex a, b;   // a + b = d(x0), a b = -g(x0)
  Complex disc;   // d(x0)^2 + 4 g(x0) = (a - b)^2
};

BinetParts binet_parts(const GfpFamily& f, Complex x0);
Complex binet_eval(const GfpFamily& f, int n, Complex x0);

// Three-term recurrence evaluated at the point; numerically stable where the
// expanded coefficients are not.
Complex eval_term_at(const GfpFamily& f, int n, Complex x0);
Complex eval_term_derivative_at(const GfpFamily& f, int n, Complex x0);

// Exact reflection identity for d odd, g even: G_n(-x) = s G_n(x) with
// s = (-1)^(n+1) for Fibonacci type and s = (-1)^n for Lucas type.
bool parity_reflect_check(const GfpFamily& f, int n);

// The thirteen named classical families.
std::vector<GfpFamily> classical_registry();
// The thirteen classical names plus the Jacobsthal pair; matching ignores case and
// punctuation ("Pell-Lucas" == "pell lucas" == "PELL_LUCAS").
std::optional<GfpFamily> registry_lookup(const std::string& name);
// Same-(d, g) partner of the opposite kind; classical pairs by name, generic
// Lucas partner (p0 = 2, p1 = d) otherwise.
GfpFamily conjugate_of(const GfpFamily& f);

}  // namespace gfp
