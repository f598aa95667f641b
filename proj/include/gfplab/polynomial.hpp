#pragma once

#include <complex>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "gfplab/rational.hpp"

namespace gfp {

using Complex = std::complex<double>;

// Dense univariate polynomial over Rational. Coefficients run low to high and
// the representation is normalized: the stored top coefficient is nonzero, the
// zero polynomial stores nothing.
class Polynomial {
 public:
  // degree() of the zero polynomial. A sentinel rather than -1 so degree
  // arithmetic on the zero polynomial cannot silently look valid.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  Polynomial(const Rational& c0);  // NOLINT: constants promote implicitly
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(int k, const Rational& c = Rational(1));
  static Polynomial x() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const;
  const Rational& leading() const;  // DomainError on the zero polynomial
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  Complex eval(Complex x) const;
  // Horner plus a running bound on its rounding error (used to decide whether
  // a residual is distinguishable from evaluation noise).
  Complex eval_with_bound(Complex x, double* rounding_bound) const;
  // Compensated Horner; roughly doubles the working precision for real x.
  double eval_compensated(double x) const;

  Polynomial derivative() const;
  Polynomial reflected() const;  // p(-x)
  bool is_even_function() const;
  bool is_odd_function() const;
  // Exact integral over [-a, a], a >= 0.
  Rational integral_symmetric(const Rational& a) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial& operator/=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator/(Polynomial p, const Rational& s) { return p /= s; }
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rational> c_;
  void normalize();
};

Polynomial pow(const Polynomial& p, int e);  // e >= 0

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace gfp
