#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "gfplab/errors.hpp"

namespace gfp {

using Integer = mpz_class;

// Exact rational scalar backed by GMP. Always canonical: gcd(num, den) = 1
// and den > 0. Recurrence coefficients grow without bound, so fixed-width
// integers are not an option here.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix freely
  Rational(int n) : v_(n) {}   // NOLINT
  Rational(const Integer& n) : v_(n) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(double d);  // exact binary expansion of d

  // Accepts "num", "num/den", optional leading minus and surrounding blanks.
  static Rational parse(const std::string& text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const;
  Rational inv() const;
  Rational pow(long e) const;  // negative e inverts; 0^negative is a DomainError

  // True when the value is the square of a rational; if so *root gets the
  // nonnegative square root.
  bool perfect_square(Rational* root = nullptr) const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace gfp
