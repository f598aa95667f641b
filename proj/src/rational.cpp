#include "gfplab/rational.hpp"

#include <cctype>
#include <ostream>

namespace gfp {

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorCode::DomainError, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::DomainError, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(double d) : v_(d) {}

Rational Rational::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0) {
    fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0) {
    fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  }
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::DomainError, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r = -r;
  return r;
}

Rational Rational::inv() const {
  if (is_zero()) fail(ErrorCode::DomainError, "inverse of zero");
  return Rational(den(), num());
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = *this;
  if (e < 0) {
    base = inv();
    e = -e;
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

bool Rational::perfect_square(Rational* root) const {
  if (sign() < 0) return false;
  Integer n = num(), d = den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  if (root != nullptr) {
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *root = Rational(rn, rd);
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace gfp
