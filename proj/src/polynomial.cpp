#include "gfplab/polynomial.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace gfp {

Polynomial::Polynomial(const Rational& c0) {
  if (!c0.is_zero()) c_.push_back(c0);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::monomial(int k, const Rational& c) {
  if (k < 0) fail(ErrorCode::DomainError, "negative monomial exponent");
  Polynomial p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) fail(ErrorCode::DomainError, "leading coefficient of the zero polynomial");
  return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + it->to_double();
  }
  return acc;
}

Complex Polynomial::eval(Complex x) const {
  Complex acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + Complex(it->to_double(), 0.0);
  }
  return acc;
}

Complex Polynomial::eval_with_bound(Complex x, double* rounding_bound) const {
  Complex acc(0.0, 0.0);
  double mag = 0.0;  // Horner on |c_k|, |x|: bounds the condition sum
  const double ax = std::abs(x);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + Complex(it->to_double(), 0.0);
    mag = mag * ax + std::fabs(it->to_double());
  }
  if (rounding_bound != nullptr) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double n = c_.empty() ? 1.0 : static_cast<double>(c_.size());
    *rounding_bound = (4.0 * n + 2.0) * eps * mag;
  }
  return acc;
}

double Polynomial::eval_compensated(double x) const {
  // Compensated Horner: track the exact rounding residue of every fma step
  // with error-free transformations, then add it back once.
  double acc = 0.0;
  double err = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const double p = acc * x;
    const double pi = std::fma(acc, x, -p);  // exact product residue
    const double c = it->to_double();
    const double s = p + c;
    const double t = s - p;
    const double sigma = (p - (s - t)) + (c - t);  // exact sum residue
    acc = s;
    err = err * x + (pi + sigma);
  }
  return acc + err;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) {
    d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> d = c_;
  for (size_t k = 1; k < d.size(); k += 2) d[k] = -d[k];
  return Polynomial(std::move(d));
}

bool Polynomial::is_even_function() const {
  for (size_t k = 1; k < c_.size(); k += 2) {
    if (!c_[k].is_zero()) return false;
  }
  return true;
}

bool Polynomial::is_odd_function() const {
  for (size_t k = 0; k < c_.size(); k += 2) {
    if (!c_[k].is_zero()) return false;
  }
  return true;
}

Rational Polynomial::integral_symmetric(const Rational& a) const {
  if (a.sign() < 0) fail(ErrorCode::DomainError, "negative half-width");
  Rational total(0);
  for (size_t k = 0; k < c_.size(); k += 2) {
    // odd powers integrate to zero over [-a, a]
    total += c_[k] * Rational(2) * a.pow(static_cast<long>(k) + 1) / Rational(static_cast<long>(k) + 1);
  }
  return total;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s) {
  if (s.is_zero()) fail(ErrorCode::DomainError, "division by zero");
  for (auto& c : c_) c /= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Polynomial(std::move(r));
}

Polynomial pow(const Polynomial& p, int e) {
  if (e < 0) fail(ErrorCode::DomainError, "negative polynomial power");
  Polynomial acc{Rational(1)};
  Polynomial base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

std::string Polynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1));
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) {
        if (mag.is_integer()) {
          os << mag.str();
        } else {
          os << "(" << mag.str() << ")";
        }
      }
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.str();
}

}  // namespace gfp
