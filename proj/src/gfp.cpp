#include "gfplab/gfp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace gfp {

namespace {

Complex cpow_int(Complex z, int n) {
  Complex acc(1.0, 0.0);
  while (n > 0) {
    if (n & 1) acc *= z;
    n >>= 1;
    if (n > 0) z *= z;
  }
  return acc;
}

void validate(const GfpFamily& f) {
  if (f.d.is_zero()) fail(ErrorCode::ZeroPolynomial, "d must be nonzero");
  if (f.g.is_zero()) fail(ErrorCode::ZeroPolynomial, "g must be nonzero");
  if (f.kind == GfpKind::LucasType) {
    const Rational p0 = f.p0;
    if (!(p0 == Rational(1) || p0 == Rational(-1) || p0 == Rational(2) || p0 == Rational(-2))) {
      fail(ErrorCode::HypothesisViolated, "p0 must be one of 1, -1, 2, -2");
    }
    if (f.d != f.alpha() * f.p1) {
      fail(ErrorCode::HypothesisViolated, "d != (2/p0) p1");
    }
  }
}

std::string canonical_name(const std::string& name) {
  std::string out;
  for (char ch : name) {
    unsigned char u = static_cast<unsigned char>(ch);
    if (std::isalnum(u)) out.push_back(static_cast<char>(std::tolower(u)));
  }
  return out;
}

}  // namespace

const char* kind_name(GfpKind k) {
  return k == GfpKind::FibonacciType ? "fibonacci" : "lucas";
}

Rational GfpFamily::alpha() const {
  if (kind != GfpKind::LucasType) fail(ErrorCode::WrongKind, "alpha is defined for Lucas type");
  return Rational(2) / p0;
}

bool GfpFamily::satisfies_degree_constraint() const {
  return d.degree() > g.degree();
}

GfpFamily GfpFamily::fibonacci_type(Polynomial d, Polynomial g, std::string name) {
  GfpFamily f;
  f.kind = GfpKind::FibonacciType;
  f.d = std::move(d);
  f.g = std::move(g);
  f.name = std::move(name);
  validate(f);
  return f;
}

GfpFamily GfpFamily::lucas_type(Polynomial d, Polynomial g, Rational p0, std::string name) {
  GfpFamily f;
  f.kind = GfpKind::LucasType;
  f.d = std::move(d);
  f.g = std::move(g);
  f.p0 = p0;
  f.p1 = f.d * (p0 / Rational(2));
  f.name = std::move(name);
  validate(f);
  return f;
}

GfpFamily GfpFamily::lucas_type_from_p1(Polynomial p1, Polynomial g, Rational p0, std::string name) {
  GfpFamily f;
  f.kind = GfpKind::LucasType;
  f.p0 = p0;
  f.p1 = std::move(p1);
  if (p0.is_zero()) fail(ErrorCode::HypothesisViolated, "p0 must be nonzero");
  f.d = f.p1 * (Rational(2) / p0);
  f.g = std::move(g);
  f.name = std::move(name);
  validate(f);
  return f;
}

GfpSequence generate(const GfpFamily& f, int n_max) {
  if (n_max < 0) fail(ErrorCode::DomainError, "n_max must be >= 0");
  GfpSequence seq;
  seq.family = f;
  seq.terms.reserve(static_cast<size_t>(n_max) + 1);
  Polynomial g0, g1;
  if (f.kind == GfpKind::FibonacciType) {
    g0 = Polynomial();
    g1 = Polynomial(Rational(1));
  } else {
    g0 = Polynomial(f.p0);
    g1 = f.p1;
  }
  seq.terms.push_back(g0);
  if (n_max >= 1) seq.terms.push_back(g1);
  for (int n = 2; n <= n_max; ++n) {
    Polynomial next = f.d * seq.terms[static_cast<size_t>(n - 1)] + f.g * seq.terms[static_cast<size_t>(n - 2)];
    seq.terms.push_back(std::move(next));
  }
  return seq;
}

Polynomial expand_fibonacci_type(const GfpFamily& f, int n) {
  if (f.kind != GfpKind::FibonacciType) fail(ErrorCode::WrongKind, "expand_fibonacci_type needs a Fibonacci-type family");
  if (n < 0) fail(ErrorCode::DomainError, "n must be >= 0");
  if (n == 0) return Polynomial();
  Polynomial sum;
  for (int i = 0; 2 * i <= n - 1; ++i) {
    Rational c(binomial(static_cast<unsigned long>(n - i - 1), static_cast<unsigned long>(i)));
    sum += c * (pow(f.d, n - 2 * i - 1) * pow(f.g, i));
  }
  return sum;
}

Polynomial expand_lucas_type(const GfpFamily& f, int n) {
  if (f.kind != GfpKind::LucasType) fail(ErrorCode::WrongKind, "expand_lucas_type needs a Lucas-type family");
  if (n < 1) fail(ErrorCode::HypothesisViolated, "the Lucas expansion needs n >= 1");
  Polynomial sum;
  for (int i = 0; 2 * i <= n; ++i) {
    // n/(n-i) * C(n-i, i), kept rational; the product is in fact an integer
    Rational c = Rational(n) / Rational(n - i) * Rational(binomial(static_cast<unsigned long>(n - i), static_cast<unsigned long>(i)));
    sum += c * (pow(f.d, n - 2 * i) * pow(f.g, i));
  }
  return sum / f.alpha();
}

Polynomial term(const GfpFamily& f, int n) {
  if (n < 0) fail(ErrorCode::DomainError, "n must be >= 0");
  if (f.kind == GfpKind::FibonacciType) return expand_fibonacci_type(f, n);
  if (n == 0) return Polynomial(f.p0);
  return expand_lucas_type(f, n);
}

BinetParts binet_parts(const GfpFamily& f, Complex x0) {
  const Complex dv = f.d.eval(x0);
  const Complex gv = f.g.eval(x0);
  BinetParts parts;
  parts.disc = dv * dv + 4.0 * gv;
  if (std::abs(parts.disc) < 1e-14) {
    fail(ErrorCode::DegenerateDiscriminant, "d(x0)^2 + 4 g(x0) vanishes; a = b");
  }
  const Complex s = std::sqrt(parts.disc);
  parts.a = (dv + s) / 2.0;
  parts.b = (dv - s) / 2.0;
  return parts;
}

Complex binet_eval(const GfpFamily& f, int n, Complex x0) {
  if (n < 0) fail(ErrorCode::DomainError, "n must be >= 0");
  const BinetParts parts = binet_parts(f, x0);
  const Complex an = cpow_int(parts.a, n);
  const Complex bn = cpow_int(parts.b, n);
  if (f.kind == GfpKind::FibonacciType) {
    return (an - bn) / (parts.a - parts.b);
  }
  return (an + bn) / Complex(f.alpha().to_double(), 0.0);
}

Complex eval_term_at(const GfpFamily& f, int n, Complex x0) {
  if (n < 0) fail(ErrorCode::DomainError, "n must be >= 0");
  const Complex dv = f.d.eval(x0);
  const Complex gv = f.g.eval(x0);
  Complex g0, g1;
  if (f.kind == GfpKind::FibonacciType) {
    g0 = Complex(0.0, 0.0);
    g1 = Complex(1.0, 0.0);
  } else {
    g0 = Complex(f.p0.to_double(), 0.0);
    g1 = f.p1.eval(x0);
  }
  if (n == 0) return g0;
  for (int k = 2; k <= n; ++k) {
    const Complex g2 = dv * g1 + gv * g0;
    g0 = g1;
    g1 = g2;
  }
  return g1;
}

Complex eval_term_derivative_at(const GfpFamily& f, int n, Complex x0) {
  if (n < 0) fail(ErrorCode::DomainError, "n must be >= 0");
  const Complex dv = f.d.eval(x0);
  const Complex gv = f.g.eval(x0);
  const Complex dpv = f.d.derivative().eval(x0);
  const Complex gpv = f.g.derivative().eval(x0);
  Complex g0, g1, d0, d1;
  if (f.kind == GfpKind::FibonacciType) {
    g0 = Complex(0.0, 0.0);
    g1 = Complex(1.0, 0.0);
    d0 = d1 = Complex(0.0, 0.0);
  } else {
    g0 = Complex(f.p0.to_double(), 0.0);
    g1 = f.p1.eval(x0);
    d0 = Complex(0.0, 0.0);
    d1 = f.p1.derivative().eval(x0);
  }
  if (n == 0) return d0;
  for (int k = 2; k <= n; ++k) {
    const Complex g2 = dv * g1 + gv * g0;
    const Complex d2 = dpv * g1 + dv * d1 + gpv * g0 + gv * d0;
    g0 = g1;
    g1 = g2;
    d0 = d1;
    d1 = d2;
  }
  return d1;
}

bool parity_reflect_check(const GfpFamily& f, int n) {
  if (n < 0) fail(ErrorCode::DomainError, "n must be >= 0");
  if (!f.d.is_odd_function() || !f.g.is_even_function()) {
    fail(ErrorCode::HypothesisViolated, "reflection identity needs d odd and g even");
  }
  const Polynomial t = term(f, n);
  const int sign_exp = (f.kind == GfpKind::FibonacciType) ? n + 1 : n;
  const Rational s((sign_exp % 2 == 0) ? 1 : -1);
  return t.reflected() == s * t;
}

std::vector<GfpFamily> classical_registry() {
  const Polynomial X = Polynomial::x();
  const Polynomial one{Rational(1)};
  const Polynomial x_plus_2 = X + Polynomial(Rational(2));
  std::vector<GfpFamily> reg;
  reg.push_back(GfpFamily::fibonacci_type(X, one, "fibonacci"));
  reg.push_back(GfpFamily::lucas_type_from_p1(X, one, Rational(2), "lucas"));
  reg.push_back(GfpFamily::fibonacci_type(Rational(2) * X, one, "pell"));
  reg.push_back(GfpFamily::lucas_type_from_p1(Rational(2) * X, one, Rational(2), "pell-lucas"));
  reg.push_back(GfpFamily::lucas_type_from_p1(X, one, Rational(1), "pell-lucas-prime"));
  reg.push_back(GfpFamily::fibonacci_type(Rational(3) * X, Polynomial(Rational(-2)), "fermat"));
  reg.push_back(GfpFamily::lucas_type_from_p1(Rational(3) * X, Polynomial(Rational(-2)), Rational(2), "fermat-lucas"));
  reg.push_back(GfpFamily::fibonacci_type(Rational(2) * X, Polynomial(Rational(-1)), "chebyshev-second-kind"));
  reg.push_back(GfpFamily::lucas_type_from_p1(X, Polynomial(Rational(-1)), Rational(1), "chebyshev-first-kind"));
  reg.push_back(GfpFamily::fibonacci_type(x_plus_2, Polynomial(Rational(-1)), "morgan-voyce-b"));
  reg.push_back(GfpFamily::lucas_type_from_p1(x_plus_2, Polynomial(Rational(-1)), Rational(2), "morgan-voyce-c"));
  reg.push_back(GfpFamily::fibonacci_type(X, Polynomial(Rational(-1)), "vieta"));
  reg.push_back(GfpFamily::lucas_type_from_p1(X, Polynomial(Rational(-1)), Rational(2), "vieta-lucas"));
  return reg;
}

namespace {

std::vector<GfpFamily> registry_all() {
  std::vector<GfpFamily> reg = classical_registry();
  const Polynomial one{Rational(1)};
  const Polynomial two_x = Rational(2) * Polynomial::x();
  reg.push_back(GfpFamily::fibonacci_type(one, two_x, "jacobsthal"));
  reg.push_back(GfpFamily::lucas_type_from_p1(one, two_x, Rational(2), "jacobsthal-lucas"));
  return reg;
}

}  // namespace

std::optional<GfpFamily> registry_lookup(const std::string& name) {
  const std::string key = canonical_name(name);
  if (key.empty()) return std::nullopt;
  for (const GfpFamily& f : registry_all()) {
    if (canonical_name(f.name) == key) return f;
  }
  // common aliases
  if (key == "chebyshev2" || key == "chebyshevsecond" || key == "chebyshevu") {
    return registry_lookup("chebyshev-second-kind");
  }
  if (key == "chebyshev1" || key == "chebyshevfirst" || key == "chebyshevt") {
    return registry_lookup("chebyshev-first-kind");
  }
  if (key == "morganvoyce") return registry_lookup("morgan-voyce-b");
  if (key == "pelllucasp") return registry_lookup("pell-lucas-prime");
  return std::nullopt;
}

GfpFamily conjugate_of(const GfpFamily& f) {
  static const std::pair<const char*, const char*> kPairs[] = {
      {"lucas", "fibonacci"},
      {"pell-lucas-prime", "pell"},
      {"fermat-lucas", "fermat"},
      {"chebyshev-first-kind", "chebyshev-second-kind"},
      {"jacobsthal-lucas", "jacobsthal"},
      {"morgan-voyce-c", "morgan-voyce-b"},
      {"vieta-lucas", "vieta"},
  };
  const std::string key = canonical_name(f.name);
  for (const auto& [lucas_name, fib_name] : kPairs) {
    if (key == canonical_name(lucas_name) && f.kind == GfpKind::LucasType) {
      return *registry_lookup(fib_name);
    }
    if (key == canonical_name(fib_name) && f.kind == GfpKind::FibonacciType) {
      return *registry_lookup(lucas_name);
    }
  }
  const GfpKind target = (f.kind == GfpKind::LucasType) ? GfpKind::FibonacciType : GfpKind::LucasType;
  for (const GfpFamily& r : registry_all()) {
    if (r.kind == target && r.d == f.d && r.g == f.g) return r;
  }
  if (f.kind == GfpKind::LucasType) {
    return GfpFamily::fibonacci_type(f.d, f.g);
  }
  // generic Lucas partner: p0 = 2 makes alpha = 1, so p1 = d
  return GfpFamily::lucas_type(f.d, f.g, Rational(2));
}

}  // namespace gfp
