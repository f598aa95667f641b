#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "gfplab/errors.hpp"
#include "gfplab/gfp.hpp"
#include "gfplab/roots.hpp"

using gfp::Complex;
using gfp::GfpFamily;
using gfp::GfpKind;
using gfp::Polynomial;
using gfp::Rational;

namespace {
const double kPi = 3.14159265358979323846;

GfpFamily named(const std::string& n) {
  auto f = gfp::registry_lookup(n);
  REQUIRE(f.has_value());
  return *f;
}

std::vector<Complex> sorted(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

// multiset match: the two solvers order purely imaginary roots differently
// once rounding puts +-1e-16 real parts on one side
double matched_distance(const std::vector<Complex>& a, std::vector<Complex> b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (const Complex& x : a) {
    size_t best = 0;
    for (size_t k = 1; k < b.size(); ++k) {
      if (std::abs(x - b[k]) < std::abs(x - b[best])) best = k;
    }
    worst = std::max(worst, std::abs(x - b[best]));
    b.erase(b.begin() + static_cast<long>(best));
  }
  return worst;
}
}  // namespace

TEST_CASE("classical lattices sit on the imaginary axis") {
  const auto fib = gfp::classical_root_lattice(GfpKind::FibonacciType, 5);
  REQUIRE(fib.values.size() == 4);
  for (size_t j = 0; j < fib.values.size(); ++j) {
    CHECK(fib.values[j].real() == 0.0);
    CHECK(fib.values[j].imag() ==
          doctest::Approx(2.0 * std::cos((j + 1) * kPi / 5.0)).epsilon(1e-15));
  }

  const auto luc = gfp::classical_root_lattice(GfpKind::LucasType, 3);
  REQUIRE(luc.values.size() == 3);
  for (size_t j = 0; j < luc.values.size(); ++j) {
    CHECK(luc.values[j].imag() ==
          doctest::Approx(2.0 * std::cos((2.0 * j + 1) * kPi / 6.0)).epsilon(1e-15));
  }

  CHECK_THROWS_AS(gfp::classical_root_lattice(GfpKind::FibonacciType, 1), gfp::Error);
  CHECK_THROWS_AS(gfp::classical_root_lattice(GfpKind::LucasType, 0), gfp::Error);

  // lattice values are roots of the classical polynomials themselves
  const Polynomial f5 = gfp::term(named("fibonacci"), 5);
  for (const Complex& r : fib.values) CHECK(std::abs(f5.eval(r)) < 1e-12);
  const Polynomial l3 = gfp::term(named("lucas"), 3);
  for (const Complex& r : luc.values) CHECK(std::abs(l3.eval(r)) < 1e-12);
}

TEST_CASE("transfer recovers Chebyshev roots exactly") {
  // U_3 vanishes at -sqrt(2)/2, 0, sqrt(2)/2 (subscript 4 in this indexing)
  const auto rs = gfp::gfp_roots(named("chebyshev-second-kind"), 4);
  REQUIRE(rs.roots.size() == 3);
  const double s = std::sqrt(2.0) / 2.0;
  CHECK(rs.roots[0].real() == doctest::Approx(-s).epsilon(1e-12));
  CHECK(std::abs(rs.roots[1]) < 1e-12);
  CHECK(rs.roots[2].real() == doctest::Approx(s).epsilon(1e-12));
  for (double r : rs.residuals) CHECK(r <= rs.tolerance);
}

TEST_CASE("transfer handles constant-free and repeated candidates") {
  // fermat term 3 is 9x^2 - 2: two real roots, +-sqrt(2)/3
  const auto fermat = gfp::gfp_roots(named("fermat"), 3);
  REQUIRE(fermat.roots.size() == 2);
  CHECK(fermat.roots[0].real() == doctest::Approx(-std::sqrt(2.0) / 3.0).epsilon(1e-12));
  CHECK(fermat.roots[1].real() == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-12));

  // vieta-lucas term 3 is x^3 - 3x: distinct lattice values can land on the
  // same root, dedupe must leave exactly {-sqrt(3), 0, sqrt(3)}
  const auto vl = gfp::gfp_roots(named("vieta-lucas"), 3);
  REQUIRE(vl.roots.size() == 3);
  CHECK(vl.roots[0].real() == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
  CHECK(std::abs(vl.roots[1]) < 1e-12);
  CHECK(vl.roots[2].real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("lattice transfer agrees with the companion matrix") {
  for (const GfpFamily& f : gfp::classical_registry()) {
    CAPTURE(f.name);
    for (int n = 2; n <= 12; n += 5) {
      const Polynomial t = gfp::term(f, n);
      if (t.degree() < 1) continue;
      const auto via_lattice = gfp::gfp_roots(f, n);
      const auto via_companion = gfp::all_roots_companion(t);
      CHECK(matched_distance(via_lattice.roots, via_companion) <= 1e-8);
    }
  }
}

TEST_CASE("degenerate transfer data is rejected") {
  // d = x, g = x^2 collapses d^2 = lambda^2 g to a scalar identity at n = 2
  const GfpFamily degen = GfpFamily::fibonacci_type(
      Polynomial(std::vector<Rational>{Rational(0), Rational(1)}),
      Polynomial(std::vector<Rational>{Rational(0), Rational(0), Rational(1)}));
  CHECK_THROWS_AS(gfp::gfp_roots(degen, 2), gfp::Error);
  CHECK_THROWS_AS(gfp::gfp_roots(named("fibonacci"), 0), gfp::Error);
}

TEST_CASE("companion solver stands on its own") {
  // (x - 1)(x - 2)(x - 3) = x^3 - 6x^2 + 11x - 6
  const auto roots = sorted(gfp::companion_roots({-6.0, 11.0, -6.0, 1.0}));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(roots[1].real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(roots[2].real() == doctest::Approx(3.0).epsilon(1e-12));
  for (const auto& r : roots) CHECK(std::abs(r.imag()) < 1e-12);

  // x^2 + 1: conjugate pair
  const auto imag_pair = sorted(gfp::companion_roots({1.0, 0.0, 1.0}));
  REQUIRE(imag_pair.size() == 2);
  CHECK(std::abs(imag_pair[0] - Complex(0.0, -1.0)) < 1e-12);
  CHECK(std::abs(imag_pair[1] - Complex(0.0, 1.0)) < 1e-12);

  CHECK_THROWS_AS(gfp::companion_roots({0.0}), gfp::Error);
  CHECK(gfp::companion_roots({5.0, 1.0}).size() == 1);
}

TEST_CASE("ill-conditioned expansions still pass the residual filter") {
  // Morgan-Voyce terms around n = 15 are brutal on expanded-coefficient
  // evaluation; the recurrence-based residual must stay tight anyway.
  const auto rs = gfp::gfp_roots(named("morgan-voyce-b"), 15);
  CHECK(rs.roots.size() == 14);
  for (double r : rs.residuals) CHECK(r <= 1e-8);
  for (const auto& root : rs.roots) {
    CHECK(root.real() < 0.0);
    CHECK(root.real() > -4.0);
  }
}
