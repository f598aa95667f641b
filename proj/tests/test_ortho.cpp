#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "gfplab/errors.hpp"
#include "gfplab/gfp.hpp"
#include "gfplab/ortho.hpp"
#include "gfplab/quadrature.hpp"

using gfp::GfpFamily;
using gfp::GfpKind;
using gfp::OrthoClass;
using gfp::Polynomial;
using gfp::Rational;
using gfp::WeightKind;
using gfp::WeightSpec;

namespace {
const double kPi = 3.14159265358979323846;

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

GfpFamily named(const std::string& n) {
  auto f = gfp::registry_lookup(n);
  REQUIRE(f.has_value());
  return *f;
}

gfp::ErrorCode code_of(const std::function<void()>& op) {
  try {
    op();
  } catch (const gfp::Error& e) {
    return e.code();
  }
  FAIL("expected a gfp::Error");
  return gfp::ErrorCode::DomainError;
}
}  // namespace

TEST_CASE("weight construction needs a negative constant g") {
  CHECK(code_of([] { gfp::build_weight(named("fibonacci")); }) == gfp::ErrorCode::PositiveG);
  CHECK(code_of([] { gfp::build_weight(named("pell-lucas")); }) == gfp::ErrorCode::PositiveG);
  CHECK(code_of([] { gfp::build_weight(named("jacobsthal")); }) == gfp::ErrorCode::PositiveG);

  const GfpFamily even_d = GfpFamily::fibonacci_type(poly({0, 0, 1}), poly({-1}));
  CHECK(code_of([&] { gfp::build_weight(even_d); }) == gfp::ErrorCode::NonMonotoneD);

  // x^3 - 3x + 1 pins the support endpoints on different branches, so the
  // interval straddles a turning point
  const GfpFamily straddle = GfpFamily::fibonacci_type(poly({1, -3, 0, 1}), poly({-1}));
  CHECK(code_of([&] { gfp::build_weight(straddle); }) == gfp::ErrorCode::NonMonotoneD);
}

TEST_CASE("a monotone branch of a wiggly d still carries the weight") {
  // x^3 - 4x is decreasing on the inner branch that alone reaches +-2
  const GfpFamily wiggle = GfpFamily::fibonacci_type(poly({0, -4, 0, 1}), poly({-1}));
  const WeightSpec w = gfp::build_weight(wiggle);
  CHECK(w.s2 == doctest::Approx(-w.s1).epsilon(1e-12));
  CHECK(w.s2 < 0.6);
  CHECK(w.family.d.eval(w.s1) == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(w.family.d.eval(w.s2) == doctest::Approx(-2.0).epsilon(1e-11));
  CHECK(w.mass == doctest::Approx(2 * kPi).epsilon(1e-12));
  CHECK(gfp::gram(wiggle, 3, w).max_offdiag() < 1e-8);
}

TEST_CASE("weight geometry for the Chebyshev-like families") {
  const WeightSpec w2 = gfp::build_weight(named("chebyshev-second-kind"));
  CHECK(w2.kind == WeightKind::FibonacciWeight);
  CHECK(w2.big_g == Rational(1));
  CHECK(w2.s1 == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(w2.s2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w2.mass == doctest::Approx(2 * kPi).epsilon(1e-14));
  CHECK(w2.density(0.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(w2.density(1.5) == 0.0);
  CHECK(w2.density(-1.5) == 0.0);

  const WeightSpec w1 = gfp::build_weight(named("chebyshev-first-kind"));
  CHECK(w1.kind == WeightKind::LucasWeight);
  CHECK(w1.mass == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(w1.density(0.0) == doctest::Approx(1.0).epsilon(1e-14));

  const WeightSpec wf = gfp::build_weight(named("fermat"));
  CHECK(wf.big_g == Rational(2));
  CHECK(wf.s1 == doctest::Approx(-2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-14));
  CHECK(wf.s2 == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-14));
  CHECK(wf.mass == doctest::Approx(4 * kPi).epsilon(1e-13));
}

TEST_CASE("diagonal inner products follow the closed-form law") {
  // Fibonacci type: <F_n, F_n> = 2 pi G^n
  const GfpFamily fermat = named("fermat");
  const WeightSpec wf = gfp::build_weight(fermat);
  const auto fseq = gfp::generate(fermat, 6);
  for (int n = 1; n <= 6; ++n) {
    const double expect = 2.0 * kPi * std::pow(2.0, n);
    CHECK(gfp::inner_product(fseq.terms[n], fseq.terms[n], wf) ==
          doctest::Approx(expect).epsilon(1e-11));
  }

  // Lucas type: <L_0, L_0> = p0^2 pi, <L_n, L_n> = p0^2 G^n pi / 2
  const GfpFamily cheb1 = named("chebyshev-first-kind");
  const WeightSpec w1 = gfp::build_weight(cheb1);
  const auto tseq = gfp::generate(cheb1, 6);
  CHECK(gfp::inner_product(tseq.terms[0], tseq.terms[0], w1) ==
        doctest::Approx(kPi).epsilon(1e-13));
  for (int n = 1; n <= 6; ++n) {
    CHECK(gfp::inner_product(tseq.terms[n], tseq.terms[n], w1) ==
          doctest::Approx(kPi / 2).epsilon(1e-12));
  }

  const GfpFamily fl = named("fermat-lucas");
  const WeightSpec wfl = gfp::build_weight(fl);
  const auto lseq = gfp::generate(fl, 5);
  CHECK(gfp::inner_product(lseq.terms[0], lseq.terms[0], wfl) ==
        doctest::Approx(4 * kPi).epsilon(1e-12));
  for (int n = 1; n <= 5; ++n) {
    CHECK(gfp::inner_product(lseq.terms[n], lseq.terms[n], wfl) ==
          doctest::Approx(2.0 * kPi * std::pow(2.0, n)).epsilon(1e-11));
  }
}

TEST_CASE("quadrature inner product matches an adaptive integrator") {
  const GfpFamily cheb2 = named("chebyshev-second-kind");
  const WeightSpec w = gfp::build_weight(cheb2);
  const auto seq = gfp::generate(cheb2, 4);
  const Polynomial& f2 = seq.terms[2];
  const Polynomial& f4 = seq.terms[4];

  const double direct = gfp::inner_product(f2, f4, w);
  const double oracle = gfp::adaptive_gauss_kronrod(
      [&](double x) { return w.density(x) * f2.eval(x) * f4.eval(x); },
      w.s1, w.s2, 1e-11);
  CHECK(std::fabs(direct - oracle) < 1e-8);

  const double diag = gfp::inner_product(f2, f2, w);
  const double diag_oracle = gfp::adaptive_gauss_kronrod(
      [&](double x) { return w.density(x) * f2.eval(x) * f2.eval(x); },
      w.s1, w.s2, 1e-11);
  CHECK(diag == doctest::Approx(2 * kPi).epsilon(1e-12));
  CHECK(std::fabs(diag - diag_oracle) < 1e-8);
}

TEST_CASE("non-affine monotone d still yields an orthogonal family") {
  // closed-form inverse: d = x^3
  const GfpFamily cubic = GfpFamily::fibonacci_type(poly({0, 0, 0, 1}), poly({-1}), "cubic");
  const WeightSpec wc = gfp::build_weight(cubic);
  CHECK(wc.monomial_form);
  CHECK(wc.mono_t == 3);
  CHECK(wc.s2 == doctest::Approx(std::cbrt(2.0)).epsilon(1e-13));
  CHECK(wc.mass == doctest::Approx(2 * kPi).epsilon(1e-13));
  const auto gm = gfp::gram(cubic, 4, wc);
  CHECK(gm.max_offdiag() < 1e-9);
  CHECK(gm.at(2, 2) == doctest::Approx(2 * kPi).epsilon(1e-11));

  // bisection inverse: d = x^3 + x
  const GfpFamily mixed = GfpFamily::fibonacci_type(poly({0, 1, 0, 1}), poly({-1}), "mixed");
  const WeightSpec wm = gfp::build_weight(mixed);
  CHECK(!wm.monomial_form);
  CHECK(wm.mass == doctest::Approx(2 * kPi).epsilon(1e-13));
  // d(s2) = 2 at s2 = 1
  CHECK(wm.s2 == doctest::Approx(1.0).epsilon(1e-12));
  const auto gm2 = gfp::gram(mixed, 3, wm);
  CHECK(gm2.max_offdiag() < 1e-8);
}

TEST_CASE("gram matrix bookkeeping") {
  const auto gm_fib_kind = gfp::gram(named("vieta"), 5);
  CHECK(gm_fib_kind.lo == 1);
  CHECK(gm_fib_kind.hi == 5);
  CHECK(gm_fib_kind.size() == 5);
  CHECK(gm_fib_kind.at(2, 3) == gm_fib_kind.at(3, 2));
  CHECK(gm_fib_kind.quad_error < 1e-10);
  CHECK_THROWS_AS(gm_fib_kind.at(0, 1), gfp::Error);
  CHECK_THROWS_AS(gm_fib_kind.at(1, 6), gfp::Error);

  const auto gm_lucas_kind = gfp::gram(named("vieta-lucas"), 5);
  CHECK(gm_lucas_kind.lo == 0);
  CHECK(gm_lucas_kind.size() == 6);
  CHECK(gm_lucas_kind.max_diag() > 0.0);
  CHECK(gm_lucas_kind.max_offdiag() < 1e-9);
}

TEST_CASE("classification sorts the registry as expected") {
  const std::set<std::string> not_orth = {
      "fibonacci", "lucas", "pell", "pell-lucas", "pell-lucas-prime"};
  for (const GfpFamily& f : gfp::classical_registry()) {
    CAPTURE(f.name);
    const auto v = gfp::classify(f, 10, 1e-8);
    if (not_orth.count(f.name)) {
      CHECK(v.verdict == OrthoClass::NotOrthogonal);
      CHECK(!v.weight.has_value());
    } else {
      CHECK(v.verdict == OrthoClass::Orthogonal);
      REQUIRE(v.weight.has_value());
      CHECK(v.max_offdiag <= 1e-8);
    }
  }
  const auto jv = gfp::classify(named("jacobsthal"));
  CHECK(jv.verdict == OrthoClass::Undecided);
  CHECK(std::string(gfp::ortho_class_name(jv.verdict)) == "Undecided");
}

TEST_CASE("cross-parity Lebesgue integrals vanish exactly") {
  const GfpFamily fib = named("fibonacci");
  CHECK(gfp::parity_vanish_integral(fib, 2, 3, Rational(1)) == Rational(0));
  CHECK(gfp::parity_vanish_integral(fib, 1, 4, Rational(2)) == Rational(0));
  CHECK(gfp::parity_vanish_integral(fib, 5, 2, Rational(5, 2)) == Rational(0));
  // same parity: F_1 F_3 = x^2 + 1 over [-1, 1] -> 8/3
  CHECK(gfp::parity_vanish_integral(fib, 1, 3, Rational(1)) == Rational(8, 3));

  const GfpFamily lucas = named("lucas");
  CHECK(gfp::parity_vanish_integral(lucas, 0, 1, Rational(1)) == Rational(0));
  CHECK(gfp::parity_vanish_integral(lucas, 1, 2, Rational(3)) == Rational(0));

  CHECK_THROWS_AS(gfp::parity_vanish_integral(named("morgan-voyce-b"), 1, 2, Rational(1)),
                  gfp::Error);
}

TEST_CASE("complement split separates subscript parities") {
  const auto split = gfp::complement_split(named("fibonacci"), 6, Rational(1));
  CHECK(split.even_subscripts == std::vector<int>{2, 4, 6});
  CHECK(split.odd_subscripts == std::vector<int>{1, 3, 5});
  CHECK(split.cross_all_zero);
  for (const Rational& r : split.cross) CHECK(r == Rational(0));
  REQUIRE(!split.within_even.empty());
  REQUIRE(!split.within_odd.empty());
  // diagonals of each block are strict-positive integrals
  CHECK(split.within_odd.front() > Rational(0));
  CHECK(split.within_even.front() > Rational(0));

  // an even polynomial weight keeps the split exact
  const auto weighted = gfp::complement_split(named("lucas"), 4, Rational(2), poly({1, 0, 1}));
  CHECK(weighted.cross_all_zero);
  CHECK(weighted.even_subscripts == std::vector<int>{0, 2, 4});

  CHECK_THROWS_AS(gfp::complement_split(named("fibonacci"), 4, Rational(1), poly({0, 1})),
                  gfp::Error);
  CHECK_THROWS_AS(gfp::complement_split(named("morgan-voyce-b"), 4, Rational(1)), gfp::Error);
}
