#include <random>

#include "doctest.h"
#include "symfun/errors.hpp"
#include "symfun/ratfun.hpp"

using namespace symfun;

namespace {

RatFun R(const char* s) { return RatFun::parse(s); }

IntPoly2 lead_positive(const IntPoly2& p) { return sgn(p.leading().c) < 0 ? -p : p; }

IntPoly2 random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> ex(0, deg);
  std::vector<IntPoly2::Term> terms;
  const int n = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) terms.push_back({ex(rng), ex(rng), Int(coef(rng))});
  return IntPoly2::from_terms(std::move(terms));
}

RatFun random_ratfun(std::mt19937& rng) {
  IntPoly2 den;
  while (den.is_zero()) den = random_poly(rng, 2);
  return RatFun::make(random_poly(rng, 3), den);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPoly2 one(1L);
  const IntPoly2 q = IntPoly2::q();
  const IntPoly2 t = IntPoly2::t();
  CHECK((one - t) * (one + t) == one - t * t);
  CHECK((q + (-q)).is_zero());
  CHECK(((one - q) * (one - t)).to_string() == "1-q-t+q*t");
  CHECK((q * q - one).to_string() == "-1+q^2");
  CHECK(IntPoly2::monomial(2, 2, 1).to_string() == "2*q^2*t");
}

TEST_CASE("gcd and exact division") {
  const IntPoly2 one(1L);
  const IntPoly2 q = IntPoly2::q();
  const IntPoly2 t = IntPoly2::t();
  const IntPoly2 a = (one - t) * (one - q * t) * (one + q);
  const IntPoly2 b = (one - t) * (one + q) * (q - t * t);
  CHECK(gcd(a, b) == lead_positive((one - t) * (one + q)));
  CHECK(exact_div(a, one - q * t) == (one - t) * (one + q));
  IntPoly2 quot;
  CHECK_FALSE(try_exact_div(a, q - t, quot));
  CHECK(gcd(IntPoly2(6L) * q, IntPoly2(4L) * q * t) == IntPoly2::monomial(2, 1, 0));
  CHECK(gcd(q * q * t - t, q * t + t) == lead_positive(q * t + t));
}

TEST_CASE("gcd of random products") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly2 g = random_poly(rng, 3);
    const IntPoly2 a = random_poly(rng, 3);
    const IntPoly2 b = random_poly(rng, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const IntPoly2 d = gcd(g * a, g * b);
    IntPoly2 quot;
    REQUIRE(try_exact_div(g * a, d, quot));
    REQUIRE(try_exact_div(g * b, d, quot));
    REQUIRE(try_exact_div(d, g, quot));
  }
}

TEST_CASE("rational function arithmetic") {
  CHECK(R("1-t^2") / R("1-t") == R("1+t"));
  CHECK(R("(1-q)/(1-t)") + R("(q-q^2)/(1-t)") == R("(1-q^2)/(1-t)"));
  CHECK((R("(1-t)/(1-q*t)") * R("(1-q*t)/(1-t)")).is_one());
  CHECK_THROWS_AS(R("q") / RatFun(), DivisionByZero);
}

TEST_CASE("normalization") {
  const IntPoly2 one(1L);
  const IntPoly2 q = IntPoly2::q();
  const IntPoly2 t = IntPoly2::t();
  const RatFun r = RatFun::make(one - t * t, (one - t) * (one - q * t));
  CHECK(r == R("(1+t)/(1-q*t)"));
  CHECK(r.to_string() == "(1+t)/(1-q*t)");
  const RatFun s = RatFun::make(-q, IntPoly2(-1L));
  CHECK(s.num() == q);
  CHECK(s.den().is_one());
  CHECK(RatFun::make(IntPoly2(), one - t).is_zero());
  CHECK_THROWS_AS(RatFun::make(one, IntPoly2()), DivisionByZero);
  const RatFun w = RatFun::make(IntPoly2(6L) * q, IntPoly2(4L) - IntPoly2(4L) * t);
  CHECK(w.to_string() == "(3*q)/(2-2*t)");
  CHECK(sgn(w.den().trailing().c) > 0);
}

TEST_CASE("specialization") {
  const RatFun r = R("(1+q)*(1-t)/(1-q*t)");
  CHECK(r.specialize(RatFun(0L), std::nullopt) == R("1-t"));
  CHECK(r.specialize(std::nullopt, RatFun(1L)).is_zero());
  CHECK_THROWS_AS(R("(1-q)/(1-t)").specialize(std::nullopt, RatFun(1L)), PoleAtSpecialization);
  CHECK(R("(1-q)/(1-t)").specialize(R("t^2"), std::nullopt) == R("1+t"));
}

TEST_CASE("codec") {
  CHECK(R("(1-t)/(1-q*t)").num() == IntPoly2(1L) - IntPoly2::t());
  CHECK(R("q^2-1").to_string() == "(-1+q^2)");
  CHECK(R("q^-1 - 1").to_string() == "(1-q)/q");
  CHECK(R("0").to_string() == "0");
  CHECK(R(" 2 * q ^ 3 ").to_string() == "(2*q^3)");
  CHECK(R("1/2").to_string() == "(1)/2");
  CHECK(R("1/(2*q)").to_string() == "(1)/(2*q)");
  CHECK_THROWS_AS(R("1/(0)"), DivisionByZero);
  CHECK_THROWS_AS(R("1+"), ParseError);
  CHECK_THROWS_AS(R("(q"), ParseError);
  CHECK_THROWS_AS(R("x"), ParseError);
  try {
    R("q+*t");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("field axioms and round trip on random values") {
  std::mt19937 rng(11);
  const mpq_class q0(3, 7);
  const mpq_class t0(-5, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const RatFun a = random_ratfun(rng);
    const RatFun b = random_ratfun(rng);
    const RatFun c = random_ratfun(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK(RatFun::parse(a.to_string()) == a);
    CHECK(RatFun::make(a.num(), a.den()) == a);
    try {
      const mpq_class va = a.evaluate(q0, t0);
      const mpq_class vb = b.evaluate(q0, t0);
      CHECK((a + b).evaluate(q0, t0) == va + vb);
      CHECK((a * b).evaluate(q0, t0) == va * vb);
      CHECK((a - b).evaluate(q0, t0) == va - vb);
      if (sgn(vb) != 0) CHECK((a / b).evaluate(q0, t0) == va / vb);
    } catch (const PoleAtSpecialization&) {
    }
  }
}
