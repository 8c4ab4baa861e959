#include <doctest.h>

#include <random>

#include "error.hpp"
#include "multipoly.hpp"

using hkl::Rational;
using hkl::poly::MultiPoly;

namespace {

const std::vector<std::string> kVars{"x0", "x1", "x2"};

MultiPoly random_poly(std::mt19937_64& rng, unsigned max_deg = 3, int terms = 5) {
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 4), exp(0, static_cast<int>(max_deg));
  MultiPoly p(kVars);
  for (int i = 0; i < terms; ++i)
    p.add_term({static_cast<uint32_t>(exp(rng)), static_cast<uint32_t>(exp(rng)), static_cast<uint32_t>(exp(rng))},
               hkl::frac(coef(rng), den(rng)));
  return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  return {hkl::frac(num(rng), den(rng)), hkl::frac(num(rng), den(rng)), hkl::frac(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("serialization is canonical grlex and round-trips") {
  auto p = MultiPoly::parse("3/2*x1 - 2*x0*x2^2 + x0^2", kVars);
  CHECK(p.to_string() == "-2*x0*x2^2 + x0^2 + 3/2*x1");
  CHECK(MultiPoly::parse(p.to_string(), kVars) == p);
  CHECK(MultiPoly::parse("0", kVars).to_string() == "0");
  CHECK(MultiPoly::parse("-(x0 - 1)^2", kVars).to_string() == "-x0^2 + 2*x0 - 1");
  CHECK(MultiPoly::parse("x0/3", kVars).to_string() == "1/3*x0");
}

TEST_CASE("parse errors are reported") {
  CHECK_THROWS_AS(MultiPoly::parse("x0 +", kVars), hkl::Error);
  CHECK_THROWS_AS(MultiPoly::parse("y", kVars), hkl::Error);
  CHECK_THROWS_AS(MultiPoly::parse("x0/x1", kVars), hkl::Error);
  CHECK_THROWS_AS(MultiPoly::parse("(x0", kVars), hkl::Error);
  CHECK_THROWS_AS(hkl::parse_rational("1/0"), hkl::Error);
  CHECK(hkl::parse_rational("-6/4") == Rational(-3, 2));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(MultiPoly::parse(a.to_string(), kVars) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_poly(rng), b = random_poly(rng);
    auto pt = random_point(rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK(a.pow(3).evaluate(pt) == hkl::pow(a.evaluate(pt), 3));
  }
}

TEST_CASE("substitution commutes with evaluation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_poly(rng), e = random_poly(rng, 2, 3);
    auto pt = random_point(rng);
    auto moved = pt;
    moved[1] = e.evaluate(pt);
    CHECK(a.substitute("x1", e).evaluate(pt) == a.evaluate(moved));
  }
}

TEST_CASE("derivative obeys the product rule") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_poly(rng), b = random_poly(rng);
    CHECK((a * b).derivative("x2") == a.derivative("x2") * b + a * b.derivative("x2"));
  }
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    auto q = hkl::poly::divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  auto x0 = MultiPoly::variable(kVars, "x0"), x1 = MultiPoly::variable(kVars, "x1");
  CHECK_FALSE(hkl::poly::divide_exact(x0 + x1, x0).has_value());
}

TEST_CASE("coefficient extraction and variable remapping") {
  auto p = MultiPoly::parse("t^2*x0 + 3*t^2*x1^2 + t + 5", {"x0", "x1", "t"});
  CHECK(p.coefficient_of("t", 2).to_string() == "3*x1^2 + x0");
  CHECK(p.coefficient_of("t", 0).to_string() == "5");
  auto q = MultiPoly::parse("x1 + 1", {"x0", "x1"});
  auto r = q.with_variables({"x1", "z"});
  CHECK(r.to_string() == "x1 + 1");
  CHECK_THROWS_AS(q.with_variables({"z"}), hkl::Error);
  auto s = hkl::poly::arith(MultiPoly::parse("a + b"), MultiPoly::parse("b + c"), hkl::poly::ArithOp::Mul);
  CHECK(s.to_string() == "a*b + a*c + b^2 + b*c");
}

TEST_CASE("monomial enumeration") {
  CHECK(hkl::poly::monomials_of_degree(4, 4).size() == 35);
  CHECK(hkl::poly::monomials_of_degree(3, 2).size() == 6);
  CHECK(hkl::poly::monomials_of_degree(3, 2).front() == hkl::poly::Exponents{2, 0, 0});
}
