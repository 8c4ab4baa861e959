#include <doctest.h>

#include <algorithm>
#include <random>

#include "error.hpp"
#include "git_quartics.hpp"
#include "matrix.hpp"

using namespace hkl::git;
using hkl::Rational;
using hkl::poly::Exponents;

namespace {

MultiPoly random_quartic_family(std::minstd_rand& rng) {
  std::vector<std::string> vars = {"x0", "x1", "x2", "x3", "t"};
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
  MultiPoly p(vars);
  auto mons = hkl::poly::monomials_of_degree(4, 4);
  for (int k = 0; k < 4; ++k) {
    Exponents e = mons[rng() % mons.size()];
    e.push_back(static_cast<std::uint32_t>(deg(rng)));
    p.add_term(e, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("ps_weight examples") {
  const auto& ps = standard_ps();
  CHECK(ps_weight({1, 0, 3, 0}, ps[0]) == 0);
  CHECK(ps_weight({4, 0, 0, 0}, ps[0]) == 12);
  CHECK(ps_weight({0, 0, 0, 4}, ps[3]) == -4);
  CHECK_THROWS_AS(ps_weight({1, 0, 0, 0}, ps[0]), hkl::Error);
  CHECK_THROWS_AS(OnePS::make({1, 1, 1, 1}), hkl::Error);
  CHECK_THROWS_AS(OnePS::make({1, -1}), hkl::Error);
}

TEST_CASE("zero-weight monomials are exactly the weight-zero quartics") {
  const std::size_t counts[4] = {5, 9, 9, 10};
  auto all = hkl::poly::monomials_of_degree(4, 4);
  REQUIRE(all.size() == 35);
  for (std::size_t i = 0; i < 4; ++i) {
    auto z = zero_weight_monomials(standard_ps()[i]);
    CHECK(z.size() == counts[i]);
    for (const auto& m : all) {
      bool member = std::find(z.begin(), z.end(), m) != z.end();
      CHECK(member == (ps_weight(m, standard_ps()[i]) == 0));
    }
  }
  auto z1 = zero_weight_monomials(standard_ps()[0]);
  std::vector<Exponents> expected = {{1, 0, 3, 0}, {0, 3, 0, 1}, {2, 0, 0, 2}, {1, 1, 1, 1}, {0, 2, 2, 0}};
  for (const auto& e : expected) CHECK(std::find(z1.begin(), z1.end(), e) != z1.end());
  for (const auto& m : zero_weight_monomials(standard_ps()[3])) CHECK(m[0] == 1);
}

TEST_CASE("mu on the catalog") {
  auto u = catalog_quartic("upsilon");
  CHECK(u.size() == 5);
  const auto& ps = standard_ps();
  for (std::size_t i = 0; i < 4; ++i) CHECK(mu(u, ps[i]) <= 0);
  // fixed by lambda_1: every support weight equals mu = 0
  for (std::size_t i = 0; i < 4; ++i) {
    bool fixed = true;
    for (const auto& [e, c] : u.terms()) fixed = fixed && ps_weight(e, ps[i]) == 0;
    CHECK(fixed == (i == 0));
  }
  auto x0g = MultiPoly::parse("x0*(x1^3+2*x2^3-x3^3+x1*x2*x3)", quartic_variables());
  CHECK(mu(x0g, ps[3]) == 0);
  CHECK(mu(MultiPoly::parse("x3^4", quartic_variables()), ps[3]) == -4);
  CHECK_THROWS_AS(mu(MultiPoly(quartic_variables()), ps[0]), hkl::Error);
  CHECK_THROWS_AS(mu(MultiPoly::parse("x0^3", quartic_variables()), ps[0]), hkl::Error);
  CHECK(mu(catalog_quartic("f_ab"), OnePS{{1, 1, 1, -3}}) == -12);
  for (const auto& id : quartic_catalog_ids()) {
    auto f = catalog_quartic(id);
    std::size_t idx[4] = {0, 1, 2, 3};
    CHECK(f.is_homogeneous_in(idx, 4));
  }
  CHECK_THROWS_AS(catalog_quartic("cubic"), hkl::Error);
}

TEST_CASE("sigma dimensions") {
  const int dims[4] = {2, 4, 2, 1};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::uint64_t seed : {1u, 7u, 12345u}) {
      auto s = sigma_dimension(standard_ps()[i], seed);
      CHECK(s.stable);
      CHECK(s.sample_ranks.size() == 3);
      CHECK(s.dimension == dims[i]);
    }
}

TEST_CASE("sigma_1 oracle: torus orbit dimension is the rank of the exponent matrix") {
  // For a torus, span{x_i df/dx_i} has dimension rank[exponents of the support].
  auto z = zero_weight_monomials(standard_ps()[0]);
  hkl::IntMatrix e(z.size(), 4);
  for (std::size_t r = 0; r < z.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c) e(r, c) = z[r][c];
  auto rk = hkl::rank(e);
  CHECK(static_cast<int>(z.size()) - static_cast<int>(rk) == sigma_dimension(standard_ps()[0]).dimension);
}

TEST_CASE("one_ps_limit") {
  auto fixed = catalog_quartic("upsilon").with_variables({"x0", "x1", "x2", "x3", "t"});
  CHECK(one_ps_limit(fixed, {3, 1, -1, -3}) == fixed);
  auto x = MultiPoly::parse("x0^4 + t*x0*x3^3", {"x0", "x1", "x2", "x3", "t"});
  // weights (-1,0,0,1): x0^4 -> t^-4, x0 x3^3 -> t^(1-1+3) = t^3; shift by 4
  CHECK(one_ps_limit(x, {-1, 0, 0, 1}) == MultiPoly::parse("x0^4 + t^7*x0*x3^3", x.variables()));
  auto no_t = MultiPoly::parse("x0^2*x3^2", quartic_variables());
  CHECK(one_ps_limit(no_t, {0, 0, 0, 1}) == MultiPoly::parse("x0^2*x3^2", {"x0", "x1", "x2", "x3", "t"}));

  std::minstd_rand rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_quartic_family(rng), g = random_quartic_family(rng);
    if (f.is_zero() || g.is_zero()) continue;
    std::vector<long> w = {static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2, 1, 0};
    CHECK(one_ps_limit(f * g, w) == one_ps_limit(f, w) * one_ps_limit(g, w));
  }
}

TEST_CASE("quadratic branch discriminant") {
  std::vector<std::string> v = {"x0", "x1", "x2", "x3", "h"};
  auto P = [&](const char* s) { return MultiPoly::parse(s, v); };
  CHECK(quadratic_branch_discriminant(P("0"), P("-h")) == P("4*h"));
  auto q = P("x0^2+x1^2+x2^2");
  CHECK(quadratic_branch_discriminant(q * P("2*x3^2"), q.pow(2) * P("x3^4")).is_zero());
}

TEST_CASE("E12 example") {
  auto checks = verify_e12_example();
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
  CHECK(checks[1].detail == "z^7 + 3*s*z^5 + 3*s^2*z^3 + s^3*z + y^3 + s^2");
}

TEST_CASE("limit identities with symbolic f, g, h") {
  auto r = verify_limit_identities();
  REQUIRE(r.checks.size() == 5);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name);
  CHECK(r.b == MultiPoly::parse("(a+b)*x3^2", r.b.variables()));
  // independent: expand B^2 - 4C by evaluating at random rational points
  std::minstd_rand rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> pt(r.b.nvars());
    for (auto& x : pt) x = Rational(static_cast<long>(rng() % 19) - 9);
    Rational bv = r.b.evaluate(pt), cv = r.c.evaluate(pt);
    CHECK(bv * bv - 4 * cv == r.expected_discriminant.evaluate(pt));
  }
}

TEST_CASE("worst-case diagonal search") {
  auto tet = catalog_quartic("tetrahedron");
  CHECK(worst_case_search(tet, 2).mu == 0);
  auto cone = MultiPoly::parse("x0^4 + x0^3*x1", quartic_variables());
  auto w = worst_case_search(cone, 3);
  CHECK(w.mu > 0);
  CHECK(mu(cone, w.ps) == w.mu);
  CHECK(worst_case_search(catalog_quartic("omega"), 2).mu <= 0);
  CHECK_THROWS_AS(worst_case_search(tet, 0), hkl::Error);
}
