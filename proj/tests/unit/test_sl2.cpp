#include <doctest.h>

#include <algorithm>
#include <random>

#include "error.hpp"
#include "poly_linear.hpp"
#include "sl2_decomp.hpp"

using namespace hkl::sl2;
using hkl::Rational;
using hkl::frac;

TEST_CASE("decompose") {
  std::vector<int> sym3(kSym3Weights, kSym3Weights + 4);
  auto d = decompose(monomial_weights(sym3, 4));
  CHECK(d.to_string() == "V(12)+V(8)+V(6)+V(4)+V(0)");
  CHECK(d.dimension() == 35);
  CHECK(decompose({0}).to_string() == "V(0)");
  CHECK(decompose(monomial_weights({2, 0, -2}, 2)).to_string() == "V(4)+V(0)");
  CHECK(decompose({}).to_string() == "0");
  CHECK_THROWS_AS(decompose({2, 0}), hkl::Error);
  CHECK(decompose({2, -2, 0, 0, 0}).to_string() == "V(2)+V(0)^2");
}

TEST_CASE("decompose rejects symmetric non-characters") {
  // {2,-2} alone would need V(2) with a weight-0 vector
  CHECK_THROWS_AS(decompose({2, -2}), hkl::Error);
}

TEST_CASE("decompose inverts synthesis") {
  std::minstd_rand rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Decomposition d;
    int parts = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < parts; ++k) d.multiplicities[static_cast<int>(rng() % 13)] += 1 + static_cast<int>(rng() % 3);
    auto w = synthesize(d);
    CHECK(static_cast<int>(w.size()) == d.dimension());
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(decompose(w) == d);
    CHECK(Decomposition::parse(d.to_string()) == d);
  }
  CHECK_THROWS_AS(Decomposition::parse("V(x)"), hkl::Error);
}

TEST_CASE("graded pieces of quartics") {
  auto rows = rep_table_longrepr();
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].computed.to_string() == "V(8)+V(4)+V(0)");
  CHECK(rows[3].computed.to_string() == "V(2)");
  int total = 0;
  for (const auto& r : rows) total += r.computed.dimension();
  CHECK(total == 35);
}

TEST_CASE("harmonic spaces") {
  for (unsigned d = 0; d <= 4; ++d) {
    auto h = harmonic_basis(d);
    CHECK(h.size() == 2 * d + 1);
    CHECK(span_decomposition(h).to_string() == "V(" + std::to_string(2 * d) + ")");
  }
  // q itself is not harmonic: 4*1 + 2 = 6
  auto q = q_diag();
  auto lap = q.derivative("u").derivative("v").scaled(4) + q.derivative("w").derivative("w");
  CHECK(lap == MultiPoly::parse("6", diag_variables()));
}

TEST_CASE("orbit tangent spaces") {
  const std::pair<Rational, Rational> pairs[] = {{1, 2}, {2, 1}, {-1, 3}, {frac(1, 2), -3}, {0, 1}, {5, 0},
                                                 {-2, -1}, {frac(7, 3), frac(1, 5)}, {4, 9}, {-3, frac(2, 7)}};
  for (const auto& [a, b] : pairs) {
    auto t = orbit_tangent_space(a, b);
    CHECK(t.dimension == 13);
    CHECK(t.decomposition.to_string() == "V(4)+V(2)^2+V(0)^2");
    CHECK(v2_overlap(a, b) == 0);
  }
  for (const Rational& a : {Rational(1), Rational(-2), frac(1, 3)}) {
    auto t = orbit_tangent_space(a, a);
    CHECK(t.dimension == 10);
    CHECK(t.decomposition.to_string() == "V(4)+V(2)+V(0)^2");
    CHECK(v2_overlap(a, a) == 3);
  }
  CHECK(orbit_tangent_space(1, 2).generators.size() == 17);
  CHECK_THROWS_AS(orbit_tangent_space(0, 0), hkl::Error);
}

TEST_CASE("tangent space oracle in the original real coordinates") {
  // x_j d/dx_i on f_{1,2} over x0..x3 with q = x0^2+x1^2+x2^2 must give the same rank.
  std::vector<std::string> vars = {"x0", "x1", "x2", "x3"};
  auto f = MultiPoly::parse("(x0^2+x1^2+x2^2+x3^2)*(x0^2+x1^2+x2^2+2*x3^2)", vars);
  std::vector<MultiPoly> gens{f};
  for (const auto& i : vars)
    for (const auto& j : vars) gens.push_back(MultiPoly::variable(vars, j) * f.derivative(i));
  CHECK(hkl::poly::span_rank(gens) == 13);
  auto g = MultiPoly::parse("(x0^2+x1^2+x2^2+3*x3^2)^2", vars);
  std::vector<MultiPoly> gg{g};
  for (const auto& i : vars)
    for (const auto& j : vars) gg.push_back(MultiPoly::variable(vars, j) * g.derivative(i));
  CHECK(hkl::poly::span_rank(gg) == 10);
}

TEST_CASE("slices") {
  auto n = slice_N(1, 2);
  CHECK(n.dimension == 22);
  CHECK(n.decomposition.to_string() == "V(8)+V(6)+V(4)+V(0)");
  CHECK(slice_S().dimension == 22);
  CHECK(slice_M().dimension == 21);
  for (const auto& c : slice_transversality()) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
  // on the diagonal the distinguished ray 2x3^2(q+ax3^2) lies in U_{a,a}
  auto u = orbit_tangent_space(1, 1);
  auto nd = slice_N(1, 1);
  CHECK(hkl::poly::intersection_dimension(u.generators, nd.basis) == 1);
}

TEST_CASE("deformation identity") {
  auto c = verify_deformation_identity();
  CHECK(c.pass);
  CHECK(c.detail == "0");
}
