#include <doctest.h>

#include <algorithm>
#include <random>

#include "error.hpp"
#include "matrix.hpp"
#include "toric.hpp"

using namespace hkl::toric;
using hkl::Rational;

namespace {

std::vector<Rational> R(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("weight parsing") {
  CHECK(parse_weights("2,3") == WeightVector{2, 3});
  auto big = parse_weights("4^9,6^13");
  CHECK(big.size() == 22);
  CHECK(weights_to_string(big) == "4^9,6^13");
  CHECK_THROWS_AS(parse_weights("2,x"), hkl::Error);
  CHECK_THROWS_AS(parse_weights("0,1"), hkl::Error);
  CHECK_THROWS_AS(parse_weights("3"), hkl::Error);
  CHECK_THROWS_AS(parse_weights("3^0,2"), hkl::Error);
}

TEST_CASE("fans") {
  auto f11 = build_fan({1, 1});
  REQUIRE(f11.cones.size() == 2);
  CHECK(f11.cones[0].multiplicity == 1);
  CHECK(f11.cones[1].multiplicity == 1);
  auto f23 = build_fan({2, 3});
  CHECK(f23.cones[0].multiplicity == 2);
  CHECK(f23.cones[1].multiplicity == 3);
  CHECK(f23.sampled_points == 1000);
  CHECK(f23.sampled_boundary == 1000);
  for (const char* spec : {"4^9,6^13", "2^5,3^7,4^9", "1,2,3,5", "7,1,1"}) {
    auto a = parse_weights(spec);
    auto fan = build_fan(a);
    REQUIRE(fan.cones.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(fan.cones[i].multiplicity == a[i]);
  }
  CHECK(build_fan(parse_weights("4^9,6^13")).exceptional_divisor() == "WP(4^9,6^13)");
  CHECK(f23.to_json() ==
        R"j({"cones":[{"generators":[[0,1],[2,3]],"multiplicity":"2"},{"generators":[[1,0],[2,3]],"multiplicity":"3"}],"exceptional_divisor":"WP(2,3)","weights":[2,3]})j");
}

TEST_CASE("cone membership oracle: C_i holds the points where i minimizes x_j/a_j") {
  WeightVector a = {2, 3, 5};
  auto fan = build_fan(a);
  std::minstd_rand rng(9);
  for (int s = 0; s < 300; ++s) {
    std::vector<Rational> x = R({static_cast<long>(rng() % 40), static_cast<long>(rng() % 40), static_cast<long>(rng() % 40)});
    Rational m = x[0] / a[0];
    for (std::size_t j = 1; j < 3; ++j) m = std::min(m, Rational(x[j] / a[j]));
    for (std::size_t i = 0; i < 3; ++i) {
      auto y = cone_coordinates(fan.cones[i], x);
      bool inside = std::all_of(y.begin(), y.end(), [](const Rational& c) { return c >= 0; });
      CHECK(inside == (x[i] / a[i] == m));
    }
  }
}

TEST_CASE("arc limits and weighted projective equivalence") {
  WeightVector a = {2, 3};
  CHECK(wp_equiv({R({1, 1}), a}, {R({4, 8}), a}));
  CHECK_FALSE(wp_equiv({R({1, 1}), a}, {R({4, 9}), a}));
  WeightVector b = {1, 2, 3};
  CHECK(wp_equiv({{0, 1, Rational(5, 3)}, b}, {{0, 1, Rational(5, 3)}, b}));
  CHECK_FALSE(wp_equiv({R({0, 1, 1}), b}, {R({1, 1, 1}), b}));
  CHECK_THROWS_AS(wp_equiv({R({1, 1}), a}, {R({1, 1}), {2, 5}}), hkl::Error);

  auto p = arc_limit({2, 3, 5}, 2, R({1, -2, 3}));
  CHECK(p.coords == R({1, -2, 3}));
  for (long s : {2L, -3L, 5L}) CHECK(wp_equiv(rescale(p, s, 2), p));
  CHECK(wp_equiv(rescale(p, Rational(2, 7)), p));
  CHECK_THROWS_AS(arc_limit({2, 3}, 1, R({0, 0})), hkl::Error);
  CHECK_THROWS_AS(arc_limit({2, 3}, 0, R({1, 0})), hkl::Error);
}

TEST_CASE("all-ones weights: wp_equiv is projective equivalence") {
  std::minstd_rand rng(4);
  WeightVector ones = {1, 1, 1};
  for (int s = 0; s < 200; ++s) {
    auto x = R({static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2});
    auto y = R({static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2});
    if (std::all_of(x.begin(), x.end(), [](auto& v) { return v == 0; }) ||
        std::all_of(y.begin(), y.end(), [](auto& v) { return v == 0; }))
      continue;
    hkl::RationalMatrix m(2, 3);
    for (std::size_t i = 0; i < 3; ++i) m(0, i) = x[i], m(1, i) = y[i];
    CHECK(wp_equiv({x, ones}, {y, ones}) == (hkl::rank(m) == 1));
  }
}
