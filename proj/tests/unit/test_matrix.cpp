#include <doctest.h>

#include <random>

#include "matrix.hpp"

using hkl::Integer;
using hkl::IntMatrix;
using hkl::Rational;
using hkl::RationalMatrix;

namespace {

// Cofactor expansion, independent of Bareiss.
Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    Integer term = m(0, c) * cofactor_det(minor);
    sum += (c % 2 == 0) ? term : Integer(-term);
  }
  return sum;
}

IntMatrix random_int(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_int(rng, 5, 5, -2, 2);
    CHECK(hkl::determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("rank and nullspace are consistent") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto low = random_int(rng, 4, 2) * random_int(rng, 2, 6);
    auto r = hkl::rank(low);
    CHECK(r <= 2);
    auto ns = hkl::nullspace(hkl::to_rational(low));
    CHECK(ns.size() + r == 6);
    for (const auto& v : ns)
      for (std::size_t i = 0; i < low.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < 6; ++j) s += low(i, j) * v[j];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("integer kernel is a saturated basis") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_int(rng, 2, 5);
    auto k = hkl::integer_kernel(m);
    CHECK(k.rows() + hkl::rank(m) == 5);
    auto prod = m * k.transpose();
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    // Saturation: the kernel lattice has trivial torsion cokernel.
    auto inv = hkl::smith_invariants(k);
    for (const auto& d : inv) CHECK(d == 1);
  }
}

TEST_CASE("Smith invariants multiply to |det|") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_int(rng, 4, 4);
    auto inv = hkl::smith_invariants(m);
    Integer det = hkl::determinant(m);
    if (det == 0) {
      CHECK(inv.size() < 4);
      continue;
    }
    REQUIRE(inv.size() == 4);
    Integer prod = 1;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      prod *= inv[i];
      if (i) CHECK(mpz_divisible_p(inv[i].get_mpz_t(), inv[i - 1].get_mpz_t()));
    }
    CHECK(prod == abs(det));
  }
}

TEST_CASE("inertia of known forms") {
  RationalMatrix u{{0, 1}, {1, 0}};
  auto i = hkl::inertia(u);
  CHECK(i.positive == 1);
  CHECK(i.negative == 1);
  RationalMatrix z{{0, 0}, {0, -3}};
  i = hkl::inertia(z);
  CHECK(i.zero == 1);
  CHECK(i.negative == 1);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_int(rng, 3, 5);
    auto g = hkl::to_rational(a * a.transpose());
    auto in = hkl::inertia(g);
    CHECK(in.negative == 0);
    CHECK(in.positive == hkl::rank(a));
  }
}

TEST_CASE("LLL output is unimodular and size-reduced") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    auto b = random_int(rng, 4, 4, -20, 20);
    if (hkl::determinant(b) == 0) continue;
    auto g = hkl::to_rational(b * b.transpose());
    auto t = hkl::lll_reduce_gram(g);
    CHECK(abs(hkl::determinant(t)) == 1);
    auto red = hkl::to_rational(t) * g * hkl::to_rational(t).transpose();
    // |b1|^2 <= 2^(n-1) lambda1^2, and lambda1^2 is at most the smallest diagonal entry.
    Rational min_orig = g(0, 0);
    for (std::size_t i = 1; i < 4; ++i) min_orig = std::min(min_orig, g(i, i));
    CHECK(red(0, 0) <= 8 * min_orig);
  }
}
