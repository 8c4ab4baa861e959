#include <doctest.h>

#include <random>
#include <set>

#include "error.hpp"
#include "root_system.hpp"

using namespace hkl::lattice;
using hkl::Integer;
using hkl::IntMatrix;

namespace {

// Independent oracle: every coordinate vector in [-B,B]^n.
std::size_t box_count(const IntegralLattice& l, long norm, int bound) {
  const std::size_t n = l.rank();
  Vec v(n, -bound);
  std::size_t count = 0;
  for (;;) {
    if (l.inner(v, v) == norm) ++count;
    std::size_t i = 0;
    while (i < n && v[i] == bound) v[i++] = -bound;
    if (i == n) break;
    v[i] += 1;
  }
  return count;
}

}  // namespace

TEST_CASE("constructors follow the negative-definite node convention") {
  CHECK(make_A(1).gram() == IntMatrix{{-2}});
  CHECK(make_D(1).gram() == IntMatrix{{-4}});
  CHECK(make_A(3).gram() == IntMatrix{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
  CHECK(make_tpqr(2, 3, 7).rank() == 10);
  CHECK_THROWS_AS(make_E(9), hkl::Error);
  CHECK_THROWS_AS(parse_lattice_spec("Q7"), hkl::Error);
  CHECK(parse_lattice_spec("U^2+E8^2+D1").rank() == 21);
  CHECK(parse_lattice_spec("tpqr(2,3,7)+<-4>").rank() == 11);
}

TEST_CASE("invariants of small lattices") {
  auto u = make_U().invariants();
  CHECK(u.rank == 2);
  CHECK(u.positive == 1);
  CHECK(u.negative == 1);
  CHECK(u.determinant == -1);
  CHECK(u.discriminant_string() == "0");
  auto a2 = make_A(2).invariants();
  CHECK(a2.determinant == 3);
  CHECK(a2.discriminant_string() == "Z/3");
  auto d4 = make_D(4).invariants();
  CHECK(d4.discriminant_string() == "Z/2+Z/2");
  auto e8 = make_E(8).invariants();
  CHECK(abs(e8.determinant) == 1);
  CHECK(e8.even);
  IntegralLattice degenerate(IntMatrix{{0, 0}, {0, -2}});
  CHECK(degenerate.invariants().determinant == 0);
  CHECK_FALSE(degenerate.invariants().discriminant.has_value());
  CHECK_FALSE(IntegralLattice(IntMatrix{{1}}).invariants().even);
}

TEST_CASE("enumeration agrees with a brute-force box at rank <= 4") {
  for (const char* spec : {"A1", "A2", "A3", "D4", "A2+A1", "A4", "D1", "A1+D1", "tpqr(1,2,3)"}) {
    auto l = parse_lattice_spec(spec);
    for (long norm : {-2L, -4L, -6L}) {
      auto found = vectors_of_norm(l, norm);
      CHECK_MESSAGE(found.size() == box_count(l, norm, 4), spec << " norm " << norm);
      for (const auto& v : found) CHECK(l.inner(v, v) == norm);
      CHECK(std::is_sorted(found.begin(), found.end()));
    }
  }
  CHECK(vectors_of_norm(make_D(1), -2).empty());
  CHECK(vectors_of_norm(make_D(1), -4).size() == 2);
}

TEST_CASE("classical root counts") {
  for (int n = 1; n <= 8; ++n) CHECK(vectors_of_norm(make_A(n), -2).size() == std::size_t(n * (n + 1)));
  for (int n = 2; n <= 8; ++n) CHECK(vectors_of_norm(make_D(n), -2).size() == std::size_t(2 * n * (n - 1)));
  CHECK(vectors_of_norm(make_E(6), -2).size() == 72);
  CHECK(vectors_of_norm(make_E(7), -2).size() == 126);
  CHECK(vectors_of_norm(make_E(8), -2).size() == 240);
  CHECK_THROWS_AS(vectors_of_norm(make_U(), -2), hkl::Error);
}

TEST_CASE("classification recovers ADE types") {
  std::vector<std::string> corpus{"A1", "A2", "A5", "A8", "D4", "D5", "D7", "E6", "E7", "E8", "A3+D4", "E6+A2+A1"};
  for (const auto& s : corpus) {
    auto label = RootLabel::parse(s);
    CHECK_MESSAGE(classify_root_sublattice(label.lattice()).label == label, s);
  }
  CHECK(classify_root_sublattice(make_D(3)).label.to_string() == "A3");
  CHECK(classify_root_sublattice(make_tpqr(2, 3, 3)).label.to_string() == "E6");
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      CHECK(classify_root_sublattice(make_tpqr(1, p, q)).label == RootLabel({{'A', p + q - 1}}));
  auto ext = classify_root_sublattice(parse_lattice_spec("D5+D1"), true);
  CHECK(ext.label.to_string() == "D5+D1");
  CHECK(classify_root_sublattice(parse_lattice_spec("D5+D1"), false).label.to_string() == "D5");
}

TEST_CASE("classification is invariant under a change of basis") {
  std::mt19937_64 rng(41);
  auto base = RootLabel::parse("D4+A2").lattice();
  for (int trial = 0; trial < 5; ++trial) {
    // random unimodular transform from elementary row operations
    IntMatrix t = IntMatrix::identity(base.rank());
    std::uniform_int_distribution<int> idx(0, static_cast<int>(base.rank()) - 1), c(-2, 2);
    for (int k = 0; k < 12; ++k) {
      int i = idx(rng), j = idx(rng);
      if (i == j) continue;
      Integer f = c(rng);
      for (std::size_t col = 0; col < base.rank(); ++col) t(i, col) += f * t(j, col);
    }
    IntegralLattice moved(t * base.gram() * t.transpose());
    CHECK(classify_root_sublattice(moved).label.to_string() == "A2+D4");
    CHECK(invariants_match(moved, base));
  }
}

TEST_CASE("tpqr discriminant formula and signature") {
  const int triples[14][3] = {{2, 3, 7}, {2, 4, 5}, {3, 3, 4}, {2, 3, 8}, {2, 4, 6}, {3, 3, 5}, {2, 3, 9},
                              {2, 4, 7}, {3, 3, 6}, {2, 5, 5}, {3, 4, 4}, {2, 5, 6}, {3, 4, 5}, {4, 4, 4}};
  auto check = [](int p, int q, int r) {
    auto inv = make_tpqr(p, q, r).invariants();
    CHECK(abs(inv.determinant) == Integer(p * q * r - p * q - p * r - q * r));
    CHECK(inv.positive == 1);
    CHECK(inv.negative == std::size_t(p + q + r - 3));
  };
  for (auto& t : triples) check(t[0], t[1], t[2]);
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(2, 9);
  int done = 0;
  while (done < 20) {
    int p = d(rng), q = d(rng), r = d(rng);
    if (q * r + p * r + p * q >= p * q * r) continue;
    check(p, q, r);
    ++done;
  }
}

TEST_CASE("invariants_match cross-identities") {
  CHECK(invariants_match(make_tpqr(2, 3, 7), parse_lattice_spec("E8+U")));
  CHECK(invariants_match(make_tpqr(2, 4, 5), parse_lattice_spec("E7+U")));
  CHECK(invariants_match(make_tpqr(3, 3, 4), parse_lattice_spec("E6+U")));
  CHECK(invariants_match(parse_lattice_spec("U^2+D17"), parse_lattice_spec("U^2+E8^2+D1")));
  CHECK_FALSE(invariants_match(make_A(1), make_D(1)));
  // equivalence relation on a small corpus
  std::vector<IntegralLattice> corpus{make_A(3), make_D(3), make_E(8), parse_lattice_spec("A1+A1"), make_D(2),
                                      parse_lattice_spec("E8+U"), make_tpqr(2, 3, 7)};
  for (auto& a : corpus) {
    CHECK(invariants_match(a, a));
    for (auto& b : corpus) {
      CHECK(invariants_match(a, b) == invariants_match(b, a));
      for (auto& c : corpus)
        if (invariants_match(a, b) && invariants_match(b, c)) CHECK(invariants_match(a, c));
    }
  }
}

TEST_CASE("root labels") {
  auto l = RootLabel::parse("A15+D2");
  CHECK(l.to_string() == "A15+D2");
  CHECK(l.canonical_string() == "A15+A1^2");
  CHECK(l == RootLabel::parse("A15+(A1)^2"));
  CHECK(RootLabel::parse("E8^2+D1").to_string() == "D1+E8^2");
  CHECK(RootLabel::parse("D3+E7^2") == RootLabel::parse("A3+E7+E7"));
  CHECK(RootLabel::parse("D3+E7^2").rank() == 17);
  CHECK_THROWS_AS(RootLabel::parse("E9"), hkl::Error);
  CHECK_THROWS_AS(RootLabel::parse("F4"), hkl::Error);
}

TEST_CASE("lattice JSON round trip") {
  auto l = make_E(6);
  CHECK(IntegralLattice::from_json(l.to_json()).gram() == l.gram());
  CHECK_THROWS_AS(IntegralLattice::from_json("{\"gram\": [[1,2],[3,4]]}"), hkl::Error);
  CHECK_THROWS_AS(IntegralLattice::from_json("nope"), hkl::Error);
}
