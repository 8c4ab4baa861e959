#include <doctest.h>

#include <algorithm>
#include <set>

#include "error.hpp"
#include "niemeier.hpp"

using namespace hkl::niemeier;
using hkl::lattice::RootLabel;

namespace {

const std::vector<NiemeierEntry>& catalog() {
  static const auto c = load_catalog(std::string(HKL_DATA_DIR) + "/niemeier.json");
  return c;
}

}  // namespace

TEST_CASE("catalog loads and validates") {
  const auto& c = catalog();
  CHECK(c.size() == 24);
  auto has = [&](const char* label) {
    return std::any_of(c.begin(), c.end(), [&](const NiemeierEntry& e) { return e.root_system == RootLabel::parse(label); });
  };
  CHECK(has("D16+E8"));
  CHECK(has("A11+D7+E6"));
  auto leech = std::find_if(c.begin(), c.end(), [](const NiemeierEntry& e) { return e.name == "Leech"; });
  REQUIRE(leech != c.end());
  CHECK(leech->root_system.empty());
  CHECK(leech->coxeter == 0);
  for (const auto& e : c) CHECK(e.root_system.root_count() == 24L * e.coxeter);
}

TEST_CASE("catalog validation rejects corrupted data") {
  CHECK_THROWS_AS(parse_catalog("[{\"name\":\"x\",\"components\":[\"D24\"],\"h\":45}]"), hkl::Error);
  CHECK_THROWS_AS(parse_catalog("[{\"name\":\"x\",\"components\":[\"D23\"],\"h\":44}]"), hkl::Error);
  CHECK_THROWS_AS(parse_catalog("{"), hkl::Error);
  CHECK_THROWS_AS(load_catalog("/nonexistent/niemeier.json"), hkl::Error);
  try {
    parse_catalog("[{\"name\":\"broken\",\"components\":[\"A24\"],\"h\":24}]");
  } catch (const hkl::Error& e) {
    CHECK(std::string(e.what()).find("broken") != std::string::npos);
  }
}

TEST_CASE("D7 embeddings") {
  auto emb = d7_embeddings(catalog());
  CHECK(emb.size() == 9);
  auto count_in = [&](const std::string& name) {
    return std::count_if(emb.begin(), emb.end(), [&](const D7Embedding& e) { return e.niemeier == name; });
  };
  CHECK(count_in("A17+E7") == 0);
  CHECK(count_in("D16+E8") == 2);
  CHECK(count_in("E8^3") == 1);
}

TEST_CASE("complements inside single hosts come from the coordinate models") {
  for (int n = 7; n <= 24; ++n) {
    auto hc = complement_in_host({'D', n});
    CHECK(static_cast<int>(hc.lattice.rank()) == n - 7);
  }
  auto e8 = complement_in_host({'E', 8});
  CHECK(e8.label.to_string() == "D1");
  CHECK(e8.lattice.gram() == hkl::IntMatrix{{-4}});
  CHECK(complement_in_host({'D', 10}).label.to_string() == "D3");
  CHECK_THROWS_AS(complement_in_host({'D', 6}), hkl::Error);
}

TEST_CASE("complement labels reproduce the nine boundary labels") {
  std::vector<RootLabel> expected;
  for (const auto& row : dimension_table()) expected.push_back(row.label);
  std::vector<RootLabel> got;
  for (const auto& e : d7_embeddings(catalog())) {
    auto l = complement_label(e);
    auto g = complement_lattice(e);
    CHECK(l.rank() == 17);
    CHECK(g.rank() == 17);
    CHECK(g.negative_definite());
    CHECK(g.invariants().even);
    CHECK(hkl::lattice::classify_root_sublattice(g, true).label == l);
    got.push_back(l);
  }
  REQUIRE(got.size() == expected.size());
  for (const auto& x : expected) CHECK(std::count(got.begin(), got.end(), x) == 1);
}

TEST_CASE("dimension table and chain rule") {
  CHECK(stratum_dimension(RootLabel::parse("D9+E8")) == 10);
  CHECK(stratum_dimension(RootLabel::parse("D17")) == 1);
  CHECK(stratum_dimension(RootLabel::parse("E8^2+D1")) == 2);
  CHECK(stratum_dimension(RootLabel::parse("A15+A1^2")) == 3);
  CHECK_THROWS_AS(stratum_dimension(RootLabel::parse("A17")), hkl::Error);
  int ruled = 0;
  for (const auto& e : d7_embeddings(catalog())) {
    auto rule = chain_rule_dimension(e);
    if (!rule) {
      CHECK(e.host.family == 'E');
      continue;
    }
    ++ruled;
    CHECK(rule->dimension == stratum_dimension(complement_label(e)));
    CHECK(rule->l_zero == (rule->l == 24));
  }
  CHECK(ruled == 7);
}

TEST_CASE("type II assembly and matching") {
  const char* expected[8] = {"E8^2+D1", "E7^2+A3", "D8^2+D1", "E6+A11", "E8+D9", "D12+D5", "D16+D1", "A15+A1^2"};
  const int dims[8] = {2, 4, 2, 1, 10, 6, 6, 3};
  const auto& ds = type2_descriptors();
  REQUIRE(ds.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(assemble_type2_label(ds[i]).written_string() == expected[i]);
  auto m = match_git_bb(catalog());
  REQUIRE(m.rows.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(m.rows[i].git_id == ds[i].id);
    CHECK(m.rows[i].dimension == dims[i]);
  }
  REQUIRE(m.unmatched.size() == 1);
  CHECK(m.unmatched[0].to_string() == "D17");
  Type2Descriptor bad{"bad", {8}, {}, {}, RootLabel(), ""};
  CHECK_THROWS_AS(assemble_type2_label(bad), hkl::Error);
}
