#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "check.hpp"
#include "rational.hpp"

namespace hkl::niemeier {
struct NiemeierEntry;
}

namespace hkl::schedule {

using hkl::Check;

/// {0, 1/9, 1/7, 1/6, 1/5, 1/4, 1/3, 1/2, 1}, ascending. 1/8 is not a member.
const std::vector<Rational>& critical_betas();
bool is_critical(const Rational& beta);

struct TowerEntry {
  char side = 'Z';  // 'Z': index is a codimension in the period space; 'W': a dimension in the GIT quotient
  int index = 0;
  int codim_or_dim = 0;
  std::string description;
};

/// Z^9 < Z^8 < Z^7 < Z^5 < ... < Z^1, listed by increasing index.
const std::vector<TowerEntry>& z_tower();
/// W_0 < W_1 < ... < W_8 with W_5 skipped; W_k = closure of IV(k), W_0 = closure of IV(0a).
const std::vector<TowerEntry>& w_tower();

/// Codimension k of the Z-stratum flipped at beta = 1/m: k = m except k = m+1 for m = 6, 7; beta = 1 gives k = 1.
int flip_codimension(const Rational& beta);

enum class StratumType { I, II, III, IV };
std::string type_name(StratumType t);

enum class Stabilizer { Lambda1, Lambda2, Lambda3, Lambda4, Torus2, MaxTorus, SO3, SL2Sym3, SO4 };
std::string stabilizer_name(Stabilizer s);
std::optional<std::array<long, 4>> stabilizer_weights(Stabilizer s);

struct StratumRecord {
  std::string id;
  StratumType type = StratumType::II;
  std::string description;
  std::optional<Stabilizer> stabilizer;
  std::string printed_stabilizer;            // as written beside the description, if anything
  std::vector<std::string> closure_relations;  // ids whose closure contains this stratum
  std::optional<int> closure_dimension;
  bool stable = false;
};

/// The full catalog: II(1)-II(8), III(1)-III(7), IV(0a), IV(0b), IV(1)-IV(8).
const std::vector<StratumRecord>& all_strata();
std::vector<StratumRecord> stratum_catalog(std::optional<StratumType> filter = std::nullopt);
const StratumRecord& stratum(std::string_view id);

struct Table1Row {
  int codim = 0;
  Rational beta;
  std::string z_label;
  std::string w_id;
  std::string w_description;
};

/// Ten rows, in the printed order and wording.
const std::vector<Table1Row>& table1();
/// Rows for a critical beta in (0,1]; 1 and 1/5 return two rows each.
std::vector<Table1Row> flip_center(const Rational& beta);

std::string table1_tsv();
std::string table1_json();

struct Report {
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

/// Index gaps, monotonicity, the beta <-> Z^k <-> W_{k-1} pairing and its exceptions.
Report validate_towers();
/// Counts, closure partial order (ids exist, acyclic), stabilizer cross-references.
Report validate_catalog();
/// Table 1 against the towers and catalog. Disagreements with the pairing rule are notes.
Report validate_table1();

/// sigma_i dimensions from the torus computation against the II(1)-II(4) closure dimensions.
Check sigma_cross_check(std::uint64_t seed = 1);
/// 8 Type II strata against 9 boundary labels; the odd one out must be D17.
Check type2_cross_check(const std::vector<niemeier::NiemeierEntry>& catalog);

}  // namespace hkl::schedule
