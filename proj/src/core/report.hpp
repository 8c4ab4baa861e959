#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "check.hpp"
#include "rational.hpp"

namespace hkl::niemeier {
struct NiemeierEntry;
}

namespace hkl::report {

using hkl::Check;

/// Rectangular string table. JSON form is an array of objects keyed by column.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_tsv() const;
  std::string to_json() const;
};

/// Several tables as {"name": [...], ...} or as TSV blocks headed by "# name".
std::string render_tsv(const std::vector<Table>& tables);
std::string render_json(const std::vector<Table>& tables);

Table checks_table(const std::string& name, const std::vector<Check>& checks);

using Catalog = std::vector<niemeier::NiemeierEntry>;

// lattice
Table lattice_invariants(const std::string& spec);
Table lattice_roots(const std::string& spec, bool extended);

// niemeier
/// All 24 entries, or the one whose name matches.
Table niemeier_catalog(const Catalog& c, const std::string& name = "");
Table niemeier_labels(const Catalog& c);
Table boundary_dimensions(const Catalog& c);
Table type2_matching(const Catalog& c);

// git
Table git_zero_weight();
Table git_sigma_dims(std::uint64_t seed);
Table git_limit_identities();
Table git_e12_example();

// rep
Table rep_table();
Table rep_tangent(const Rational& a, const Rational& b);
Table rep_slices();

// dolgachev
Table dolgachev_table();
Table dolgachev_checks();

// blowup
Table blowup_fan(const std::string& weights, std::uint64_t seed);

// schedule
Table schedule_table1();
Table schedule_betas();
Table schedule_flip(const Rational& beta);
/// Filter is a type (I..IV), a stratum id, or empty for all.
Table schedule_strata(const std::string& type_filter);
Table schedule_towers();
Table schedule_checks(const Catalog& c, std::uint64_t seed);

/// Table 1, Table 2 and the boundary dimension table.
std::vector<Table> summary_tables(const Catalog& c);

/// The twelve acceptance criteria, in order, each exactly once.
std::vector<Check> acceptance_checks(const std::string& data_dir, std::uint64_t seed);

}  // namespace hkl::report
