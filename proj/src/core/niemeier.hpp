#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "root_system.hpp"

namespace hkl::niemeier {

using lattice::Component;
using lattice::IntegralLattice;
using lattice::RootLabel;

struct NiemeierEntry {
  std::string name;
  RootLabel root_system;  // empty for Leech
  int coxeter = 0;
};

/// Loads and validates the catalog: 24 entries, rank 24 and 24h roots for
/// every entry with roots (counts come from enumeration, cached per component).
std::vector<NiemeierEntry> load_catalog(const std::string& path);
std::vector<NiemeierEntry> parse_catalog(std::string_view json_text);

long enumerated_root_count(const Component& c);

struct D7Embedding {
  std::string niemeier;
  Component host;
  RootLabel others;  // the remaining components of the entry
};

/// One embedding per (entry, host type) with host D_n (n >= 7) or E8.
std::vector<D7Embedding> d7_embeddings(const std::vector<NiemeierEntry>& catalog);

struct HostComplement {
  RootLabel label;           // D_{n-7}, D1 or empty, as written
  IntegralLattice lattice;   // computed from the coordinate model, LLL-reduced
};

/// Orthogonal complement of D7 inside a single host component, computed from
/// explicit coordinates and checked against the expected label.
HostComplement complement_in_host(const Component& host);

RootLabel complement_label(const D7Embedding& e);
/// Explicit Gram realization of the complement label.
IntegralLattice complement_lattice(const D7Embedding& e);

struct DimensionRow {
  RootLabel label;
  int dimension;
};
/// The nine boundary labels with their stratum dimensions, in table order.
const std::vector<DimensionRow>& dimension_table();
int stratum_dimension(const RootLabel& label);

struct ChainRule {
  int l = 0;             // the maximal D_l containing D7 in the host
  int dimension = 0;
  bool l_zero = false;   // host D24: L = 0, no modification, dimension 1
};
/// Derived dimension for D-hosts: (l - 7) + 1, except the D24 host where the
/// null space L vanishes. No rule for an E8 host.
std::optional<ChainRule> chain_rule_dimension(const D7Embedding& e);

struct Type2Descriptor {
  std::string id;
  std::vector<int> simple_elliptic;  // r for each E~_r
  std::vector<int> rational_curves;  // degrees
  std::vector<int> elliptic_curves;  // degrees
  RootLabel residual;
  std::string description;
};
const std::vector<Type2Descriptor>& type2_descriptors();

/// E_r per E~_r, D_{4d+4} per rational curve, A_{4d-1} per elliptic curve, plus
/// the residual; throws Validation if the rank is not 17.
RootLabel assemble_type2_label(const Type2Descriptor& d);

struct MatchRow {
  std::string git_id;
  RootLabel label;
  int dimension;
};
struct MatchResult {
  std::vector<MatchRow> rows;
  std::vector<RootLabel> unmatched;
  std::string unmatched_tag;
};
MatchResult match_git_bb(const std::vector<NiemeierEntry>& catalog);

}  // namespace hkl::niemeier
