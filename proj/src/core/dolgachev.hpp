#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "check.hpp"
#include "lattice.hpp"
#include "multipoly.hpp"

namespace hkl::dolgachev {

using lattice::IntegralLattice;
using poly::MultiPoly;

struct TpqrSpec {
  int p = 1, q = 1, r = 1;

  static TpqrSpec make(int p, int q, int r);  // sorts, requires all >= 1
  int sum() const { return p + q + r; }
  std::string to_string() const;
  friend bool operator==(const TpqrSpec&, const TpqrSpec&) = default;
};

struct TriangleSingularity {
  std::string name;
  MultiPoly equation;  // in x, y, z
  TpqrSpec dolgachev;
  TpqrSpec gabrielov;
  long base_change_order = 0;
  std::array<long, 4> weights{};  // (t, x, y, z)
};

std::vector<std::string> singularity_names();
/// E12, E13 or E14, re-validated (quasi-homogeneity and the K3 condition).
TriangleSingularity table_data(std::string_view name);
/// Validates a user-supplied entry the same way; throws Validation.
void validate(const TriangleSingularity& s);

/// Every monomial of f has weighted degree N under (w_x, w_y, w_z) on the first three variables.
bool check_quasi_homogeneous(const MultiPoly& f, const std::array<long, 3>& weights, long N);
/// 1 + w_x + w_y + w_z = N.
bool k3_tail_condition(const TriangleSingularity& s);

/// prod (N/w_v - 1), asserted integral and equal to p'+q'+r'.
long milnor_number(const TriangleSingularity& s);

/// Monomial basis of C[x,y,z]/(df/dx, df/dy, df/dz) when that ideal is monomial
/// (Brieskorn-Pham case); throws InvalidArgument otherwise.
std::vector<poly::Exponents> jacobian_monomial_basis(const MultiPoly& f);
/// Generators of the Jacobian ideal, as derived from the equation.
std::vector<MultiPoly> jacobian_ideal(const MultiPoly& f);

/// T(gabrielov) + U, rank asserted equal to mu.
IntegralLattice vanishing_lattice(const TriangleSingularity& s);

struct ZLocusEntry {
  int k = 0;
  std::string singularity;
  TpqrSpec tpqr;
  std::string ns_model;
  std::string transcendental_model;
  Integer discriminant;  // |det T(p,q,r)|
  std::size_t total_rank = 0;
  bool ns_match = false;             // invariants of T(p,q,r) equal those of ns_model
  bool transcendental_match = false; // invariants of T(gabrielov)+U equal those of transcendental_model
};
/// Z^9, Z^8, Z^7; throws CheckFailed if any invariant comparison fails.
std::vector<ZLocusEntry> z_locus_identifications();

/// Weighted projective space of the E12 example, as printed.
const std::vector<long>& e12_printed_wp_weights();
/// N - wt(m) over the Jacobian basis monomials m of E12 with N - wt(m) > 0,
/// divided by their gcd. Does not reproduce the printed list; comparison only.
std::vector<long> e12_naive_deformation_weights();

struct Report {
  std::vector<Check> checks;
  std::vector<std::string> notes;
};
/// All module invariants for the three shipped singularities.
Report verify_all();

}  // namespace hkl::dolgachev
