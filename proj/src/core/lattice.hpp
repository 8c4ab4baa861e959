#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matrix.hpp"

namespace hkl::lattice {

struct Invariants {
  std::size_t rank = 0;
  std::size_t positive = 0, negative = 0, zero = 0;
  Integer determinant = 0;
  bool even = true;
  // Elementary divisors > 1 of the discriminant group; empty optional when degenerate.
  std::optional<std::vector<Integer>> discriminant;

  Integer discriminant_order() const;
  std::string discriminant_string() const;
};

/// Integral symmetric bilinear form given by its Gram matrix. Invariants are
/// computed once at construction.
class IntegralLattice {
 public:
  IntegralLattice() = default;
  explicit IntegralLattice(IntMatrix gram);

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const Invariants& invariants() const { return inv_; }
  bool negative_definite() const { return inv_.negative == rank(); }

  Integer inner(const std::vector<Integer>& u, const std::vector<Integer>& v) const;

  std::string to_json() const;
  static IntegralLattice from_json(std::string_view text);

 private:
  IntMatrix gram_;
  Invariants inv_;
};

IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts);
IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

IntegralLattice make_A(int n);
IntegralLattice make_D(int n);
IntegralLattice make_E(int n);
IntegralLattice make_U();
IntegralLattice make_scaled_rank1(long k);
/// Star graph with legs of p-1, q-1, r-1 nodes around a central node.
IntegralLattice make_tpqr(int p, int q, int r);

/// Parses specs such as "A2", "D1", "E8^2", "U", "<-4>", "tpqr(2,3,7)" joined by '+'.
IntegralLattice parse_lattice_spec(std::string_view spec);

/// Necessary condition for isometry: rank, signature, determinant, parity and
/// discriminant-group elementary divisors all agree.
bool invariants_match(const IntegralLattice& a, const IntegralLattice& b);

}  // namespace hkl::lattice
