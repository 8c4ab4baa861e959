#pragma once

#include <vector>

#include "lattice.hpp"

namespace hkl::lattice {

using Vec = std::vector<Integer>;

/// All v with v^t G v == norm for a negative-definite lattice, sorted
/// lexicographically. Throws InvalidArgument for indefinite or degenerate input.
std::vector<Vec> vectors_of_norm(const IntegralLattice& lattice, long norm);

/// Same enumeration for a positive-definite rational form: v^t Q v == target.
std::vector<Vec> enumerate_exact(const RationalMatrix& q, const Rational& target);

}  // namespace hkl::lattice
