#pragma once

#include <vector>

#include "root_label.hpp"
#include "short_vectors.hpp"

namespace hkl::lattice {

struct RootSystemInfo {
  RootLabel label;
  std::size_t root_count = 0;
  std::vector<Vec> simple_roots;
  std::size_t d1_count = 0;  // only populated in extended mode
};

/// Identifies the ADE components of a Dynkin diagram given by the Gram matrix
/// of its simple roots (norm -2, off-diagonal 0 or 1).
RootLabel identify_dynkin(const IntMatrix& simple_gram);

/// Root sublattice of a negative-definite lattice. In extended mode one D1 is
/// appended per mutually orthogonal (up to sign) norm -4 vector of the
/// orthogonal complement of the root span.
RootSystemInfo classify_root_sublattice(const IntegralLattice& lattice, bool extended = false);

/// LLL-reduced copy of a negative-definite lattice (same isometry class).
IntegralLattice lll_reduced(const IntegralLattice& lattice);

}  // namespace hkl::lattice
