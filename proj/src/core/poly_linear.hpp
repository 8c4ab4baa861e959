#pragma once

#include <vector>

#include "matrix.hpp"
#include "multipoly.hpp"

namespace hkl::poly {

/// One row per polynomial, one column per monomial occurring in any of them
/// (columns in grlex order). All polynomials must share a variable list.
RationalMatrix coefficient_matrix(const std::vector<MultiPoly>& polys, std::vector<Exponents>* columns = nullptr);

/// Dimension of the Q-span.
std::size_t span_rank(const std::vector<MultiPoly>& polys);

/// dim(span(a) ∩ span(b)) = rank a + rank b - rank(a ∪ b).
std::size_t intersection_dimension(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b);

}  // namespace hkl::poly
