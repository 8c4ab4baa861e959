#pragma once

#include <map>
#include <string>
#include <vector>

#include "check.hpp"
#include "multipoly.hpp"

namespace hkl::sl2 {

using poly::MultiPoly;

/// Torus weights of Sym^3 on x0..x3.
inline constexpr int kSym3Weights[4] = {3, 1, -1, -3};
/// Weights on the diagonalizing coordinates (u, w, v, x3), q = uv + w^2.
inline constexpr int kDiagWeights[4] = {2, 0, -2, 0};

/// Multiplicities d -> m of V(d).
struct Decomposition {
  std::map<int, int> multiplicities;

  int dimension() const;
  /// Highest weight first, e.g. "V(4)+V(2)^2+V(0)^2"; "0" when empty.
  std::string to_string() const;
  static Decomposition parse(const std::string& text);
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Peels V(d) off the top: m(d) = count(d) - count(d+2).
Decomposition decompose(const std::vector<int>& weights);
std::vector<int> synthesize(const Decomposition& d);

/// Weights of all degree-`degree` monomials under the given per-variable weights.
std::vector<int> monomial_weights(const std::vector<int>& var_weights, unsigned degree);

struct RepRow {
  std::string piece;  // e.g. "C[x0..x2]_3*x3^1"
  int x3_power = 0;
  Decomposition computed;
  Decomposition expected;
};
/// Decomposition of C[x0..x3]_4 by powers of x3; throws CheckFailed on any mismatch.
std::vector<RepRow> rep_table_longrepr();

const std::vector<std::string>& diag_variables();
MultiPoly q_diag();
MultiPoly f_ab_diag(const Rational& a, const Rational& b);
/// Kernel of 4 d_u d_v + d_w^2 on degree-`degree` forms in (u, w, v): a copy of V(2 degree).
std::vector<MultiPoly> harmonic_basis(unsigned degree);

/// Weight decomposition of a torus-stable span of forms over (u, w, v, x3).
/// Throws Validation if the span is not torus-stable or not a genuine SL2 module.
Decomposition span_decomposition(const std::vector<MultiPoly>& span);

struct TangentSpace {
  std::size_t dimension = 0;
  Decomposition decomposition;
  std::vector<MultiPoly> generators;  // f, then x_j d/dx_i f
};
TangentSpace orbit_tangent_space(const Rational& a, const Rational& b);

/// The V(2) images of x3 d/dx_i and x_i d/dx3 (i < 3); returns dim of their intersection.
std::size_t v2_overlap(const Rational& a, const Rational& b);

struct Slice {
  std::string name;
  std::vector<MultiPoly> basis;
  std::size_t dimension = 0;
  Decomposition decomposition;
};
Slice slice_N(const Rational& a, const Rational& b);
Slice slice_S();
Slice slice_M();

/// Exact rank checks for N, S and M at fixed sample parameters.
std::vector<Check> slice_transversality();

/// (q+(a+u)x3^2)(q+(a-u)x3^2) = f_{a,a} - u^2 x3^4 over x0..x3, a, u.
Check verify_deformation_identity();

}  // namespace hkl::sl2
