#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "matrix.hpp"

namespace hkl::toric {

using WeightVector = std::vector<long>;

/// Accepts "2,3", "4^9,6^13" and the like.
WeightVector parse_weights(std::string_view text);
/// Compressed form with repeats as powers: "4^9,6^13".
std::string weights_to_string(const WeightVector& a);

struct Cone {
  IntMatrix generators;  // rows: e_j (j != i) in order, then v
  Integer multiplicity;  // |det|
  RationalMatrix inverse_transpose;
};

struct WeightedFan {
  WeightVector weights;
  std::vector<Cone> cones;
  std::size_t sampled_points = 0;
  std::size_t sampled_boundary = 0;

  /// "WP(a_1,...,a_n)" in compressed form.
  std::string exceptional_divisor() const;
  std::string to_json() const;
};

/// Cones C_i = <e_j (j != i), v>. Validates covering and the face condition on
/// 10^3 random lattice points and 10^3 points on pairwise intersections.
WeightedFan build_fan(const WeightVector& a, std::uint64_t seed = 1);

/// Coefficients of x in the generators of C_i (exact).
std::vector<Rational> cone_coordinates(const Cone& c, const std::vector<Rational>& x);

struct WPPoint {
  std::vector<Rational> coords;
  WeightVector weights;

  std::string to_string() const;
};

/// Limit on E_sigma of t -> (t^{k a_1} phi_1(t), ...): [phi_1(0), ..., phi_n(0)].
WPPoint arc_limit(const WeightVector& a, long k, const std::vector<Rational>& phi0);
/// Coordinate i multiplied by s^{k a_i} (reparametrizing the arc by t -> s t).
WPPoint rescale(const WPPoint& x, const Rational& s, long k = 1);

/// Equality in WP(a) up to the identity component of the scaling group:
/// same zero pattern and (x_i/y_i)^{a_j} = (x_j/y_j)^{a_i} for all nonzero pairs.
bool wp_equiv(const WPPoint& x, const WPPoint& y);

}  // namespace hkl::toric
