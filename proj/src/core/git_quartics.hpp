#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "check.hpp"
#include "multipoly.hpp"

namespace hkl::git {

using poly::Exponents;
using poly::MultiPoly;

/// Diagonal one-parameter subgroup of SL4 acting on x0..x3.
struct OnePS {
  std::array<long, 4> w{};

  static OnePS make(const std::vector<long>& weights);  // checks length 4 and sum zero
  std::string to_string() const;
  friend bool operator==(const OnePS&, const OnePS&) = default;
};

/// lambda_1..lambda_4 = (3,1,-1,-3), (1,0,0,-1), (1,1,-1,-1), (3,-1,-1,-1).
const std::array<OnePS, 4>& standard_ps();

/// Quartic forms live over x0..x3 followed by any parameters.
const std::vector<std::string>& quartic_variables();

long ps_weight(const Exponents& m, const OnePS& ps);
/// Minimum weight over the support; lambda destabilizes f iff mu > 0.
long mu(const MultiPoly& f, const OnePS& ps);
/// Degree-`degree` monomials in x0..x3 of weight 0, in descending lex order.
std::vector<Exponents> zero_weight_monomials(const OnePS& ps, unsigned degree = 4);

struct SigmaComponent {
  OnePS ps;
  std::vector<Exponents> zero_monomials;
  int dimension = 0;
  std::vector<std::size_t> sample_ranks;  // rank of {X.f} ∪ {f} at each sample
  bool stable = true;                     // all samples agree
};
/// dim = (#zero monomials - 1) - (rank of the centralizer tangent map), at
/// three generic points drawn from a fixed-seed LCG.
SigmaComponent sigma_dimension(const OnePS& ps, std::uint64_t seed = 1);

struct WorstCase {
  OnePS ps;
  long mu = 0;
  long box = 0;
};
/// Maximizes mu(f, lambda) over nonzero sum-zero integer lambda in [-box, box]^4
/// (fixed coordinate frame only).
WorstCase worst_case_search(const MultiPoly& f, long box);

/// x_i -> t^{w_i} x_i, then divide by the largest power of t dividing the
/// result. Weights need not sum to zero.
MultiPoly one_ps_limit(const MultiPoly& family, const std::vector<long>& weights, std::string_view t = "t");

/// B^2 - 4C.
MultiPoly quadratic_branch_discriminant(const MultiPoly& b, const MultiPoly& c);

std::vector<std::string> quartic_catalog_ids();
MultiPoly catalog_quartic(std::string_view id);

using hkl::Check;

/// Partials at [1,0,0,0], the substitution identity, and the (1/2,1/3,1/7) weight filtration.
std::vector<Check> verify_e12_example();

struct LimitIdentities {
  MultiPoly family, limit, expected_limit, b, c, discriminant, expected_discriminant;
  MultiPoly tail_family, tail_limit, expected_tail;
  std::vector<Check> checks;
};
/// The (q+a x3^2)(q+b x3^2) + t^2 x3^2 f + t^3 x3 g + t^4 h family with fully
/// symbolic f, g, h, its limit under (0,0,0,1), and the tail discriminant.
LimitIdentities verify_limit_identities();

}  // namespace hkl::git
