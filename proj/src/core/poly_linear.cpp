#include "poly_linear.hpp"

#include <map>

#include "error.hpp"

namespace hkl::poly {

RationalMatrix coefficient_matrix(const std::vector<MultiPoly>& polys, std::vector<Exponents>* columns) {
  std::map<Exponents, std::size_t, GrlexGreater> index;
  for (const auto& p : polys) {
    if (p.variables() != polys.front().variables())
      fail(ErrorCode::InvalidArgument, "coefficient matrix: variable lists differ");
    for (const auto& [e, c] : p.terms()) index.emplace(e, 0);
  }
  std::size_t k = 0;
  for (auto& [e, i] : index) i = k++;
  RationalMatrix m(polys.size(), index.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [e, c] : polys[r].terms()) m(r, index[e]) = c;
  if (columns) {
    columns->clear();
    for (const auto& [e, i] : index) columns->push_back(e);
  }
  return m;
}

std::size_t span_rank(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) return 0;
  return rank(coefficient_matrix(polys));
}

std::size_t intersection_dimension(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  std::vector<MultiPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(a) + span_rank(b) - span_rank(both);
}

}  // namespace hkl::poly
