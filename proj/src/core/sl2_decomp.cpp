#include "sl2_decomp.hpp"

#include <algorithm>
#include <regex>

#include "error.hpp"
#include "matrix.hpp"
#include "poly_linear.hpp"

namespace hkl::sl2 {

namespace {

int weight_of(const poly::Exponents& e) {
  int s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += kDiagWeights[i] * static_cast<int>(e[i]);
  return s;
}

MultiPoly over_diag(const MultiPoly& p) { return p.with_variables(diag_variables()); }

MultiPoly P(const char* text) { return MultiPoly::parse(text, diag_variables()); }

Slice make_slice(std::string name, std::vector<MultiPoly> basis) {
  Slice s;
  s.name = std::move(name);
  s.dimension = poly::span_rank(basis);
  if (s.dimension != basis.size()) fail(ErrorCode::Internal, "slice " + s.name + ": basis is not independent");
  s.decomposition = span_decomposition(basis);
  s.basis = std::move(basis);
  return s;
}

// V(8) + V(6) + R x3^2
std::vector<MultiPoly> common_slice_part() {
  std::vector<MultiPoly> out;
  MultiPoly x3 = P("x3");
  for (auto& h : harmonic_basis(4)) out.push_back(h);
  for (auto& h : harmonic_basis(3)) out.push_back(h * x3);
  for (auto& h : harmonic_basis(2)) out.push_back(h * x3.pow(2));
  return out;
}

std::vector<MultiPoly> all_quartics() {
  std::vector<MultiPoly> out;
  for (auto& e : poly::monomials_of_degree(4, 4)) out.push_back(MultiPoly::monomial(diag_variables(), e));
  return out;
}

std::string rs(const Rational& a) { return hkl::to_string(a); }

}  // namespace

int Decomposition::dimension() const {
  int n = 0;
  for (auto [d, m] : multiplicities) n += m * (d + 1);
  return n;
}

std::string Decomposition::to_string() const {
  std::string s;
  for (auto it = multiplicities.rbegin(); it != multiplicities.rend(); ++it) {
    if (it->second == 0) continue;
    if (!s.empty()) s += "+";
    s += "V(" + std::to_string(it->first) + ")";
    if (it->second > 1) s += "^" + std::to_string(it->second);
  }
  return s.empty() ? "0" : s;
}

Decomposition Decomposition::parse(const std::string& text) {
  Decomposition d;
  if (text == "0" || text.empty()) return d;
  static const std::regex term(R"(V\((\d+)\)(?:\^(\d+))?)");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('+', pos);
    std::string piece = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::smatch m;
    if (!std::regex_match(piece, m, term)) fail(ErrorCode::Parse, "bad SL2 summand '" + piece + "'");
    d.multiplicities[std::stoi(m[1])] += m[2].matched ? std::stoi(m[2]) : 1;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return d;
}

Decomposition decompose(const std::vector<int>& weights) {
  std::map<int, int> count;
  for (int w : weights) ++count[w];
  for (auto [w, c] : count) {
    auto it = count.find(-w);
    if (it == count.end() || it->second != c)
      fail(ErrorCode::Validation, "weight multiset is not symmetric under negation at weight " + std::to_string(w));
  }
  Decomposition d;
  if (count.empty()) return d;
  int top = count.rbegin()->first;
  for (int w = top; w >= 0; --w) {
    int c = count.count(w) ? count[w] : 0;
    int above = count.count(w + 2) ? count[w + 2] : 0;
    int m = c - above;
    if (m < 0) fail(ErrorCode::Validation, "weight multiset is not an SL2 character (negative multiplicity at " + std::to_string(w) + ")");
    if (m > 0) d.multiplicities[w] = m;
  }
  return d;
}

std::vector<int> synthesize(const Decomposition& d) {
  std::vector<int> out;
  for (auto [deg, m] : d.multiplicities)
    for (int k = 0; k < m; ++k)
      for (int w = -deg; w <= deg; w += 2) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> monomial_weights(const std::vector<int>& var_weights, unsigned degree) {
  std::vector<int> out;
  for (const auto& e : poly::monomials_of_degree(var_weights.size(), degree)) {
    int s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += var_weights[i] * static_cast<int>(e[i]);
    out.push_back(s);
  }
  return out;
}

std::vector<RepRow> rep_table_longrepr() {
  const char* expected[5] = {"V(8)+V(4)+V(0)", "V(6)+V(2)", "V(4)+V(0)", "V(2)", "V(0)"};
  std::vector<RepRow> rows;
  std::vector<int> uwv(kDiagWeights, kDiagWeights + 3);
  for (int k = 0; k <= 4; ++k) {
    RepRow r;
    r.x3_power = k;
    r.piece = "C[x0..x2]_" + std::to_string(4 - k) + (k ? "*x3^" + std::to_string(k) : "");
    // x3 has weight 0, so the piece has the weights of C[x0..x2]_{4-k}
    r.computed = decompose(monomial_weights(uwv, static_cast<unsigned>(4 - k)));
    r.expected = Decomposition::parse(expected[k]);
    if (r.computed != r.expected)
      fail(ErrorCode::CheckFailed, r.piece + ": computed " + r.computed.to_string() + ", expected " + r.expected.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

const std::vector<std::string>& diag_variables() {
  static const std::vector<std::string> v = {"u", "w", "v", "x3"};
  return v;
}

MultiPoly q_diag() { return P("u*v+w^2"); }

MultiPoly f_ab_diag(const Rational& a, const Rational& b) {
  MultiPoly x3sq = P("x3^2");
  return (q_diag() + x3sq.scaled(a)) * (q_diag() + x3sq.scaled(b));
}

std::vector<MultiPoly> harmonic_basis(unsigned degree) {
  std::vector<std::string> uwv = {"u", "w", "v"};
  auto src = poly::monomials_of_degree(3, degree);
  std::vector<MultiPoly> images;
  for (const auto& e : src) {
    MultiPoly m = MultiPoly::monomial(uwv, e);
    images.push_back(m.derivative("u").derivative("v").scaled(4) + m.derivative("w").derivative("w"));
  }
  std::vector<MultiPoly> out;
  if (degree < 2) {
    for (const auto& e : src) out.push_back(over_diag(MultiPoly::monomial(uwv, e)));
    return out;
  }
  auto tgt = poly::monomials_of_degree(3, degree - 2);
  RationalMatrix lap(tgt.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (std::size_t r = 0; r < tgt.size(); ++r) lap(r, c) = images[c].coefficient(tgt[r]);
  for (const auto& vec : nullspace(lap)) {
    MultiPoly h(uwv);
    for (std::size_t c = 0; c < src.size(); ++c)
      if (vec[c] != 0) h.add_term(src[c], vec[c]);
    out.push_back(over_diag(h));
  }
  if (out.size() != 2 * degree + 1) fail(ErrorCode::Internal, "harmonic space has unexpected dimension");
  return out;
}

Decomposition span_decomposition(const std::vector<MultiPoly>& span) {
  if (span.empty()) return {};
  std::map<int, std::vector<MultiPoly>> parts;
  for (const auto& p : span) {
    if (p.variables() != diag_variables()) fail(ErrorCode::InvalidArgument, "span must be over (u, w, v, x3)");
    std::map<int, MultiPoly> split;
    for (const auto& [e, c] : p.terms()) {
      auto [it, _] = split.try_emplace(weight_of(e), diag_variables());
      it->second.add_term(e, c);
    }
    for (auto& [w, piece] : split) parts[w].push_back(std::move(piece));
  }
  std::size_t total = 0;
  std::vector<int> weights;
  for (const auto& [w, polys] : parts) {
    std::size_t r = poly::span_rank(polys);
    total += r;
    weights.insert(weights.end(), r, w);
  }
  if (total != poly::span_rank(span)) fail(ErrorCode::Validation, "span is not stable under the torus");
  return decompose(weights);
}

TangentSpace orbit_tangent_space(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) fail(ErrorCode::InvalidArgument, "orbit tangent space needs (a,b) != (0,0)");
  TangentSpace t;
  MultiPoly f = f_ab_diag(a, b);
  const auto& vars = diag_variables();
  t.generators.push_back(f);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      t.generators.push_back(MultiPoly::variable(vars, vars[j]) * f.derivative(vars[i]));
  t.dimension = poly::span_rank(t.generators);
  t.decomposition = span_decomposition(t.generators);
  return t;
}

std::size_t v2_overlap(const Rational& a, const Rational& b) {
  MultiPoly f = f_ab_diag(a, b);
  const auto& vars = diag_variables();
  MultiPoly x3 = P("x3");
  std::vector<MultiPoly> first, second;
  for (std::size_t i = 0; i < 3; ++i) {
    first.push_back(x3 * f.derivative(vars[i]));
    second.push_back(MultiPoly::variable(vars, vars[i]) * f.derivative("x3"));
  }
  return poly::intersection_dimension(first, second);
}

Slice slice_N(const Rational& a, const Rational& b) {
  auto basis = common_slice_part();
  basis.push_back(q_diag() * P("2*x3^2") + P("x3^4").scaled(a + b));
  return make_slice("N_" + rs(a) + "," + rs(b), std::move(basis));
}

Slice slice_S() {
  auto basis = common_slice_part();
  basis.push_back(P("x3^4"));
  return make_slice("S", std::move(basis));
}

Slice slice_M() { return make_slice("M", common_slice_part()); }

std::vector<Check> slice_transversality() {
  std::vector<Check> out;
  const std::size_t full = poly::span_rank(all_quartics());
  const std::pair<Rational, Rational> distinct[] = {{1, 2}, {-1, 3}, {frac(1, 2), -3}, {0, 1}, {frac(7, 3), frac(1, 5)}};
  for (const auto& [a, b] : distinct) {
    auto u = orbit_tangent_space(a, b);
    auto n = slice_N(a, b);
    auto both = u.generators;
    both.insert(both.end(), n.basis.begin(), n.basis.end());
    std::size_t sum = poly::span_rank(both);
    std::size_t meet = u.dimension + n.dimension - sum;
    bool ok = n.dimension == 22 && u.dimension == 13 && sum == full && meet == 0;
    out.push_back({"N_{a,b} transversal at a=" + rs(a) + ", b=" + rs(b), ok,
                   "dim U=" + std::to_string(u.dimension) + " dim N=" + std::to_string(n.dimension) +
                       " dim(U+N)=" + std::to_string(sum) + " dim(U cap N)=" + std::to_string(meet)});
  }
  auto s = slice_S();
  for (const Rational& a : {Rational(1), Rational(-2), frac(1, 3)}) {
    auto u = orbit_tangent_space(a, a);
    std::size_t meet = poly::intersection_dimension(u.generators, s.basis);
    bool ok = s.dimension == 22 && u.dimension == 10 && meet == 0;
    out.push_back({"S cap U_{a,a} = 0 at a=" + rs(a), ok,
                   "dim S=" + std::to_string(s.dimension) + " dim U=" + std::to_string(u.dimension) +
                       " dim(S cap U)=" + std::to_string(meet)});
  }
  auto m = slice_M();
  out.push_back({"dim M_{a,b} = 21", m.dimension == 21, "dim M=" + std::to_string(m.dimension) + " " + m.decomposition.to_string()});
  return out;
}

Check verify_deformation_identity() {
  std::vector<std::string> vars = {"x0", "x1", "x2", "x3", "a", "u"};
  auto Q = [&](const char* s) { return MultiPoly::parse(s, vars); };
  MultiPoly q = Q("x0^2+x1^2+x2^2");
  MultiPoly lhs = (q + Q("(a+u)*x3^2")) * (q + Q("(a-u)*x3^2"));
  MultiPoly rhs = (q + Q("a*x3^2")).pow(2) - Q("u^2*x3^4");
  return {"(q+(a+u)x3^2)(q+(a-u)x3^2) = f_{a,a} - u^2 x3^4", lhs == rhs, (lhs - rhs).to_string()};
}

}  // namespace hkl::sl2
