#include "git_quartics.hpp"

#include <algorithm>
#include <climits>
#include <random>

#include "error.hpp"
#include "poly_linear.hpp"

namespace hkl::git {

namespace {

constexpr long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// Positions of x0..x3 in `f`; every other variable is a parameter of weight 0.
std::array<std::size_t, 4> frame(const MultiPoly& f) {
  std::array<std::size_t, 4> idx{};
  for (std::size_t i = 0; i < 4; ++i) {
    auto v = f.find_variable(quartic_variables()[i]);
    if (!v) fail(ErrorCode::InvalidArgument, "polynomial has no variable " + quartic_variables()[i]);
    idx[i] = *v;
  }
  return idx;
}

void require_quartic(const MultiPoly& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "mu: zero polynomial");
  auto idx = frame(f);
  if (!f.is_homogeneous_in(idx, 4)) fail(ErrorCode::InvalidArgument, "not homogeneous of degree 4 in x0..x3");
}

MultiPoly rename(const MultiPoly& p, std::vector<std::string> vars) {
  if (vars.size() != p.nvars()) fail(ErrorCode::Internal, "rename: variable count mismatch");
  MultiPoly out(std::move(vars));
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

Check make_check(std::string name, bool pass, std::string detail) {
  return Check{std::move(name), pass, std::move(detail)};
}

}  // namespace

OnePS OnePS::make(const std::vector<long>& weights) {
  if (weights.size() != 4) fail(ErrorCode::InvalidArgument, "1-PS needs exactly 4 weights");
  long sum = 0;
  for (long w : weights) sum += w;
  if (sum != 0) fail(ErrorCode::InvalidArgument, "1-PS weights must sum to zero");
  OnePS ps;
  std::copy(weights.begin(), weights.end(), ps.w.begin());
  return ps;
}

std::string OnePS::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

const std::array<OnePS, 4>& standard_ps() {
  static const std::array<OnePS, 4> ps = {
      OnePS{{3, 1, -1, -3}}, OnePS{{1, 0, 0, -1}}, OnePS{{1, 1, -1, -1}}, OnePS{{3, -1, -1, -1}}};
  return ps;
}

const std::vector<std::string>& quartic_variables() {
  static const std::vector<std::string> v = {"x0", "x1", "x2", "x3"};
  return v;
}

long ps_weight(const Exponents& m, const OnePS& ps) {
  if (m.size() != 4) fail(ErrorCode::InvalidArgument, "ps_weight: exponent vector must have length 4");
  if (poly::total_degree(m) != 4) fail(ErrorCode::InvalidArgument, "ps_weight: monomial is not of degree 4");
  long s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += ps.w[i] * static_cast<long>(m[i]);
  return s;
}

long mu(const MultiPoly& f, const OnePS& ps) {
  require_quartic(f);
  auto idx = frame(f);
  long best = LONG_MAX;
  for (const auto& [e, c] : f.terms()) {
    Exponents m(4);
    for (std::size_t i = 0; i < 4; ++i) m[i] = e[idx[i]];
    best = std::min(best, ps_weight(m, ps));
  }
  return best;
}

std::vector<Exponents> zero_weight_monomials(const OnePS& ps, unsigned degree) {
  std::vector<Exponents> out;
  for (auto& m : poly::monomials_of_degree(4, degree)) {
    long s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += ps.w[i] * static_cast<long>(m[i]);
    if (s == 0) out.push_back(std::move(m));
  }
  return out;
}

SigmaComponent sigma_dimension(const OnePS& ps, std::uint64_t seed) {
  SigmaComponent out;
  out.ps = ps;
  out.zero_monomials = zero_weight_monomials(ps);
  if (out.zero_monomials.empty()) fail(ErrorCode::InvalidArgument, "no zero-weight quartic monomials for " + ps.to_string());
  const auto& vars = quartic_variables();

  std::minstd_rand rng(static_cast<std::minstd_rand::result_type>(seed % 2147483646 + 1));
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kSmallPrimes) - 1);
  std::bernoulli_distribution sign(0.5);

  std::size_t best = 0;
  for (int sample = 0; sample < 3; ++sample) {
    MultiPoly f(vars);
    for (const auto& m : out.zero_monomials) {
      long c = kSmallPrimes[pick(rng)];
      f.add_term(m, sign(rng) ? c : -c);
    }
    std::vector<MultiPoly> images{f};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (ps.w[i] != ps.w[j]) continue;
        // E_ij acts as x_j d/dx_i
        images.push_back(MultiPoly::variable(vars, vars[j]) * f.derivative(vars[i]));
      }
    std::size_t r = poly::span_rank(images);
    out.sample_ranks.push_back(r);
    best = std::max(best, r);
  }
  out.stable = std::all_of(out.sample_ranks.begin(), out.sample_ranks.end(), [&](std::size_t r) { return r == best; });
  out.dimension = static_cast<int>(out.zero_monomials.size()) - static_cast<int>(best);
  return out;
}

WorstCase worst_case_search(const MultiPoly& f, long box) {
  if (box < 1) fail(ErrorCode::InvalidArgument, "worst-case search box must be >= 1");
  require_quartic(f);
  WorstCase best;
  best.box = box;
  best.mu = LONG_MIN;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b)
      for (long c = -box; c <= box; ++c) {
        long d = -(a + b + c);
        if (d < -box || d > box) continue;
        if (a == 0 && b == 0 && c == 0) continue;
        OnePS ps{{a, b, c, d}};
        long m = mu(f, ps);
        if (m > best.mu) {
          best.mu = m;
          best.ps = ps;
        }
      }
  return best;
}

MultiPoly one_ps_limit(const MultiPoly& family, const std::vector<long>& weights, std::string_view t) {
  if (weights.size() != 4) fail(ErrorCode::InvalidArgument, "one_ps_limit needs 4 weights");
  if (family.is_zero()) return family;
  auto vars = family.variables();
  if (!family.find_variable(t)) vars.emplace_back(t);
  MultiPoly src = family.with_variables(vars);
  auto idx = frame(src);
  std::size_t ti = src.variable_index(t);

  std::vector<std::pair<Exponents, long>> shifted;
  long lowest = LONG_MAX;
  for (const auto& [e, c] : src.terms()) {
    long te = static_cast<long>(e[ti]);
    for (std::size_t i = 0; i < 4; ++i) te += weights[i] * static_cast<long>(e[idx[i]]);
    shifted.emplace_back(e, te);
    lowest = std::min(lowest, te);
  }
  MultiPoly out(vars);
  for (auto& [e, te] : shifted) {
    Exponents r = e;
    r[ti] = static_cast<std::uint32_t>(te - lowest);
    out.add_term(r, src.coefficient(e));
  }
  return out;
}

MultiPoly quadratic_branch_discriminant(const MultiPoly& b, const MultiPoly& c) {
  MultiPoly bb = poly::arith(b, b, poly::ArithOp::Mul);
  return poly::arith(bb, c.scaled(4), poly::ArithOp::Sub);
}

std::vector<std::string> quartic_catalog_ids() {
  return {"upsilon", "omega", "f_ab", "tetrahedron", "two_quadrics_skew", "e12_example"};
}

MultiPoly catalog_quartic(std::string_view id) {
  std::vector<std::string> vars = quartic_variables();
  auto with = [&](std::initializer_list<const char*> extra) {
    for (const char* v : extra) vars.emplace_back(v);
    return vars;
  };
  if (id == "upsilon")
    return MultiPoly::parse("4*(x1*x3-x2^2)*(x0*x2-x1^2)-(x1*x2-x0*x3)^2", vars);
  if (id == "omega") return MultiPoly::parse("(x0^2+x1^2+x2^2+x3^2)^2", vars);
  if (id == "f_ab") return MultiPoly::parse("(x0^2+x1^2+x2^2+a*x3^2)*(x0^2+x1^2+x2^2+b*x3^2)", with({"a", "b"}));
  if (id == "tetrahedron") return MultiPoly::parse("x0*x1*x2*x3", vars);
  if (id == "two_quadrics_skew")
    return MultiPoly::parse("(a1*x0*x3+b1*x1*x2)*(a2*x0*x3+b2*x1*x2)", with({"a1", "b1", "a2", "b2"}));
  // (w,x,y,z) = (x0,x1,x2,x3)
  if (id == "e12_example") return MultiPoly::parse("x1^2*x0^2-2*x1*x3^2*x0+x2^3*x0+x1^3*x3+x3^4", vars);
  fail(ErrorCode::InvalidArgument, "unknown catalog quartic '" + std::string(id) + "'");
}

std::vector<Check> verify_e12_example() {
  std::vector<Check> checks;
  MultiPoly f = rename(catalog_quartic("e12_example"), {"w", "x", "y", "z"});

  bool all_zero = true;
  std::string vals;
  const Rational p[4] = {1, 0, 0, 0};
  for (const char* v : {"w", "x", "y", "z"}) {
    Rational d = f.derivative(v).evaluate(p);
    all_zero = all_zero && d == 0;
    vals += std::string(vals.empty() ? "" : ",") + "d/d" + v + "=" + to_string(d);
  }
  checks.push_back(make_check("partials vanish at [1,0,0,0]", all_zero, vals));

  std::vector<std::string> sv = {"s", "x", "y", "z"};
  MultiPoly affine = f.evaluate_at("w", 1).with_variables(sv);
  MultiPoly g = affine.substitute("x", MultiPoly::parse("s+z^2", sv)).with_variables({"s", "y", "z"});
  MultiPoly expected = MultiPoly::parse("s^2+y^3+z^7+s^3*z+3*s^2*z^3+3*s*z^5", {"s", "y", "z"});
  checks.push_back(make_check("w=1, x -> s+z^2", g == expected, g.to_string()));

  const Rational wt[3] = {frac(1, 2), frac(1, 3), frac(1, 7)};
  bool filtration = true;
  std::string leading;
  for (const auto& [e, c] : g.terms()) {
    Rational w = wt[0] * e[0] + wt[1] * e[1] + wt[2] * e[2];
    bool principal = (e == Exponents{2, 0, 0}) || (e == Exponents{0, 3, 0}) || (e == Exponents{0, 0, 7});
    if (principal ? w != 1 : w <= 1) filtration = false;
    if (w == 1) leading += std::string(leading.empty() ? "" : " + ") + MultiPoly::monomial(g.variables(), e, c).to_string();
  }
  checks.push_back(make_check("weights (1/2,1/3,1/7): leading part s^2+y^3+z^7, rest > 1", filtration, leading));
  return checks;
}

LimitIdentities verify_limit_identities() {
  std::vector<std::string> vars = {"x0", "x1", "x2", "x3", "t", "a", "b"};
  auto m2 = poly::monomials_of_degree(3, 2), m3 = poly::monomials_of_degree(3, 3), m4 = poly::monomials_of_degree(3, 4);
  for (std::size_t i = 0; i < m2.size(); ++i) vars.push_back("f" + std::to_string(i));
  for (std::size_t i = 0; i < m3.size(); ++i) vars.push_back("g" + std::to_string(i));
  for (std::size_t i = 0; i < m4.size(); ++i) vars.push_back("h" + std::to_string(i));

  // sum_i c_i * m_i with m_i over x0,x1,x2 and c_i named coefficients
  auto generic = [&](const std::vector<Exponents>& basis, char prefix) {
    MultiPoly p(vars);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Exponents e(vars.size(), 0);
      std::copy(basis[i].begin(), basis[i].end(), e.begin());
      e[std::find(vars.begin(), vars.end(), prefix + std::to_string(i)) - vars.begin()] = 1;
      p.add_term(e, 1);
    }
    return p;
  };
  auto P = [&](const char* s) { return MultiPoly::parse(s, vars); };
  MultiPoly f = generic(m2, 'f'), g = generic(m3, 'g'), h = generic(m4, 'h');
  MultiPoly q = P("x0^2+x1^2+x2^2");
  MultiPoly x3 = P("x3"), t = P("t"), a = P("a"), b = P("b");

  LimitIdentities out;
  out.family = (q + a * x3.pow(2)) * (q + b * x3.pow(2)) + t.pow(2) * x3.pow(2) * f + t.pow(3) * x3 * g + t.pow(4) * h;
  out.limit = one_ps_limit(out.family, {0, 0, 0, 1});
  out.expected_limit = q.pow(2) + t.pow(2) * (a + b) * x3.pow(2) * q +
                       t.pow(4) * (a * b * x3.pow(4) + x3.pow(2) * f + x3 * g + h);
  out.checks.push_back(make_check("limit under (0,0,0,1)", out.limit == out.expected_limit, ""));

  MultiPoly t0 = out.limit.coefficient_of("t", 0);
  bool odd_vanish = out.limit.coefficient_of("t", 1).is_zero() && out.limit.coefficient_of("t", 3).is_zero() &&
                    out.limit.degree_in(out.limit.variable_index("t")) == 4;
  out.checks.push_back(make_check("central fiber q^2, only t^0, t^2, t^4", t0 == q.pow(2) && odd_vanish, t0.to_string()));

  auto bq = poly::divide_exact(out.limit.coefficient_of("t", 2), q);
  out.b = bq ? *bq : MultiPoly(vars);
  out.c = out.limit.coefficient_of("t", 4);
  out.checks.push_back(make_check("t^2 coefficient divisible by q", bq.has_value(), out.b.to_string()));

  out.discriminant = quadratic_branch_discriminant(out.b, out.c);
  out.expected_discriminant = (a - b).pow(2) * x3.pow(4) - (x3.pow(2) * f + x3 * g + h).scaled(4);
  out.checks.push_back(make_check("tail discriminant (a-b)^2 x3^4 - 4 x3^2 f - 4 x3 g - 4 h",
                                  out.discriminant == out.expected_discriminant, ""));

  out.tail_family = x3.pow(4) + t.pow(2) * x3.pow(2) * f + t.pow(3) * x3 * g + t.pow(4) * h;
  out.tail_limit = one_ps_limit(out.tail_family, {0, 0, 0, 1});
  out.expected_tail = x3.pow(4) + x3.pow(2) * f + x3 * g + h;
  out.checks.push_back(make_check("x3^4 + t^2 x3^2 f + t^3 x3 g + t^4 h -> x3^4 + x3^2 f + x3 g + h",
                                  out.tail_limit == out.expected_tail, ""));
  return out;
}

}  // namespace hkl::git
