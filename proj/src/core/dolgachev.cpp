#include "dolgachev.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace hkl::dolgachev {

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

struct RawRow {
  const char* name;
  const char* equation;
  TpqrSpec dolgachev, gabrielov;
  long n;
  std::array<long, 4> weights;
};

const RawRow kTable[] = {
    {"E12", "x^2+y^3+z^7", {2, 3, 7}, {2, 3, 7}, 42, {1, 21, 14, 6}},
    {"E13", "x^2+y^3+y*z^5", {2, 4, 5}, {2, 3, 8}, 30, {1, 15, 10, 4}},
    {"E14", "x^3+y^2+y*z^4", {3, 3, 4}, {2, 3, 9}, 24, {1, 8, 12, 3}},
};

struct RawZ {
  int k;
  const char* singularity;
  TpqrSpec tpqr;
  const char* ns;
  const char* transcendental;
};

const RawZ kZ[] = {
    {9, "E12", {2, 3, 7}, "E8+U", "E8+U^2"},
    {8, "E13", {2, 4, 5}, "E7+U", "E8+U^2+A1"},
    {7, "E14", {3, 3, 4}, "E6+U", "E8+U^2+A2"},
};

std::array<long, 3> xyz_weights(const TriangleSingularity& s) { return {s.weights[1], s.weights[2], s.weights[3]}; }

}  // namespace

TpqrSpec TpqrSpec::make(int p, int q, int r) {
  if (p < 1 || q < 1 || r < 1) fail(ErrorCode::InvalidArgument, "T(p,q,r) needs p, q, r >= 1");
  std::array<int, 3> v = {p, q, r};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

std::string TpqrSpec::to_string() const {
  return "T(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

std::vector<std::string> singularity_names() { return {"E12", "E13", "E14"}; }

bool check_quasi_homogeneous(const MultiPoly& f, const std::array<long, 3>& weights, long N) {
  if (f.is_zero() || f.nvars() < 3) return false;
  for (const auto& [e, c] : f.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < 3; ++i) d += weights[i] * static_cast<long>(e[i]);
    for (std::size_t i = 3; i < e.size(); ++i)
      if (e[i]) return false;
    if (d != N) return false;
  }
  return true;
}

bool k3_tail_condition(const TriangleSingularity& s) {
  return s.weights[0] == 1 && 1 + s.weights[1] + s.weights[2] + s.weights[3] == s.base_change_order;
}

void validate(const TriangleSingularity& s) {
  for (long w : s.weights)
    if (w <= 0) fail(ErrorCode::Validation, s.name + ": weights must be positive");
  if (s.base_change_order <= 0) fail(ErrorCode::Validation, s.name + ": base change order must be positive");
  if (!check_quasi_homogeneous(s.equation, xyz_weights(s), s.base_change_order))
    fail(ErrorCode::Validation, s.name + ": equation is not weighted homogeneous of degree " + std::to_string(s.base_change_order));
  if (!k3_tail_condition(s)) fail(ErrorCode::Validation, s.name + ": 1 + w_x + w_y + w_z != N");
}

TriangleSingularity table_data(std::string_view name) {
  for (const auto& row : kTable) {
    if (name != row.name) continue;
    TriangleSingularity s{row.name, MultiPoly::parse(row.equation, kXYZ), row.dolgachev, row.gabrielov, row.n, row.weights};
    validate(s);
    return s;
  }
  fail(ErrorCode::InvalidArgument, "unknown singularity '" + std::string(name) + "'");
}

long milnor_number(const TriangleSingularity& s) {
  if (!check_quasi_homogeneous(s.equation, xyz_weights(s), s.base_change_order))
    fail(ErrorCode::Validation, s.name + ": not quasi-homogeneous");
  Rational mu = 1;
  for (std::size_t i = 1; i <= 3; ++i) mu *= Rational(s.base_change_order) / s.weights[i] - 1;
  if (!is_integral(mu)) fail(ErrorCode::CheckFailed, s.name + ": Milnor product " + to_string(mu) + " is not integral");
  long m = mu.get_num().get_si();
  if (m != s.gabrielov.sum())
    fail(ErrorCode::CheckFailed, s.name + ": Milnor number " + std::to_string(m) + " != p'+q'+r' = " + std::to_string(s.gabrielov.sum()));
  return m;
}

std::vector<MultiPoly> jacobian_ideal(const MultiPoly& f) {
  std::vector<MultiPoly> out;
  for (const auto& v : f.variables()) out.push_back(f.derivative(v));
  return out;
}

std::vector<poly::Exponents> jacobian_monomial_basis(const MultiPoly& f) {
  // monomial ideal generated by pure powers: one per variable
  std::vector<std::uint32_t> bound(f.nvars(), 0);
  for (const auto& g : jacobian_ideal(f)) {
    if (g.size() != 1) fail(ErrorCode::InvalidArgument, "Jacobian ideal is not monomial");
    const auto& e = g.terms().begin()->first;
    std::size_t nonzero = 0, var = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) ++nonzero, var = i;
    if (nonzero != 1 || bound[var]) fail(ErrorCode::InvalidArgument, "Jacobian ideal is not generated by pure powers");
    bound[var] = e[var];
  }
  std::vector<poly::Exponents> out{poly::Exponents(f.nvars(), 0)};
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    std::vector<poly::Exponents> next;
    for (const auto& e : out)
      for (std::uint32_t k = 0; k < bound[i]; ++k) {
        auto x = e;
        x[i] = k;
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

IntegralLattice vanishing_lattice(const TriangleSingularity& s) {
  auto L = lattice::direct_sum(lattice::make_tpqr(s.gabrielov.p, s.gabrielov.q, s.gabrielov.r), lattice::make_U());
  long mu = milnor_number(s);
  if (static_cast<long>(L.rank()) != mu)
    fail(ErrorCode::CheckFailed, s.name + ": vanishing lattice rank " + std::to_string(L.rank()) + " != mu");
  return L;
}

std::vector<ZLocusEntry> z_locus_identifications() {
  std::vector<ZLocusEntry> out;
  for (const auto& z : kZ) {
    ZLocusEntry e;
    e.k = z.k;
    e.singularity = z.singularity;
    e.tpqr = z.tpqr;
    e.ns_model = z.ns;
    e.transcendental_model = z.transcendental;
    auto t = lattice::make_tpqr(z.tpqr.p, z.tpqr.q, z.tpqr.r);
    auto ns = lattice::parse_lattice_spec(z.ns);
    auto tr = lattice::parse_lattice_spec(z.transcendental);
    e.discriminant = abs(t.invariants().determinant);
    e.total_rank = t.rank() + tr.rank();
    e.ns_match = lattice::invariants_match(t, ns);
    e.transcendental_match = lattice::invariants_match(vanishing_lattice(table_data(z.singularity)), tr);
    const auto &ti = t.invariants(), &ri = tr.invariants();
    bool k3 = e.total_rank == 22 && ti.positive + ri.positive == 3 && ti.negative + ri.negative == 19 &&
              abs(ri.determinant) == e.discriminant;
    if (!e.ns_match || !e.transcendental_match || !k3)
      fail(ErrorCode::CheckFailed, "Z^" + std::to_string(z.k) + ": lattice invariants do not match");
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<long>& e12_printed_wp_weights() {
  static const std::vector<long> w = {3, 4, 6, 8, 9, 11, 12, 14, 15, 18, 21};
  return w;
}

std::vector<long> e12_naive_deformation_weights() {
  auto s = table_data("E12");
  auto w = xyz_weights(s);
  std::vector<long> out;
  for (const auto& e : jacobian_monomial_basis(s.equation)) {
    long d = s.base_change_order;
    for (std::size_t i = 0; i < 3; ++i) d -= w[i] * static_cast<long>(e[i]);
    if (d > 0) out.push_back(d);
  }
  long g = 0;
  for (long d : out) g = std::gcd(g, d);
  for (long& d : out) d /= g;
  std::sort(out.begin(), out.end());
  return out;
}

Report verify_all() {
  Report r;
  for (const auto& name : singularity_names()) {
    auto s = table_data(name);
    bool qh = check_quasi_homogeneous(s.equation, xyz_weights(s), s.base_change_order);
    r.checks.push_back({name + " quasi-homogeneous of degree " + std::to_string(s.base_change_order), qh, s.equation.to_string()});
    r.checks.push_back({name + " K3 condition 1+w_x+w_y+w_z=N", k3_tail_condition(s), ""});
    long mu = 0;
    bool mu_ok = true;
    std::string detail;
    try {
      mu = milnor_number(s);
      detail = "mu=" + std::to_string(mu);
    } catch (const Error& e) {
      mu_ok = false;
      detail = e.what();
    }
    r.checks.push_back({name + " Milnor number integral and equal to p'+q'+r'", mu_ok, detail});
    bool rank_ok = mu_ok && static_cast<long>(vanishing_lattice(s).rank()) == mu;
    r.checks.push_back({name + " rank of vanishing lattice = mu", rank_ok, s.gabrielov.to_string() + "+U"});
  }
  auto e12 = table_data("E12");
  auto basis = jacobian_monomial_basis(e12.equation);
  r.checks.push_back({"E12 Jacobian-ring basis size = Milnor number", static_cast<long>(basis.size()) == milnor_number(e12),
                      std::to_string(basis.size()) + " monomials"});
  r.checks.push_back({"E12 strange self-duality", e12.dolgachev == e12.gabrielov, e12.dolgachev.to_string()});
  for (const auto& z : z_locus_identifications())
    r.checks.push_back({"Z^" + std::to_string(z.k) + ": " + z.tpqr.to_string() + " ~ " + z.ns_model + ", complement " + z.transcendental_model,
                        z.ns_match && z.transcendental_match, "|disc|=" + to_string(z.discriminant)});

  std::string jac;
  for (const auto& g : jacobian_ideal(e12.equation)) jac += (jac.empty() ? "" : ", ") + g.to_string();
  r.notes.push_back("E12 Jacobian ideal from the equation: (" + jac + "), i.e. (x, y^2, z^6); the printed ideal reads (x, y^2, x^6)");
  std::string printed, naive;
  for (long w : e12_printed_wp_weights()) printed += (printed.empty() ? "" : ",") + std::to_string(w);
  for (long w : e12_naive_deformation_weights()) naive += (naive.empty() ? "" : ",") + std::to_string(w);
  r.notes.push_back("E12 weighted projective space as printed: WP(" + printed + "); naive N - wt(m) list: (" + naive +
                    "); normalization not derived");
  return r;
}

}  // namespace hkl::dolgachev
