#include "niemeier.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "error.hpp"

namespace hkl::niemeier {

using lattice::Vec;

long enumerated_root_count(const Component& c) {
  static std::mutex mu;
  static std::map<Component, long> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(c); it != cache.end()) return it->second;
  }
  long n = static_cast<long>(lattice::vectors_of_norm(c.lattice(), -2).size());
  std::lock_guard<std::mutex> lock(mu);
  cache[c] = n;
  return n;
}

std::vector<NiemeierEntry> parse_catalog(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("Niemeier catalog: ") + e.what());
  }
  if (j.is_object() && j.contains("lattices")) j = j["lattices"];
  if (!j.is_array()) fail(ErrorCode::Parse, "Niemeier catalog must be a JSON array");
  std::vector<NiemeierEntry> out;
  std::set<std::string> names;
  for (const auto& row : j) {
    if (!row.is_object() || !row.contains("name") || !row.contains("components") || !row.contains("h"))
      fail(ErrorCode::Parse, "Niemeier catalog entry needs name, components and h");
    NiemeierEntry e;
    e.name = row["name"].get<std::string>();
    e.coxeter = row["h"].get<int>();
    std::vector<Component> comps;
    for (const auto& c : row["components"]) {
      auto lbl = RootLabel::parse(c.get<std::string>());
      for (const auto& x : lbl.display_components()) comps.push_back(x);
    }
    e.root_system = RootLabel(std::move(comps));
    if (!names.insert(e.name).second) fail(ErrorCode::Validation, "duplicate Niemeier entry " + e.name);
    if (e.root_system.empty()) {
      if (e.coxeter != 0) fail(ErrorCode::Validation, e.name + ": empty root system must have h = 0");
    } else {
      if (e.root_system.rank() != 24)
        fail(ErrorCode::Validation, e.name + ": root system rank " + std::to_string(e.root_system.rank()) + " != 24");
      long roots = 0;
      for (const auto& c : e.root_system.display_components()) roots += enumerated_root_count(c);
      if (roots != 24L * e.coxeter)
        fail(ErrorCode::Validation, e.name + ": root count " + std::to_string(roots) + " != 24h = " +
                                        std::to_string(24L * e.coxeter));
      // components of one Niemeier root system share the Coxeter number
      for (const auto& c : e.root_system.display_components()) {
        int h = c.family == 'A' ? c.index + 1 : c.family == 'D' ? 2 * c.index - 2 : c.index == 6 ? 12 : c.index == 7 ? 18 : 30;
        if (h != e.coxeter) fail(ErrorCode::Validation, e.name + ": component " + c.name() + " has Coxeter number " + std::to_string(h));
      }
    }
    out.push_back(std::move(e));
  }
  if (out.size() != 24) fail(ErrorCode::Validation, "Niemeier catalog has " + std::to_string(out.size()) + " entries, expected 24");
  return out;
}

std::vector<NiemeierEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open Niemeier catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

static bool can_host(const Component& c) {
  return (c.family == 'D' && c.index >= 7) || (c.family == 'E' && c.index == 8);
}

std::vector<D7Embedding> d7_embeddings(const std::vector<NiemeierEntry>& catalog) {
  std::vector<D7Embedding> out;
  for (const auto& e : catalog) {
    std::set<Component> seen;
    const auto& comps = e.root_system.display_components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (!can_host(comps[i]) || !seen.insert(comps[i]).second) continue;
      std::vector<Component> others;
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (j != i) others.push_back(comps[j]);
      out.push_back({e.name, comps[i], RootLabel(std::move(others))});
    }
  }
  return out;
}

namespace {

struct CoordinateModel {
  IntMatrix host;  // basis rows in ambient coordinates
  IntMatrix d7;    // D7 simple roots in the same coordinates
  long scale;      // ambient dot product = scale * (-lattice form)
};

// D_n in Z^n: e_i - e_{i+1} and e_{n-1} + e_n; D7 on the first seven coordinates.
IntMatrix d_basis(int n, int ambient) {
  IntMatrix b(n, ambient);
  for (int i = 0; i + 1 < n; ++i) {
    b(i, i) = 1;
    b(i, i + 1) = -1;
  }
  b(n - 1, n - 2) = 1;
  b(n - 1, n - 1) = 1;
  return b;
}

// E8 in doubled coordinates (Bourbaki simple roots times 2); D7 = alpha_2..alpha_8.
CoordinateModel e8_model() {
  IntMatrix b(8, 8);
  b(0, 0) = 1;
  for (int c = 1; c < 7; ++c) b(0, c) = -1;
  b(0, 7) = 1;
  b(1, 0) = 2;
  b(1, 1) = 2;
  for (int k = 2; k < 8; ++k) {  // alpha_{k+1} = e_{k} - e_{k-1} (1-based e)
    b(k, k - 1) = 2;
    b(k, k - 2) = -2;
  }
  IntMatrix d7(7, 8);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 8; ++c) d7(r, c) = b(r + 1, c);
  return {b, d7, 4};
}

CoordinateModel model_for(const Component& host) {
  if (host.family == 'E' && host.index == 8) return e8_model();
  if (host.family != 'D' || host.index < 7) fail(ErrorCode::InvalidArgument, host.name() + " cannot host D7");
  return {d_basis(host.index, host.index), d_basis(7, host.index), 1};
}

IntMatrix gram_of_rows(const IntMatrix& rows, long scale) {
  IntMatrix g = rows * rows.transpose();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (!mpz_divisible_ui_p(g(i, j).get_mpz_t(), scale)) fail(ErrorCode::Internal, "coordinate model not integral");
      g(i, j) = -g(i, j) / scale;
    }
  return g;
}

// Checks that each row of `vectors` is an integral combination of the rows of `basis` (square, invertible).
bool in_lattice(const IntMatrix& basis, const IntMatrix& vectors) {
  RationalMatrix aug(basis.cols(), basis.rows() + 1);
  for (std::size_t v = 0; v < vectors.rows(); ++v) {
    for (std::size_t r = 0; r < basis.cols(); ++r) {
      for (std::size_t c = 0; c < basis.rows(); ++c) aug(r, c) = basis(c, r);
      aug(r, basis.rows()) = vectors(v, r);
    }
    std::vector<std::size_t> piv;
    auto red = rref(aug, &piv);
    if (!piv.empty() && piv.back() == basis.rows()) return false;
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (!is_integral(red(i, basis.rows()))) return false;
  }
  return true;
}

RootLabel expected_host_complement(const Component& host) {
  if (host.family == 'E') return RootLabel({{'D', 1}});
  int m = host.index - 7;
  if (m == 0) return RootLabel();
  return RootLabel({{'D', m}});
}

}  // namespace

HostComplement complement_in_host(const Component& host) {
  static std::mutex mu;
  static std::map<Component, HostComplement> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(host); it != cache.end()) return it->second;
  }
  auto model = model_for(host);
  if (!in_lattice(model.host, model.d7)) fail(ErrorCode::Internal, "D7 model not inside " + host.name());
  IntegralLattice d7(gram_of_rows(model.d7, model.scale));
  if (!(lattice::classify_root_sublattice(d7).label == RootLabel({{'D', 7}})))
    fail(ErrorCode::Internal, "embedded sublattice is not D7");

  HostComplement hc;
  hc.label = expected_host_complement(host);
  IntMatrix pairing = model.host * model.d7.transpose();  // host_rank x 7
  IntMatrix kernel = integer_kernel(pairing.transpose());
  if (kernel.rows() == 0) {
    hc.lattice = IntegralLattice(IntMatrix(0, 0));
  } else {
    IntMatrix coords = kernel * model.host;
    hc.lattice = lattice::lll_reduced(IntegralLattice(gram_of_rows(coords, model.scale)));
  }
  if (static_cast<int>(hc.lattice.rank()) != hc.label.rank())
    fail(ErrorCode::Internal, "complement of D7 in " + host.name() + " has unexpected rank");
  if (hc.lattice.rank() > 0) {
    if (abs(hc.lattice.invariants().determinant) != 4)
      fail(ErrorCode::Internal, "complement of D7 in " + host.name() + " has |det| != 4");
    auto found = lattice::classify_root_sublattice(hc.lattice, true).label;
    if (!(found == hc.label))
      fail(ErrorCode::Internal, "complement of D7 in " + host.name() + " classified as " + found.to_string());
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(host, hc);
  return hc;
}

RootLabel complement_label(const D7Embedding& e) { return complement_in_host(e.host).label + e.others; }

IntegralLattice complement_lattice(const D7Embedding& e) {
  std::vector<IntegralLattice> parts;
  for (const auto& c : e.others.display_components()) parts.push_back(c.lattice());
  auto hc = complement_in_host(e.host);
  if (hc.lattice.rank() > 0) parts.push_back(hc.lattice);
  return lattice::direct_sum(parts);
}

const std::vector<DimensionRow>& dimension_table() {
  static const std::vector<DimensionRow> rows = [] {
    std::vector<DimensionRow> r;
    for (auto [s, d] : std::vector<std::pair<const char*, int>>{{"D17", 1}, {"D9+E8", 10}, {"D12+D5", 6},
                                                                 {"D3+E7^2", 4}, {"A15+D2", 3}, {"A11+E6", 1},
                                                                 {"D8^2+D1", 2}, {"D16+D1", 6}, {"E8^2+D1", 2}}) {
      auto lbl = RootLabel::parse(s);
      if (lbl.rank() != 17) fail(ErrorCode::Internal, std::string("dimension table label of rank != 17: ") + s);
      r.push_back({lbl, d});
    }
    return r;
  }();
  return rows;
}

int stratum_dimension(const RootLabel& label) {
  for (const auto& row : dimension_table())
    if (row.label == label) return row.dimension;
  fail(ErrorCode::InvalidArgument, "no boundary stratum labeled " + label.to_string());
}

std::optional<ChainRule> chain_rule_dimension(const D7Embedding& e) {
  if (e.host.family != 'D') return std::nullopt;
  ChainRule rule;
  rule.l = e.host.index;
  if (rule.l == 24) {
    rule.l_zero = true;
    rule.dimension = 1;
  } else {
    rule.dimension = (rule.l - 7) + 1;
  }
  return rule;
}

const std::vector<Type2Descriptor>& type2_descriptors() {
  static const std::vector<Type2Descriptor> d{
      {"II(1)", {8, 8}, {}, {}, RootLabel::parse("D1"), "two E~8 double points"},
      {"II(2)", {7, 7}, {}, {}, RootLabel::parse("A3"), "two E~7 double points and rational double points"},
      {"II(3)", {}, {1, 1}, {}, RootLabel::parse("D1"), "two skew lines, each an ordinary nodal curve with four pinch points"},
      {"II(4)", {6}, {}, {3}, RootLabel(), "plane and a cone over a nonsingular plane cubic"},
      {"II(5)", {8}, {}, {}, RootLabel::parse("D9"), "E~8 double point, no line through it"},
      {"II(6)", {}, {2}, {}, RootLabel::parse("D5"), "singular along a smooth conic with 4 pinch points"},
      {"II(7)", {}, {3}, {}, RootLabel::parse("D1"), "singular along a twisted cubic with 4 pinch points"},
      {"II(8)", {}, {}, {4}, RootLabel::parse("A1^2"), "singular along an elliptic normal quartic curve"},
  };
  return d;
}

RootLabel assemble_type2_label(const Type2Descriptor& d) {
  std::vector<Component> comps;
  for (int r : d.simple_elliptic) comps.push_back({'E', r});
  for (int deg : d.rational_curves) comps.push_back({'D', 4 * deg + 4});
  for (int deg : d.elliptic_curves) comps.push_back({'A', 4 * deg - 1});
  for (const auto& c : d.residual.display_components()) comps.push_back(c);
  RootLabel label(std::move(comps));
  if (label.rank() != 17)
    fail(ErrorCode::Validation, d.id + ": assembled label " + label.written_string() + " has rank " +
                                    std::to_string(label.rank()) + ", expected 17");
  return label;
}

MatchResult match_git_bb(const std::vector<NiemeierEntry>& catalog) {
  std::vector<RootLabel> bb;
  for (const auto& e : d7_embeddings(catalog)) {
    auto l = complement_label(e);
    bool dup = false;
    for (const auto& x : bb) dup = dup || x == l;
    if (!dup) bb.push_back(l);
  }
  MatchResult out;
  std::vector<bool> used(bb.size(), false);
  for (const auto& d : type2_descriptors()) {
    auto label = assemble_type2_label(d);
    bool found = false;
    for (std::size_t i = 0; i < bb.size(); ++i)
      if (!used[i] && bb[i] == label) {
        used[i] = true;
        found = true;
        break;
      }
    if (!found) fail(ErrorCode::CheckFailed, d.id + " label " + label.written_string() + " is not a boundary label");
    out.rows.push_back({d.id, label, stratum_dimension(label)});
  }
  for (std::size_t i = 0; i < bb.size(); ++i)
    if (!used[i]) out.unmatched.push_back(bb[i]);
  out.unmatched_tag = "absorbed in IV(8)/E_12 stratum";
  return out;
}

}  // namespace hkl::niemeier
