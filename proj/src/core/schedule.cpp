#include "schedule.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "error.hpp"
#include "git_quartics.hpp"
#include "niemeier.hpp"

namespace hkl::schedule {

namespace {

struct RawStratum {
  const char* id;
  StratumType type;
  const char* description;
  std::optional<Stabilizer> stabilizer;
  int printed_index;  // 0 if nothing printed
  std::array<long, 4> printed_weights;
  std::vector<std::string> closure;
  std::optional<int> dim;
  bool stable;
};

using S = Stabilizer;
using T = StratumType;
constexpr std::array<long, 4> kNone = {0, 0, 0, 0};

const std::vector<RawStratum>& raw_strata() {
  static const std::vector<RawStratum> rows = {
      {"II(1)", T::II, "two double points of type E~8", S::Lambda1, 0, kNone, {}, 2, false},
      {"II(2)", T::II, "two double points of type E~7 and some rational double points", S::Lambda2, 0, kNone, {}, 4, false},
      {"II(3)", T::II, "singular along two skew lines, each an ordinary nodal curve with four simple pinch points", S::Lambda3, 0,
       kNone, {}, 2, false},
      {"II(4)", T::II, "plane and a cone over a nonsingular cubic curve (triple point of type E~6)", S::Lambda4, 0, kNone, {}, 1,
       false},
      {"II(5)", T::II, "double point p of type E~8 and rational double points, no line through p", std::nullopt, 0, kNone, {},
       std::nullopt, true},
      {"II(6)", T::II, "singular along a smooth conic, ordinary nodal with 4 pinch points", std::nullopt, 0, kNone, {},
       std::nullopt, true},
      {"II(7)", T::II, "singular along a twisted cubic, ordinary nodal with 4 pinch points", std::nullopt, 0, kNone, {},
       std::nullopt, true},
      {"II(8)", T::II, "two quadric surfaces meeting transversally (singular along an elliptic quartic)", std::nullopt, 0, kNone,
       {}, std::nullopt, true},

      {"III(1)", T::III, "tetrahedron: four planes with normal crossings, the point zeta", S::MaxTorus, 0, kNone,
       {"II(1)", "II(2)", "II(3)", "II(4)"}, 0, false},
      {"III(2)", T::III, "two quadrics meeting in four lines, the curve tau", S::Torus2, 0, kNone, {"II(1)", "II(2)", "II(3)"}, 1,
       false},
      {"III(3)", T::III, "two quadrics meeting in two conics", S::Lambda2, 4, {1, 0, 0, -1}, {"II(8)"}, std::nullopt, false},
      {"III(4)", T::III, "singular along a rational cubic with two double pinch points, each on a line", S::Lambda1, 3,
       {3, 1, -1, -3}, {"II(7)"}, std::nullopt, false},
      {"III(5)", T::III, "singular along a conic with two double pinch points, each on a line", S::Lambda2, 4, {1, 0, 0, -1},
       {"II(6)"}, std::nullopt, false},
      {"III(6)", T::III, "strictly quasi-ordinary nodal conic, no line through a double pinch point", std::nullopt, 0, kNone,
       {"II(6)"}, std::nullopt, true},
      {"III(7)", T::III, "double point p of type T_{2,3,r}, no line through p", std::nullopt, 0, kNone, {"II(5)"}, std::nullopt,
       true},

      {"IV(0a)", T::IV, "double quadric, the point omega", S::SO4, 0, kNone, {"III(2)", "IV(1)"}, 0, false},
      {"IV(0b)", T::IV, "tangent developable of a twisted cubic, the point upsilon", S::SL2Sym3, 0, kNone, {"III(4)", "II(1)"}, 0,
       false},
      {"IV(1)", T::IV, "two quadric surfaces tangent along a nonsingular conic", S::SO3, 0, kNone, {"II(2)", "IV(2)"}, 1, false},
      {"IV(2)", T::IV, "double conic of cuspidal type, normalization with two rational double points", S::Lambda2, 4,
       {1, 0, 0, -1}, {"IV(3)"}, 2, false},
      {"IV(3)", T::IV, "nodal conic with a pinch point of type E_{4,inf}", std::nullopt, 0, kNone, {"IV(4)"}, 3, false},
      {"IV(4)", T::IV, "nodal conic with pinch points E_{3,inf} plus simple, or E_{4,inf}", std::nullopt, 0, kNone, {"IV(6)"}, 4,
       false},
      {"IV(5)", T::IV, "double point of type E_{3,r}, no line through it", std::nullopt, 0, kNone, {"III(7)", "IV(6)"},
       std::nullopt, false},
      {"IV(6)", T::IV, "double point of type E_14", std::nullopt, 0, kNone, {"IV(7)"}, 6, false},
      {"IV(7)", T::IV, "double point of type E_13", std::nullopt, 0, kNone, {"IV(8)"}, 7, false},
      {"IV(8)", T::IV, "double point of type E_12", std::nullopt, 0, kNone, {}, 8, false},
  };
  return rows;
}

std::string beta_string(const Rational& b) { return to_string(b); }

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::string weights_string(const std::array<long, 4>& w) {
  return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," + std::to_string(w[3]) + ")";
}

}  // namespace

const std::vector<Rational>& critical_betas() {
  static const std::vector<Rational> b = [] {
    std::vector<Rational> v = {0, frac(1, 9), frac(1, 7), frac(1, 6), frac(1, 5), frac(1, 4), frac(1, 3), frac(1, 2), 1};
    if (!std::is_sorted(v.begin(), v.end()) || std::find(v.begin(), v.end(), frac(1, 8)) != v.end())
      fail(ErrorCode::Internal, "critical beta list is malformed");
    return v;
  }();
  return b;
}

bool is_critical(const Rational& beta) {
  const auto& b = critical_betas();
  return std::find(b.begin(), b.end(), beta) != b.end();
}

const std::vector<TowerEntry>& z_tower() {
  static const std::vector<TowerEntry> z = {
      {'Z', 1, 1, "H_h + H_u = supp(boundary divisor)"},
      {'Z', 2, 2, "Δ^(2)"},
      {'Z', 3, 3, "Δ^(3)"},
      {'Z', 4, 4, "Δ^(4)"},
      {'Z', 5, 5, "Δ^(5)"},
      {'Z', 7, 7, "image of F(II_{2,10}+A2), T_{3,3,4}-polarized"},
      {'Z', 8, 8, "image of F(II_{2,10}+A1), T_{2,4,5}-polarized"},
      {'Z', 9, 9, "image of F(II_{2,10}), T_{2,3,7}-polarized"},
  };
  return z;
}

const std::vector<TowerEntry>& w_tower() {
  static const std::vector<TowerEntry> w = {
      {'W', 0, 0, "closure of IV(0a)"}, {'W', 1, 1, "closure of IV(1)"}, {'W', 2, 2, "closure of IV(2)"},
      {'W', 3, 3, "closure of IV(3)"},  {'W', 4, 4, "closure of IV(4)"}, {'W', 6, 6, "closure of IV(6)"},
      {'W', 7, 7, "closure of IV(7)"},  {'W', 8, 8, "closure of IV(8)"},
  };
  return w;
}

int flip_codimension(const Rational& beta) {
  if (!is_critical(beta) || beta == 0) fail(ErrorCode::InvalidArgument, "beta = " + beta_string(beta) + " is not a critical value in (0,1]");
  if (beta == 1) return 1;
  long m = beta.get_den().get_si();
  return (m == 6 || m == 7) ? static_cast<int>(m + 1) : static_cast<int>(m);
}

std::string type_name(StratumType t) {
  switch (t) {
    case T::I: return "I";
    case T::II: return "II";
    case T::III: return "III";
    case T::IV: return "IV";
  }
  return "?";
}

std::string stabilizer_name(Stabilizer s) {
  switch (s) {
    case S::Lambda1: return "lambda_1";
    case S::Lambda2: return "lambda_2";
    case S::Lambda3: return "lambda_3";
    case S::Lambda4: return "lambda_4";
    case S::Torus2: return "torus^2";
    case S::MaxTorus: return "max torus";
    case S::SO3: return "SO(3)";
    case S::SL2Sym3: return "SL2-Sym^3";
    case S::SO4: return "SO(4)";
  }
  return "?";
}

std::optional<std::array<long, 4>> stabilizer_weights(Stabilizer s) {
  const auto& ps = git::standard_ps();
  switch (s) {
    case S::Lambda1: return ps[0].w;
    case S::Lambda2: return ps[1].w;
    case S::Lambda3: return ps[2].w;
    case S::Lambda4: return ps[3].w;
    default: return std::nullopt;
  }
}

const std::vector<StratumRecord>& all_strata() {
  static const std::vector<StratumRecord> out = [] {
    std::vector<StratumRecord> v;
    for (const auto& r : raw_strata()) {
      StratumRecord s;
      s.id = r.id;
      s.type = r.type;
      s.description = r.description;
      s.stabilizer = r.stabilizer;
      if (r.printed_index) s.printed_stabilizer = "lambda_" + std::to_string(r.printed_index) + "=" + weights_string(r.printed_weights);
      s.closure_relations = r.closure;
      s.closure_dimension = r.dim;
      s.stable = r.stable;
      v.push_back(std::move(s));
    }
    return v;
  }();
  return out;
}

std::vector<StratumRecord> stratum_catalog(std::optional<StratumType> filter) {
  std::vector<StratumRecord> out;
  for (const auto& s : all_strata())
    if (!filter || s.type == *filter) out.push_back(s);
  return out;
}

const StratumRecord& stratum(std::string_view id) {
  for (const auto& s : all_strata())
    if (s.id == id) return s;
  fail(ErrorCode::InvalidArgument, "unknown stratum '" + std::string(id) + "'");
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {1, 1, "H_h", "IV(0a)", "double quadric"},
      {1, 1, "H_u", "IV(0b)", "tangent developable"},
      {2, frac(1, 2), "Δ^(2)", "IV(1)", "2 quadrics tangent along a conic"},
      {3, frac(1, 3), "Δ^(3)", "IV(2)", "double conic, cuspidal type"},
      {4, frac(1, 4), "Δ^(4)", "IV(3)", "E_{4,∞}-locus"},
      {5, frac(1, 5), "Δ^(5)", "IV(4)", "E_{3,0}"},
      {6, frac(1, 5), "Δ^(6)", "IV(5)", "E_{3,∞} and E_{3,r}"},
      {7, frac(1, 6), "unigonal in Δ^(6) (T_{3,3,4}-polarized K3)", "IV(6)", "E_14-locus"},
      {8, frac(1, 7), "unigonal in Δ^(7) (T_{2,4,5}-polarized K3)", "IV(6)", "E_13-locus"},
      {9, frac(1, 9), "unigonal in Δ^(8) (T_{2,3,7}-polarized K3)", "IV(8)", "E_12-locus"},
  };
  return rows;
}

std::vector<Table1Row> flip_center(const Rational& beta) {
  if (!is_critical(beta) || beta == 0) fail(ErrorCode::InvalidArgument, "beta = " + beta_string(beta) + " is not a critical value in (0,1]");
  std::vector<Table1Row> out;
  for (const auto& r : table1())
    if (r.beta == beta) out.push_back(r);
  return out;
}

std::string table1_tsv() {
  std::string s = "codim\tbeta\tZ\tW\n";
  for (const auto& r : table1())
    s += std::to_string(r.codim) + "\t" + beta_string(r.beta) + "\t" + r.z_label + "\t" + r.w_id + ": " + r.w_description + "\n";
  return s;
}

std::string table1_json() {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : table1())
    j.push_back({{"codim", r.codim}, {"beta", beta_string(r.beta)}, {"Z", r.z_label}, {"W_id", r.w_id}, {"W", r.w_description}});
  return j.dump();
}

Report validate_towers() {
  Report rep;
  auto indices = [](const std::vector<TowerEntry>& t) {
    std::vector<int> v;
    for (const auto& e : t) v.push_back(e.index);
    return v;
  };
  auto zi = indices(z_tower()), wi = indices(w_tower());
  rep.checks.push_back({"Z-tower indices {1,2,3,4,5,7,8,9}, no Z^6", zi == std::vector<int>{1, 2, 3, 4, 5, 7, 8, 9},
                        "Z^" + join([&] {
                          std::vector<std::string> s;
                          for (int i : zi) s.push_back(std::to_string(i));
                          return s;
                        }(), ",Z^")});
  rep.checks.push_back({"W-tower indices {0,1,2,3,4,6,7,8}, no W_5", wi == std::vector<int>{0, 1, 2, 3, 4, 6, 7, 8},
                        "W_" + join([&] {
                          std::vector<std::string> s;
                          for (int i : wi) s.push_back(std::to_string(i));
                          return s;
                        }(), ",W_")});

  auto monotone = [](const std::vector<TowerEntry>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].codim_or_dim != t[i].index) return false;
      if (i && t[i].codim_or_dim <= t[i - 1].codim_or_dim) return false;
    }
    return true;
  };
  rep.checks.push_back({"Z-tower codimension strictly monotone", monotone(z_tower()), ""});
  rep.checks.push_back({"W-tower dimension strictly monotone", monotone(w_tower()), ""});

  std::set<int> ks;
  bool paired = true;
  std::string detail;
  for (const auto& b : critical_betas()) {
    if (b == 0) continue;
    int k = flip_codimension(b);
    bool z = std::count(zi.begin(), zi.end(), k) == 1;
    bool w = std::count(wi.begin(), wi.end(), k - 1) == 1;
    paired = paired && z && w && ks.insert(k).second;
    detail += (detail.empty() ? "" : " ") + beta_string(b) + ":Z^" + std::to_string(k) + "/W_" + std::to_string(k - 1);
  }
  paired = paired && ks == std::set<int>(zi.begin(), zi.end());
  rep.checks.push_back({"flip pairing beta -> Z^k -> W_{k-1} is a bijection onto both towers", paired, detail});
  rep.checks.push_back({"exceptional pairing: beta=1/6 -> Z^7, beta=1/7 -> Z^8",
                        flip_codimension(frac(1, 6)) == 7 && flip_codimension(frac(1, 7)) == 8, ""});

  bool gens = true;
  for (const auto& w : w_tower()) {
    std::string id = w.index == 0 ? "IV(0a)" : "IV(" + std::to_string(w.index) + ")";
    const auto& s = stratum(id);
    gens = gens && s.closure_dimension == w.index;
  }
  rep.checks.push_back({"each W_k is the closure of a catalogued IV stratum of dimension k", gens, ""});

  const auto& iv4 = stratum("IV(4)").closure_relations;
  bool exc = std::count(iv4.begin(), iv4.end(), "IV(6)") == 1 && std::count(iv4.begin(), iv4.end(), "IV(5)") == 0;
  rep.checks.push_back({"IV adjacency exception at k=4: IV(4) in closure of IV(6)", exc, join(iv4)});
  return rep;
}

Report validate_catalog() {
  Report rep;
  auto count = [](StratumType t) { return stratum_catalog(t).size(); };
  rep.checks.push_back({"Type II strata: 8", count(T::II) == 8, std::to_string(count(T::II))});
  rep.checks.push_back({"Type III strata: 7", count(T::III) == 7, std::to_string(count(T::III))});
  rep.checks.push_back({"Type IV strata: 10 (with IV(0a), IV(0b))", count(T::IV) == 10, std::to_string(count(T::IV))});

  bool sigma = true;
  for (int i = 1; i <= 8; ++i) {
    const auto& s = stratum("II(" + std::to_string(i) + ")");
    if (i <= 4)
      sigma = sigma && s.stabilizer == static_cast<Stabilizer>(i - 1) && !s.stable && s.closure_dimension;
    else
      sigma = sigma && !s.stabilizer && s.stable;
  }
  rep.checks.push_back({"sigma_i = closure of II(i) with stabilizer lambda_i (i <= 4); II(5)-II(8) stable", sigma, ""});

  const std::vector<std::pair<const char*, Stabilizer>> expected = {
      {"IV(0a)", S::SO4}, {"IV(0b)", S::SL2Sym3}, {"IV(1)", S::SO3}, {"III(1)", S::MaxTorus}, {"III(2)", S::Torus2}};
  bool stab = true;
  for (const auto& [id, st] : expected) stab = stab && stratum(id).stabilizer == st;
  rep.checks.push_back({"stabilizers: IV(0a) SO(4), IV(0b) SL2-Sym^3, IV(1) SO(3), III(1) max torus, III(2) torus^2", stab, ""});

  bool printed = true;
  for (const auto& r : raw_strata()) {
    if (!r.printed_index) continue;
    auto w = r.stabilizer ? stabilizer_weights(*r.stabilizer) : std::nullopt;
    printed = printed && w && *w == r.printed_weights;
    auto named = stabilizer_weights(static_cast<Stabilizer>(r.printed_index - 1));
    if (named != r.printed_weights)
      rep.notes.push_back(std::string(r.id) + ": printed label lambda_" + std::to_string(r.printed_index) + " but vector " +
                          weights_string(r.printed_weights) + " is " + stabilizer_name(*r.stabilizer) + "; resolved by the vector");
  }
  rep.checks.push_back({"printed 1-PS vectors agree with the resolved stabilizers", printed, ""});

  std::map<std::string, const StratumRecord*> by_id;
  for (const auto& s : all_strata()) by_id[s.id] = &s;
  bool refs = by_id.size() == all_strata().size(), dims = true;
  for (const auto& s : all_strata())
    for (const auto& c : s.closure_relations) {
      auto it = by_id.find(c);
      if (it == by_id.end() || c == s.id) {
        refs = false;
        continue;
      }
      if (s.closure_dimension && it->second->closure_dimension)
        dims = dims && *s.closure_dimension < *it->second->closure_dimension;
    }
  rep.checks.push_back({"closure relations reference catalogued ids", refs, ""});

  // acyclic: depth-first search with colors
  std::map<std::string, int> color;
  bool acyclic = true;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    color[id] = 1;
    auto it = by_id.find(id);
    if (it != by_id.end())
      for (const auto& c : it->second->closure_relations) {
        if (color[c] == 1) acyclic = false;
        if (color[c] == 0) visit(c);
      }
    color[id] = 2;
  };
  for (const auto& s : all_strata())
    if (color[s.id] == 0) visit(s.id);
  rep.checks.push_back({"closure relation is acyclic", acyclic && refs, ""});
  rep.checks.push_back({"closure dimensions strictly increase along the closure relation", dims, ""});

  bool adj = true;
  for (int k : {1, 2, 3, 5, 6, 7}) {
    const auto& c = stratum("IV(" + std::to_string(k) + ")").closure_relations;
    adj = adj && std::count(c.begin(), c.end(), "IV(" + std::to_string(k + 1) + ")") == 1;
  }
  rep.checks.push_back({"IV(k) in closure of IV(k+1) for k != 4", adj, ""});
  return rep;
}

Report validate_table1() {
  Report rep;
  const auto& t = table1();
  rep.checks.push_back({"Table 1 has 10 rows", t.size() == 10, std::to_string(t.size())});

  bool ids = true, betas = true;
  for (const auto& r : t) {
    ids = ids && std::any_of(all_strata().begin(), all_strata().end(),
                             [&](const StratumRecord& s) { return s.type == T::IV && s.id == r.w_id; });
    betas = betas && is_critical(r.beta) && r.beta != 0;
  }
  rep.checks.push_back({"every W-column id is a catalogued IV stratum", ids, ""});
  rep.checks.push_back({"every row beta is critical and nonzero", betas, ""});

  bool covered = true;
  for (const auto& b : critical_betas())
    if (b != 0) covered = covered && !flip_center(b).empty();
  rep.checks.push_back({"every nonzero critical beta has a row", covered, ""});

  const auto& z = z_tower();
  bool pair = true;
  for (const auto& r : t) {
    bool in_tower = std::any_of(z.begin(), z.end(), [&](const TowerEntry& e) { return e.index == r.codim; });
    if (!in_tower) {
      rep.notes.push_back("row codim " + std::to_string(r.codim) + " at beta=" + beta_string(r.beta) +
                          ": there is no Z^" + std::to_string(r.codim) + " and the pairing rule sends beta=" +
                          beta_string(r.beta) + " to Z^" + std::to_string(flip_codimension(r.beta)) + "; row kept as printed");
      continue;
    }
    pair = pair && flip_codimension(r.beta) == r.codim;
  }
  rep.checks.push_back({"rows with Z^codim in the tower agree with the flip pairing", pair, ""});

  for (const auto& r : t) {
    if (r.codim == 1) continue;
    int w = r.codim - 1;
    bool in_tower = std::any_of(w_tower().begin(), w_tower().end(), [&](const TowerEntry& e) { return e.index == w; });
    std::string expected = "IV(" + std::to_string(w) + ")";
    if (!in_tower)
      rep.notes.push_back("row codim " + std::to_string(r.codim) + ": W_" + std::to_string(w) + " is skipped; printed " + r.w_id);
    else if (r.w_id != expected)
      rep.notes.push_back("row codim " + std::to_string(r.codim) + ": printed " + r.w_id + " (" + r.w_description + "), W_" +
                          std::to_string(w) + " is the closure of " + expected + " (" + stratum(expected).description + ")");
  }
  return rep;
}

Check sigma_cross_check(std::uint64_t seed) {
  Check c{"sigma_i dimensions equal the II(1)-II(4) closure dimensions", true, ""};
  const auto& ps = git::standard_ps();
  for (int i = 0; i < 4; ++i) {
    int d = git::sigma_dimension(ps[i], seed).dimension;
    const auto& s = stratum("II(" + std::to_string(i + 1) + ")");
    c.pass = c.pass && s.closure_dimension == d;
    c.detail += (c.detail.empty() ? "" : ",") + std::to_string(d);
  }
  return c;
}

Check type2_cross_check(const std::vector<niemeier::NiemeierEntry>& catalog) {
  auto m = niemeier::match_git_bb(catalog);
  auto ii = stratum_catalog(T::II);
  bool ids = m.rows.size() == ii.size();
  for (std::size_t i = 0; ids && i < ii.size(); ++i) ids = m.rows[i].git_id == ii[i].id;
  std::size_t labels = m.rows.size() + m.unmatched.size();
  bool d17 = m.unmatched.size() == 1 && m.unmatched[0] == lattice::RootLabel::parse("D17");
  std::string odd;
  for (const auto& u : m.unmatched) odd += (odd.empty() ? "" : ",") + u.to_string();
  return {"Type II strata 8, boundary labels 9, unmatched = {D17}", ids && ii.size() == 8 && labels == 9 && d17,
          std::to_string(ii.size()) + " strata, " + std::to_string(labels) + " labels, unmatched " + odd};
}

}  // namespace hkl::schedule
