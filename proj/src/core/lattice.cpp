#include "lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <regex>

#include "error.hpp"

namespace hkl::lattice {

Integer Invariants::discriminant_order() const { return abs(determinant); }

std::string Invariants::discriminant_string() const {
  if (!discriminant) return "undefined";
  if (discriminant->empty()) return "0";
  std::string out;
  for (const auto& d : *discriminant) out += (out.empty() ? "Z/" : "+Z/") + d.get_str();
  return out;
}

IntegralLattice::IntegralLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) fail(ErrorCode::InvalidArgument, "Gram matrix must be square and symmetric");
  const std::size_t n = gram_.rows();
  inv_.rank = n;
  auto in = inertia(to_rational(gram_));
  inv_.positive = in.positive;
  inv_.negative = in.negative;
  inv_.zero = in.zero;
  inv_.determinant = determinant(gram_);
  for (std::size_t i = 0; i < n; ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) inv_.even = false;
  if (inv_.determinant != 0) {
    std::vector<Integer> divs;
    for (auto& d : smith_invariants(gram_))
      if (d != 1) divs.push_back(d);
    inv_.discriminant = divs;
  }
}

Integer IntegralLattice::inner(const std::vector<Integer>& u, const std::vector<Integer>& v) const {
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += u[i] * gram_(i, j) * v[j];
  }
  return s;
}

std::string IntegralLattice::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < gram_.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < gram_.cols(); ++c) row.push_back(gram_(r, c).get_si());
    rows.push_back(row);
  }
  return nlohmann::json{{"gram", rows}}.dump();
}

IntegralLattice IntegralLattice::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("lattice JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("gram") || !j["gram"].is_array())
    fail(ErrorCode::Parse, "lattice JSON must be an object with a \"gram\" array");
  const auto& g = j["gram"];
  IntMatrix m(g.size(), g.size());
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (!g[r].is_array() || g[r].size() != g.size()) fail(ErrorCode::Parse, "Gram matrix must be square");
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (!g[r][c].is_number_integer()) fail(ErrorCode::Parse, "Gram entries must be integers");
      m(r, c) = g[r][c].get<long>();
    }
  }
  return IntegralLattice(std::move(m));
}

IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  IntMatrix g(n, n);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g(off + i, off + j) = p.gram()(i, j);
    off += p.rank();
  }
  return IntegralLattice(std::move(g));
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) { return direct_sum({a, b}); }

namespace {

IntMatrix graph_gram(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
  return g;
}

}  // namespace

IntegralLattice make_A(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "A_n requires n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return IntegralLattice(graph_gram(n, edges));
}

IntegralLattice make_D(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "D_n requires n >= 1");
  if (n == 1) return make_scaled_rank1(-4);
  // chain 0..n-3, with n-2 and n-1 both attached to n-3
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int i = 0; i + 1 < n - 2; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) {
    edges.emplace_back(n - 3, n - 2);
    edges.emplace_back(n - 3, n - 1);
  }
  return IntegralLattice(graph_gram(n, edges));
}

IntegralLattice make_E(int n) {
  if (n < 6 || n > 8) fail(ErrorCode::InvalidArgument, "E_n requires n in {6,7,8}, got " + std::to_string(n));
  return make_tpqr(2, 3, n - 3);
}

IntegralLattice make_U() { return IntegralLattice(IntMatrix{{0, 1}, {1, 0}}); }

IntegralLattice make_scaled_rank1(long k) { return IntegralLattice(IntMatrix{{k}}); }

IntegralLattice make_tpqr(int p, int q, int r) {
  if (p < 1 || q < 1 || r < 1) fail(ErrorCode::InvalidArgument, "tpqr requires p, q, r >= 1");
  std::size_t n = static_cast<std::size_t>(p + q + r - 2);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t next = 1;
  for (int leg : {p, q, r}) {
    std::size_t prev = 0;
    for (int i = 0; i < leg - 1; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return IntegralLattice(graph_gram(n, edges));
}

IntegralLattice parse_lattice_spec(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorCode::Parse, "empty lattice spec");
  static const std::regex simple(R"(([ADE])(\d+))");
  static const std::regex tpqr(R"((?:tpqr|T)\((\d+),(\d+),(\d+)\))");
  static const std::regex scaled(R"(<(-?\d+)>)");
  std::vector<IntegralLattice> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && (s[i] == '(' || s[i] == '<')) ++depth;
    if (i < s.size() && (s[i] == ')' || s[i] == '>')) --depth;
    if (i < s.size() && !(s[i] == '+' && depth == 0)) continue;
    std::string tok = s.substr(start, i - start);
    start = i + 1;
    int mult = 1;
    std::smatch m;
    if (auto caret = tok.rfind('^'); caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      if (e.empty() || !std::all_of(e.begin(), e.end(), ::isdigit)) fail(ErrorCode::Parse, "bad exponent in '" + tok + "'");
      mult = std::stoi(e);
      tok = tok.substr(0, caret);
    }
    IntegralLattice part;
    if (tok == "U") {
      part = make_U();
    } else if (std::regex_match(tok, m, simple)) {
      int n = std::stoi(m[2]);
      char f = m[1].str()[0];
      part = f == 'A' ? make_A(n) : f == 'D' ? make_D(n) : make_E(n);
    } else if (std::regex_match(tok, m, tpqr)) {
      part = make_tpqr(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
    } else if (std::regex_match(tok, m, scaled)) {
      part = make_scaled_rank1(std::stol(m[1]));
    } else {
      fail(ErrorCode::Parse, "unrecognized lattice component '" + tok + "'");
    }
    for (int k = 0; k < mult; ++k) parts.push_back(part);
  }
  return direct_sum(parts);
}

bool invariants_match(const IntegralLattice& a, const IntegralLattice& b) {
  const auto &x = a.invariants(), &y = b.invariants();
  return x.rank == y.rank && x.positive == y.positive && x.negative == y.negative && x.zero == y.zero &&
         x.determinant == y.determinant && x.even == y.even && x.discriminant == y.discriminant;
}

}  // namespace hkl::lattice
