#include "toric.hpp"

#include <random>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace hkl::toric {

namespace {

void require_weights(const WeightVector& a) {
  if (a.size() < 2) fail(ErrorCode::InvalidArgument, "weight vector needs at least 2 entries");
  for (long w : a)
    if (w <= 0) fail(ErrorCode::InvalidArgument, "weights must be positive");
}

// Every generator coefficient non-negative?
bool in_cone(const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) return false;
  for (const auto& c : coeffs)
    if (c < 0) return false;
  return true;
}

}  // namespace

WeightVector parse_weights(std::string_view text) {
  WeightVector out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto caret = item.find('^');
    try {
      std::size_t used = 0;
      long w = std::stol(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret)) throw std::invalid_argument(item);
      long rep = 1;
      if (caret != std::string::npos) {
        std::string r = item.substr(caret + 1);
        rep = std::stol(r, &used);
        if (used != r.size() || rep < 1) throw std::invalid_argument(item);
      }
      out.insert(out.end(), static_cast<std::size_t>(rep), w);
    } catch (const std::logic_error&) {
      fail(ErrorCode::Parse, "bad weight entry '" + item + "'");
    }
  }
  require_weights(out);
  return out;
}

std::string weights_to_string(const WeightVector& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    if (!s.empty()) s += ",";
    s += std::to_string(a[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string WeightedFan::exceptional_divisor() const { return "WP(" + weights_to_string(weights) + ")"; }

std::string WeightedFan::to_json() const {
  nlohmann::json j;
  j["weights"] = weights;
  j["exceptional_divisor"] = exceptional_divisor();
  j["cones"] = nlohmann::json::array();
  for (const auto& c : cones) {
    nlohmann::json g = nlohmann::json::array();
    for (std::size_t r = 0; r < c.generators.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < c.generators.cols(); ++k) row.push_back(c.generators(r, k).get_si());
      g.push_back(row);
    }
    j["cones"].push_back({{"generators", g}, {"multiplicity", c.multiplicity.get_str()}});
  }
  return j.dump();
}

std::vector<Rational> cone_coordinates(const Cone& c, const std::vector<Rational>& x) {
  const std::size_t n = c.generators.cols();
  if (x.size() != n) fail(ErrorCode::InvalidArgument, "point has wrong dimension");
  if (c.inverse_transpose.rows() != n) return {};
  std::vector<Rational> y(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) y[r] += c.inverse_transpose(r, k) * x[k];
  return y;
}

WeightedFan build_fan(const WeightVector& a, std::uint64_t seed) {
  require_weights(a);
  const std::size_t n = a.size();
  WeightedFan fan;
  fan.weights = a;
  for (std::size_t i = 0; i < n; ++i) {
    Cone c;
    c.generators = IntMatrix(n, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) c.generators(row++, j) = 1;
    for (std::size_t j = 0; j < n; ++j) c.generators(n - 1, j) = a[j];
    c.multiplicity = abs(determinant(c.generators));
    // (G^T)^{-1} via rref of [G^T | I]
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) aug(r, k) = c.generators(k, r);
      aug(r, n + r) = 1;
    }
    auto red = rref(aug);
    c.inverse_transpose = RationalMatrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) c.inverse_transpose(r, k) = red(r, n + k);
    if (c.multiplicity != a[i])
      fail(ErrorCode::Validation, "cone " + std::to_string(i) + " has multiplicity " + c.multiplicity.get_str());
    fan.cones.push_back(std::move(c));
  }

  std::minstd_rand rng(static_cast<std::minstd_rand::result_type>(seed % 2147483646 + 1));
  std::uniform_int_distribution<long> coord(0, 60);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);

  // covering: every lattice point of the orthant lies in some cone
  for (int s = 0; s < 1000; ++s) {
    std::vector<Rational> x(n);
    bool nonzero = false;
    for (auto& v : x) {
      v = coord(rng);
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) x[0] = 1;
    bool covered = false;
    for (const auto& c : fan.cones) covered = covered || in_cone(cone_coordinates(c, x));
    if (!covered) fail(ErrorCode::Validation, "sampled orthant point lies in no cone");
    ++fan.sampled_points;
  }

  // face condition: a point of C_i and C_j has zero coefficient on e_j in C_i and on e_i in C_j
  auto coeff_of_e = [&](std::size_t cone, std::size_t j) { return j < cone ? j : j - 1; };
  for (int s = 0; s < 1000; ++s) {
    std::size_t i = index(rng), j = index(rng);
    if (i == j) j = (i + 1) % n;
    long t = 1 + coord(rng);
    std::vector<Rational> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = Rational(t * a[k]) + (k == i || k == j ? 0 : coord(rng));
    auto yi = cone_coordinates(fan.cones[i], x), yj = cone_coordinates(fan.cones[j], x);
    if (!in_cone(yi) || !in_cone(yj)) fail(ErrorCode::Validation, "boundary point not in both cones");
    if (yi[coeff_of_e(i, j)] != 0 || yj[coeff_of_e(j, i)] != 0)
      fail(ErrorCode::Validation, "cones " + std::to_string(i) + ", " + std::to_string(j) + " overlap beyond a common face");
    ++fan.sampled_boundary;
  }
  return fan;
}

std::string WPPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + hkl::to_string(coords[i]);
  return s + "] in WP(" + weights_to_string(weights) + ")";
}

WPPoint arc_limit(const WeightVector& a, long k, const std::vector<Rational>& phi0) {
  require_weights(a);
  if (k <= 0) fail(ErrorCode::InvalidArgument, "arc order k must be positive");
  if (phi0.size() != a.size()) fail(ErrorCode::InvalidArgument, "phi(0) has wrong length");
  bool nonzero = false;
  for (const auto& v : phi0) nonzero = nonzero || v != 0;
  if (!nonzero) fail(ErrorCode::InvalidArgument, "phi(0) = 0: the arc does not meet the exceptional divisor transversally");
  return {phi0, a};
}

WPPoint rescale(const WPPoint& x, const Rational& s, long k) {
  if (s == 0) fail(ErrorCode::InvalidArgument, "rescale by zero");
  WPPoint out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] *= hkl::pow(s, static_cast<unsigned>(k * x.weights[i]));
  return out;
}

bool wp_equiv(const WPPoint& x, const WPPoint& y) {
  if (x.weights != y.weights || x.coords.size() != y.coords.size() || x.coords.size() != x.weights.size())
    fail(ErrorCode::InvalidArgument, "wp_equiv: weight mismatch");
  std::vector<std::pair<Rational, long>> ratios;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if ((x.coords[i] == 0) != (y.coords[i] == 0)) return false;
    if (x.coords[i] != 0) ratios.emplace_back(x.coords[i] / y.coords[i], x.weights[i]);
  }
  if (ratios.empty()) fail(ErrorCode::InvalidArgument, "wp_equiv: the zero vector is not a point");
  for (std::size_t i = 0; i < ratios.size(); ++i)
    for (std::size_t j = i + 1; j < ratios.size(); ++j)
      if (hkl::pow(ratios[i].first, static_cast<unsigned>(ratios[j].second)) !=
          hkl::pow(ratios[j].first, static_cast<unsigned>(ratios[i].second)))
        return false;
  return true;
}

}  // namespace hkl::toric
