#include "root_label.hpp"

#include <algorithm>
#include <regex>

#include "error.hpp"

namespace hkl::lattice {

long Component::root_count() const {
  const long n = index;
  switch (family) {
    case 'A': return n * (n + 1);
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
  fail(ErrorCode::Internal, "bad component family");
}

IntegralLattice Component::lattice() const {
  switch (family) {
    case 'A': return make_A(index);
    case 'D': return make_D(index);
    case 'E': return make_E(index);
  }
  fail(ErrorCode::Internal, "bad component family");
}

namespace {

void validate(const Component& c) {
  bool ok = (c.family == 'A' && c.index >= 1) || (c.family == 'D' && c.index >= 1) ||
            (c.family == 'E' && c.index >= 6 && c.index <= 8);
  if (!ok) fail(ErrorCode::InvalidArgument, "invalid root component " + c.name());
}

bool display_order(const Component& a, const Component& b) {
  if (a.family != b.family) return a.family < b.family;
  return a.index > b.index;
}

}  // namespace

RootLabel::RootLabel(std::vector<Component> components) : display_(std::move(components)) {
  for (const auto& c : display_) validate(c);
}

RootLabel RootLabel::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::vector<Component> comps;
  if (s.empty() || s == "0") return RootLabel();
  static const std::regex tok(R"(\(?([ADE])(\d+)\)?(?:\^(\d+))?)");
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('+', start);
    if (end == std::string::npos) end = s.size();
    std::string piece = s.substr(start, end - start);
    std::smatch m;
    if (!std::regex_match(piece, m, tok)) fail(ErrorCode::Parse, "bad root label component '" + piece + "'");
    int mult = m[3].matched ? std::stoi(m[3]) : 1;
    Component c{m[1].str()[0], std::stoi(m[2])};
    validate(c);
    for (int k = 0; k < mult; ++k) comps.push_back(c);
    start = end + 1;
  }
  return RootLabel(std::move(comps));
}

std::vector<Component> RootLabel::canonical_components() const {
  std::vector<Component> out;
  for (const auto& c : display_) {
    if (c.family == 'D' && c.index == 2) {
      out.push_back({'A', 1});
      out.push_back({'A', 1});
    } else if (c.family == 'D' && c.index == 3) {
      out.push_back({'A', 3});
    } else {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), display_order);
  return out;
}

int RootLabel::rank() const {
  int r = 0;
  for (const auto& c : display_) r += c.rank();
  return r;
}

long RootLabel::root_count() const {
  long r = 0;
  for (const auto& c : display_) r += c.root_count();
  return r;
}

IntegralLattice RootLabel::lattice() const {
  std::vector<IntegralLattice> parts;
  for (const auto& c : display_) parts.push_back(c.lattice());
  return direct_sum(parts);
}

RootLabel RootLabel::operator+(const RootLabel& other) const {
  auto comps = display_;
  comps.insert(comps.end(), other.display_.begin(), other.display_.end());
  return RootLabel(std::move(comps));
}

namespace {

std::string join_in_order(const std::vector<Component>& comps) {
  if (comps.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < comps.size();) {
    std::size_t j = i;
    while (j < comps.size() && comps[j] == comps[i]) ++j;
    if (!out.empty()) out += "+";
    out += comps[i].name();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::string join_components(std::vector<Component> comps) {
  std::sort(comps.begin(), comps.end(), display_order);
  return join_in_order(comps);
}

std::string RootLabel::to_string() const { return join_components(display_); }
std::string RootLabel::canonical_string() const { return join_components(canonical_components()); }
std::string RootLabel::written_string() const { return join_in_order(display_); }

}  // namespace hkl::lattice
