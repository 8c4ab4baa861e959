#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lattice.hpp"

namespace hkl::lattice {

struct Component {
  char family = 'A';  // 'A', 'D' or 'E'
  int index = 1;

  int rank() const { return index; }
  long root_count() const;
  std::string name() const { return std::string(1, family) + std::to_string(index); }
  IntegralLattice lattice() const;

  friend auto operator<=>(const Component&, const Component&) = default;
};

/// Multiset of ADE components. Keeps the components as written (so "D3" and
/// "D2" survive for display) and compares by the canonical form in which
/// D2 = A1+A1 and D3 = A3.
class RootLabel {
 public:
  RootLabel() = default;
  explicit RootLabel(std::vector<Component> components);
  static RootLabel parse(std::string_view text);

  const std::vector<Component>& display_components() const { return display_; }
  std::vector<Component> canonical_components() const;

  int rank() const;
  long root_count() const;
  bool empty() const { return display_.empty(); }
  IntegralLattice lattice() const;

  RootLabel operator+(const RootLabel& other) const;

  std::string to_string() const;            // display form, sorted
  std::string canonical_string() const;
  std::string written_string() const;       // display form in construction order

  friend bool operator==(const RootLabel& a, const RootLabel& b) {
    return a.canonical_components() == b.canonical_components();
  }

 private:
  std::vector<Component> display_;
};

std::string join_components(std::vector<Component> comps);

}  // namespace hkl::lattice
