#pragma once

#include <string>

namespace hkl {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

}  // namespace hkl
