#pragma once

#include <stdexcept>
#include <string>

namespace gpd {

// Violated precondition on a library operation (CLI exit code 3).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input exceeds a configured desk-scale bound (CLI exit code 4).
struct size_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency failure, e.g. a theorem-level assertion that can
// only fire if the implementation itself is wrong.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gpd
