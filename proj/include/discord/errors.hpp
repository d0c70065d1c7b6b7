#pragma once

#include <stdexcept>
#include <string>

namespace discord {

// Precondition failures signal caller bugs and carry enough context to locate them.
struct NotHermitian : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct NotNormalized : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Impurity placed on top of a chain spin: couplings diverge.
struct DegenerateGeometry : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computed quantity broke a contract that valid inputs guarantee
// (negative eigenvalue beyond tolerance, trace drift, ...).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad scenario configuration (CLI flags or config file).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace discord
