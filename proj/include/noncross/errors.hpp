#pragma once

#include <stdexcept>
#include <string>

namespace noncross {

// Input exceeds the configured solver capacity (distinct from bad input).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A construction step reached an inconsistent state (e.g. nonpositive
// threshold, a placement check that failed its exact verification).
struct ConstructionError : std::runtime_error {
  explicit ConstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace noncross
