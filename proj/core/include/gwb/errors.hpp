#pragma once

#include <stdexcept>
#include <string>

namespace gwb {

// Raised when an input exceeds a documented size cap (n > 64, state space
// too large, ...). The CLI maps this to exit code 1.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gwb
