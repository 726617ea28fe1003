#pragma once

#include <stdexcept>
#include <string>

namespace levmem {

/// Invalid or inconsistent user-supplied configuration.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure (integration breakdown, NaN state, non-convergence).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace levmem
