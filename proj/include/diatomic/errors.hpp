#pragma once

#include <stdexcept>
#include <string>

namespace diatomic {

// Thrown when an operation would materialize more entries than the configured
// cap. Exceeding the cap is an error, never a silent truncation.
class resource_limit_error : public std::length_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::length_error(what) {}
};

}  // namespace diatomic
