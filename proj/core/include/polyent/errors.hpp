#pragma once

#include <stdexcept>
#include <string>

namespace polyent {

/// Invalid user-supplied argument or configuration value.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A deliberate enumeration limit was exceeded. `required_cap` names the cap
/// that would have been needed for the request to succeed.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& what, unsigned long long required)
      : std::runtime_error(what), required_cap(required) {}
  unsigned long long required_cap;
};

/// A structural guarantee of the library failed (internal invariant violation).
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polyent
