#pragma once

#include <stdexcept>
#include <string>

namespace circles {

// A count was requested past the packing's enumeration bound. Surfacing this
// instead of silently undercounting is part of the counting contract.
class UnderEnumeratedError : public std::runtime_error {
 public:
  UnderEnumeratedError(double requested, double bound)
      : std::runtime_error("requested curvature bound " + std::to_string(requested) +
                           " exceeds enumeration bound " + std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}
  double requested() const { return requested_; }
  double bound() const { return bound_; }

 private:
  double requested_;
  double bound_;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySupportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& field, const std::string& what)
      : std::runtime_error("config: " + field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace circles
