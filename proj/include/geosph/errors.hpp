#pragma once

#include <stdexcept>
#include <string>

namespace geosph {

/// Invalid configuration value or key. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite field, negative density or collapsed cell. Maps to exit code 3.
class NumericalAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written. Maps to exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int config = 2;
inline constexpr int numerical = 3;
inline constexpr int io = 4;
}  // namespace exit_code

}  // namespace geosph
