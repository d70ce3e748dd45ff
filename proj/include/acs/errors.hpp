#ifndef ACS_ERRORS_HPP
#define ACS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acs {

// Exit-code mapping used by the CLI: usage/config -> 1, numeric -> 2, I/O -> 3.

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : UsageError {
  explicit ConfigError(const std::string& what) : UsageError(what) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularityError : NumericError {
  SingularityError(const std::string& what, double min_singular_value)
      : NumericError(what), min_singular(min_singular_value) {}
  double min_singular;
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace acs

#endif  // ACS_ERRORS_HPP
