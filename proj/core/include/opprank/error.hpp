#pragma once

#include <stdexcept>
#include <string>

namespace opprank {

/// Invalid user-facing input: bad root system name, malformed weight, bad config key.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request that the geometry or field code does not cover.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant (row-sum law, exact divisibility, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace opprank
