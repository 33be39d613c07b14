#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgt {

/// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (presentations, words, permutations, tables).
struct parse_error : error {
  parse_error(const std::string& msg, std::size_t position)
      : error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

/// A configured resource limit was hit before the computation finished.
/// Carries the enumeration statistics gathered so far, since an incomplete
/// run is still a measurement.
struct limit_error : error {
  limit_error(const std::string& msg, long long max_active_,
              long long total_defined_)
      : error(msg), max_active(max_active_), total_defined(total_defined_) {}
  long long max_active;
  long long total_defined;
};

}  // namespace cgt
