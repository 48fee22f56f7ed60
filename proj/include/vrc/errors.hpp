#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vrc {

// Thrown when a materialized group or search result would exceed the
// configured element cap.
class SizeCapError : public std::runtime_error {
public:
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed rack files / JSON input.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

}  // namespace vrc
