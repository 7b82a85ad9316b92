#pragma once

#include <stdexcept>
#include <string>

namespace indideal {

// Malformed input text (edge lists, family specs). Messages carry line numbers
// where applicable.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter outside a function's documented domain.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Instance exceeds a documented resource cap.
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A consistency assertion failed; signals a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace indideal
