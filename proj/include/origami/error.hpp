#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace origami {

// Malformed user text; position is a 0-based character offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A well-formed request that the library declines: disconnected surface,
// exhaustive-search bound exceeded.
class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two computations that must agree did not.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace origami
