#pragma once

#include <stdexcept>
#include <string>

namespace stanpart {

/// Input could not be parsed; message carries a position.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// A configurable resource cap (candidate space, box size, matrix size, ...)
/// was exceeded. Deliberate failure mode: predictable error beats silent
/// slowness.
class cap_exceeded : public std::runtime_error {
public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stanpart
