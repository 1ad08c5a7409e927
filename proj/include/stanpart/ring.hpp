#pragma once

#include <string>
#include <vector>

namespace stanpart {

/// Ambient polynomial ring: just a variable count and distinct names.
/// Coordinate i (0-based) addresses the i-th variable everywhere.
struct RingContext {
  std::vector<std::string> var_names;

  RingContext() = default;
  explicit RingContext(std::vector<std::string> names);

  /// Ring with variables x1..xn.
  static RingContext standard(int n);

  int n() const { return static_cast<int>(var_names.size()); }

  friend bool operator==(const RingContext&, const RingContext&) = default;
};

}  // namespace stanpart
