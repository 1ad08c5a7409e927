#pragma once

#include <utility>

#include "stanpart/face.hpp"

namespace stanpart {

/// A box [lo, hi] of faces, lo <= hi componentwise. The Stanley set of the
/// interval is the infinite part of hi.
struct Interval {
  Face lo;
  Face hi;

  Interval() = default;
  Interval(Face lo_, Face hi_);

  friend bool operator==(const Interval&, const Interval&) = default;

  std::string str() const;
};

/// Projection of the interval to one coordinate.
std::pair<ExtNat, ExtNat> coordinate_range(const Interval& iv, int i);

}  // namespace stanpart
