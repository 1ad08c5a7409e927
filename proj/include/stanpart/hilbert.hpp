#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stanpart/ideal.hpp"
#include "stanpart/interval.hpp"

namespace stanpart {

inline constexpr std::size_t kSeriesLengthCap = std::size_t{1} << 20;

/// An exact rational generating function: integer polynomial numerator over
/// (1-t)^denom_power. Canonical form strips trailing zero coefficients and
/// cancels (1-t) factors while the denominator power is positive.
struct RationalSeries {
  std::vector<long long> numerator;  // numerator[d] is the t^d coefficient
  int denom_power = 0;

  RationalSeries() = default;
  RationalSeries(std::vector<long long> num, int e);

  bool is_zero() const { return numerator.empty(); }

  RationalSeries operator+(const RationalSeries& o) const;

  /// First `count` coefficients of the power-series expansion.
  std::vector<long long> expand(std::size_t count) const;

  std::string str() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

/// Exact equality as rational functions (cross-multiplied).
bool series_equal(const RationalSeries& x, const RationalSeries& y);

/// Hilbert series of the quotient by inclusion-exclusion over generator
/// subsets; independent of any decomposition or partition machinery.
RationalSeries hilbert_series(const MonomialIdeal& I);

/// Generating function of the finite faces of an interval by total degree.
/// Requires a finite lower endpoint.
RationalSeries interval_series(const Interval& iv);

/// Whether series_p equals series / (1-t)^steps, the shape the polarized
/// quotient's series must take.
bool polarization_identity_holds(const RationalSeries& series_p, const RationalSeries& series,
                                 int steps);

}  // namespace stanpart
