#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "stanpart/errors.hpp"

namespace stanpart {

/// Largest representable exponent. Values are mathematically arbitrary
/// naturals, but everything in this toolkit fits machine words; anything
/// above the cap is an error, never a wraparound.
inline constexpr std::uint64_t kExponentCap = std::uint64_t{1} << 32;

/// A natural number extended with a distinguished infinity. The infinity is
/// a real variant, not a sentinel value, so arithmetic stays total:
/// inf + k = inf, and inf compares above every natural.
class ExtNat {
public:
  ExtNat() : inf_(false), v_(0) {}
  ExtNat(std::uint64_t v) : inf_(false), v_(v) {  // NOLINT(google-explicit-constructor)
    if (v > kExponentCap)
      throw cap_exceeded("exponent " + std::to_string(v) + " exceeds cap");
  }

  static ExtNat infinity() {
    ExtNat x;
    x.inf_ = true;
    return x;
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  /// Finite value; calling this on infinity is a logic error.
  std::uint64_t value() const {
    if (inf_) throw std::invalid_argument("value() on infinite ExtNat");
    return v_;
  }

  ExtNat operator+(const ExtNat& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtNat(v_ + o.v_);
  }

  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    return a.v_ <=> b.v_;
  }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
  bool inf_;
  std::uint64_t v_;
};

inline ExtNat min(const ExtNat& a, const ExtNat& b) { return a <= b ? a : b; }
inline ExtNat max(const ExtNat& a, const ExtNat& b) { return a >= b ? a : b; }

}  // namespace stanpart
