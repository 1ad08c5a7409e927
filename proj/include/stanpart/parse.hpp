#pragma once

#include <optional>
#include <string>

#include "stanpart/ideal.hpp"

namespace stanpart {

/// Parse the inline generator grammar
///
///   ideal := mono ("," mono)*
///   mono  := term ("*" term)*
///   term  := var ("^" nat)?
///   var   := letter (letter|digit)*
///
/// With no ring given, variables are collected in first-appearance order;
/// with one, unknown variables are rejected. Throws parse_error with the
/// offending position, or invalid_argument for the unit ideal.
MonomialIdeal parse_ideal_expr(const std::string& text,
                               const std::optional<RingContext>& ring = std::nullopt);

}  // namespace stanpart
