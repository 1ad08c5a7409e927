#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stanpart/extnat.hpp"

namespace stanpart {

/// A point of the extended lattice: one ExtNat per variable. Faces are the
/// universal currency of multicomplexes, intervals, and the polarization
/// maps. The infinite part is always derived from the coordinates, never
/// stored separately.
struct Face {
  std::vector<ExtNat> coords;

  Face() = default;
  explicit Face(std::vector<ExtNat> c) : coords(std::move(c)) {}

  int n() const { return static_cast<int>(coords.size()); }
  const ExtNat& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  ExtNat& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  bool is_finite() const;

  friend bool operator==(const Face&, const Face&) = default;

  std::string str() const;
};

/// A monomial, stored as its (finite) exponent vector.
struct Monomial {
  std::vector<std::uint64_t> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<std::uint64_t> e) : exponents(std::move(e)) {}

  int n() const { return static_cast<int>(exponents.size()); }
  std::uint64_t operator[](int i) const { return exponents[static_cast<std::size_t>(i)]; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Face to_face() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// Componentwise comparison; infinity dominates every natural.
bool face_leq(const Face& a, const Face& b);

/// Indices of the infinite coordinates, ascending.
std::vector<int> infinite_part(const Face& a);

/// Strict lexicographic order on faces with infinity as the largest value.
/// This is the canonical emission order for face lists.
bool face_lex_less(const Face& a, const Face& b);

/// Canonical order for monomial lists: total degree ascending, ties broken
/// lexicographically with the earlier-variable-heavier monomial first.
bool monomial_canonical_less(const Monomial& a, const Monomial& b);

}  // namespace stanpart
