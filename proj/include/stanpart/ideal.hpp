#pragma once

#include <cstdint>
#include <vector>

#include "stanpart/face.hpp"
#include "stanpart/ring.hpp"

namespace stanpart {

/// Generator-count cap for the subset-enumerating operations (Hilbert
/// series inclusion-exclusion, lcm degrees).
inline constexpr std::size_t kGeneratorCap = 20;

/// Reduce a generating set to the divisibility-minimal sublist in canonical
/// order. Rejects the unit ideal (an all-zero exponent vector).
std::vector<Monomial> minimalize(const std::vector<Monomial>& gens);

/// A monomial ideal given by its minimal monomial generators. An empty
/// generator list is the zero ideal; the unit ideal is rejected outright.
struct MonomialIdeal {
  RingContext ring;
  std::vector<Monomial> gens;

  /// Canonical constructor: minimalizes, validates dimensions, rejects units.
  static MonomialIdeal make(RingContext ring, const std::vector<Monomial>& gens);

  bool is_zero() const { return gens.empty(); }

  /// Membership by divisibility against the minimal generators.
  bool contains(const Monomial& m) const;

  /// Componentwise maximum of the generator exponents; all zeros for the
  /// zero ideal. Coordinates of unused variables are 0.
  std::vector<std::uint64_t> max_exponents() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

/// Intersection of two ideals in the same ring (pairwise lcms, minimalized).
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Sum of two ideals (union of generators, minimalized).
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

std::string monomial_str(const Monomial& m, const RingContext& ring);
std::string ideal_str(const MonomialIdeal& I);

}  // namespace stanpart
