#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "stanpart/ideal.hpp"

namespace stanpart {

/// An ideal generated by pure powers of some of the variables, as the
/// partial map variable index -> positive exponent.
struct IrreducibleComponent {
  std::map<int, std::uint64_t> pure_powers;

  MonomialIdeal to_ideal(const RingContext& ring) const;

  /// The largest face avoiding the component: exponent - 1 on the mapped
  /// variables, infinity elsewhere.
  Face max_face(int n) const;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

inline constexpr std::uint64_t kFacetCandidateCap = 10'000'000;

/// Irredundant decomposition of a proper nonzero ideal into irreducible
/// components, canonically ordered. The zero ideal is reported distinctly.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

/// Maximal faces of the multicomplex of I, one per irreducible component,
/// pairwise incomparable, in canonical face order. Zero ideal: the all-inf
/// face.
std::vector<Face> maximal_faces(const MonomialIdeal& I);

/// Face membership: below some maximal face.
bool member(const std::vector<Face>& maximal, const Face& a);

/// The facets: faces whose infinite part matches every maximal face above
/// them. Enumerates the finite candidate box (inf or 0..r_i-1 per
/// coordinate); throws cap_exceeded above `candidate_cap`.
std::vector<Face> facets(const MonomialIdeal& I,
                         std::uint64_t candidate_cap = kFacetCandidateCap);

/// Krull dimension of the quotient: the largest infinite-part size among
/// maximal faces (n for the zero ideal).
int krull_dim(const MonomialIdeal& I);

/// Variable-index sets of the component radicals, deduplicated, sorted by
/// size then lexicographically.
std::vector<std::vector<int>> assoc_primes(const MonomialIdeal& I);

/// Everything derived from one ideal, built once and then read-only.
struct MulticomplexView {
  MonomialIdeal ideal;
  std::vector<Face> maximal;
  std::vector<Face> facet_list;

  static MulticomplexView build(const MonomialIdeal& I,
                                std::uint64_t candidate_cap = kFacetCandidateCap);

  bool member(const Face& a) const { return stanpart::member(maximal, a); }
};

/// Ideal of a union of multicomplexes: intersection of the ideals.
MonomialIdeal ideal_of_union(const std::vector<MulticomplexView>& views);

}  // namespace stanpart
