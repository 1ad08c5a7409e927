#pragma once

#include <cstdint>
#include <vector>

#include "stanpart/depth.hpp"
#include "stanpart/multicomplex.hpp"
#include "stanpart/partition.hpp"

namespace stanpart {

/// Index bookkeeping for polarization: one block of r_i fresh variables per
/// source variable, r_i being the largest exponent of x_i among the
/// generators (at least 1, so variables dividing no generator survive the
/// renaming). Target variables are ordered blockwise, x{i}_1 .. x{i}_{r_i}.
struct PolarizationMap {
  RingContext source;
  std::vector<std::uint64_t> block_sizes;  // r_1 .. r_n
  RingContext target;
  int steps = 0;  // total new variables: sum r_i - n

  static PolarizationMap make(const MonomialIdeal& I);

  int target_n() const { return target.n(); }

  /// First target coordinate of source variable i's block.
  int block_start(int i) const;
};

/// Replace each power x_i^k by the product of the first k variables of
/// block i. Squarefree, degree preserving.
Monomial polarize_monomial(const Monomial& u, const PolarizationMap& pm);

/// Polarization of the whole ideal; generator count and minimality carry
/// over.
std::pair<MonomialIdeal, PolarizationMap> polarize_ideal(const MonomialIdeal& I);

/// The facet-side map: a face with every finite coordinate below its block
/// size maps to the 0/inf face that is 0 exactly at position b(i)+1 of
/// finite blocks. Adds `steps` infinite coordinates.
Face polarize_top_face(const Face& b, const PolarizationMap& pm);

/// The base-point map: a finite face with coordinates at most the block
/// sizes maps to the 0/1 face with a(i) ones at the front of block i.
/// Injective and degree preserving.
Face polarize_finite_face(const Face& a, const PolarizationMap& pm);

/// Whether the facet-side map restricts to a bijection from the facets of
/// the multicomplex onto the facets of the polarized multicomplex.
bool check_facet_bijection(const MonomialIdeal& I,
                           std::uint64_t candidate_cap = kFacetCandidateCap);

/// Whether the polarized quotient's Hilbert series equals the original over
/// (1-t)^steps, both sides computed independently.
bool polarization_identity_check(const MonomialIdeal& I);

struct TransferCertificate {
  MonomialIdeal ideal;
  MonomialIdeal polarized_ideal;
  int steps = 0;
  Partition input_partition;
  Partition output_partition;
  int input_depth = 0;
  int output_depth = 0;
  bool verified = false;
  std::uint32_t field_char = 0;
};

/// Transport a verified partition whose tops are exactly the facets to the
/// polarized multicomplex, re-certifying containment, disjointness,
/// coverage and niceness there. Verification failure is a hard error, never
/// a silently degraded certificate.
TransferCertificate polarize_partition(const Partition& p, const FieldSpec& field = {});

}  // namespace stanpart
