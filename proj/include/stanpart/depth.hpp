#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "stanpart/homology.hpp"
#include "stanpart/ideal.hpp"

namespace stanpart {

/// Homological profile of a quotient by a monomial ideal, labeled with the
/// coefficient field it was computed over.
struct DepthReport {
  int depth = 0;
  int projective_dimension = 0;
  int dim = 0;
  bool cohen_macaulay = false;
  std::uint32_t field_char = 0;
};

/// Componentwise maxima of the nonempty generator subsets, deduplicated and
/// canonically ordered: the only multidegrees where the ideal can have
/// nonzero Betti numbers.
std::vector<Monomial> lcm_degrees(const MonomialIdeal& I);

/// The simplicial complex at multidegree a whose faces are the squarefree
/// vectors t <= supp(a) with x^(a-t) in I. Always a union of full simplices,
/// one per generator dividing x^a, so the facets are the maximal such
/// vertex sets. Requires x^a in I.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& a);

/// Total Betti numbers of the ideal: beta_i summed over the lcm degrees,
/// zero entries omitted. Per degree the complex is a union of simplices;
/// its homology is computed on the nerve of that cover, which has one
/// vertex per covering simplex and identical homology.
std::map<int, std::size_t> betti_total(const MonomialIdeal& I, const FieldSpec& field);

/// Depth, projective dimension, Krull dimension and the Cohen-Macaulay flag
/// of the quotient, all exact over the chosen field.
DepthReport depth_report(const MonomialIdeal& I, const FieldSpec& field = {});

}  // namespace stanpart
