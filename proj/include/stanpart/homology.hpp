#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace stanpart {

/// Coefficient field for homology ranks: the rationals (p == 0) or a prime
/// field GF(p).
struct FieldSpec {
  std::uint32_t p = 0;
  bool rational() const { return p == 0; }
};

/// A finite simplicial complex given by its maximal faces as vertex
/// bitmasks. The downward closure is implicit. An empty facet list is the
/// void complex; the single facet 0 is the complex whose only face is the
/// empty face.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::uint64_t> facet_masks;

  static SimplicialComplex make(int vertex_count, std::vector<std::uint64_t> facets);
};

inline constexpr std::size_t kFaceCountCap = std::size_t{1} << 21;

/// Ranks of reduced homology by exact rank computation of the boundary
/// matrices over the chosen field. Dimension -1 is meaningful: the complex
/// {empty face} has rank 1 there; the void complex has no homology at all.
/// Zero ranks are omitted from the result.
std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& c,
                                                  const FieldSpec& field);

/// Same computation from an explicit list of all faces (as bitmasks,
/// including the empty face where present).
std::map<int, std::size_t> homology_ranks_of_faces(const std::vector<std::uint64_t>& faces,
                                                   const FieldSpec& field);

}  // namespace stanpart
