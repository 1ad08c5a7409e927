#include "stanpart/homology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "stanpart/errors.hpp"
#include "stanpart/linalg.hpp"

namespace stanpart {

SimplicialComplex SimplicialComplex::make(int vertex_count, std::vector<std::uint64_t> facets) {
  if (vertex_count < 0 || vertex_count > 63)
    throw std::invalid_argument("vertex count out of range");
  const std::uint64_t all = vertex_count == 0 ? 0 : ((std::uint64_t{1} << vertex_count) - 1);
  for (auto f : facets)
    if (f & ~all) throw std::invalid_argument("facet uses vertices outside the complex");
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (i != j && (facets[i] & facets[j]) == facets[i])
        throw std::invalid_argument("facet list not an antichain");
  SimplicialComplex c;
  c.vertex_count = vertex_count;
  c.facet_masks = std::move(facets);
  return c;
}

namespace {

// All subsets of the facets, deduplicated.
std::vector<std::uint64_t> expand_closure(const SimplicialComplex& c) {
  std::unordered_set<std::uint64_t> seen;
  for (auto f : c.facet_masks) {
    // Standard subset-walk of a bitmask.
    std::uint64_t s = f;
    while (true) {
      seen.insert(s);
      if (seen.size() > kFaceCountCap) throw cap_exceeded("face count exceeds cap");
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::map<int, std::size_t> homology_ranks_of_faces(const std::vector<std::uint64_t>& faces,
                                                   const FieldSpec& field) {
  std::map<int, std::size_t> result;
  if (faces.empty()) return result;

  // Faces grouped by dimension (popcount - 1), each group sorted.
  int maxdim = -1;
  for (auto f : faces) maxdim = std::max(maxdim, std::popcount(f) - 1);
  std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(maxdim + 2));
  for (auto f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& v : by_dim) {
    std::sort(v.begin(), v.end());
    if (std::unique(v.begin(), v.end()) != v.end())
      throw std::invalid_argument("duplicate face");
  }

  auto index_of = [](const std::vector<std::uint64_t>& v, std::uint64_t f) {
    const auto it = std::lower_bound(v.begin(), v.end(), f);
    if (it == v.end() || *it != f) throw std::invalid_argument("face list not closed");
    return static_cast<std::size_t>(it - v.begin());
  };

  // rank of the boundary map from dimension k to k-1, for k = 0..maxdim.
  std::vector<std::size_t> bd_rank(static_cast<std::size_t>(maxdim + 2), 0);
  for (int k = 0; k <= maxdim; ++k) {
    const auto& src = by_dim[static_cast<std::size_t>(k + 1)];
    const auto& dst = by_dim[static_cast<std::size_t>(k)];
    if (src.empty() || dst.empty()) continue;
    IntMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const std::uint64_t f = src[col];
      int sign = 1;
      for (std::uint64_t rest = f; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        m.at(index_of(dst, f & ~(std::uint64_t{1} << v)), col) = sign;
        sign = -sign;
      }
    }
    bd_rank[static_cast<std::size_t>(k + 1)] =
        field.rational() ? rank_rational(std::move(m)) : rank_mod_p(m, field.p);
  }

  for (int k = -1; k <= maxdim; ++k) {
    const std::size_t fk = by_dim[static_cast<std::size_t>(k + 1)].size();
    const std::size_t out_rank = bd_rank[static_cast<std::size_t>(k + 1)];
    const std::size_t in_rank =
        k + 2 < static_cast<int>(bd_rank.size()) ? bd_rank[static_cast<std::size_t>(k + 2)] : 0;
    const std::size_t h = fk - out_rank - in_rank;
    if (h) result[k] = h;
  }
  return result;
}

std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& c,
                                                  const FieldSpec& field) {
  if (c.facet_masks.empty()) return {};
  return homology_ranks_of_faces(expand_closure(c), field);
}

}  // namespace stanpart
