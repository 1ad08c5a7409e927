// Multigraded Betti numbers of a monomial ideal by homology of its upper
// Koszul complexes, evaluated at the lcms of generator subsets. Each such
// complex is a union of at most one simplex per generator, so the per-degree
// homology is read off the nerve of that cover.

#include "stanpart/depth.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "stanpart/errors.hpp"
#include "stanpart/multicomplex.hpp"

namespace stanpart {

std::vector<Monomial> lcm_degrees(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("lcm_degrees of the zero ideal");
  const std::size_t s = I.gens.size();
  if (s > kGeneratorCap) throw cap_exceeded("generator count exceeds cap");
  std::set<std::vector<std::uint64_t>> degrees;
  const std::uint64_t subsets = std::uint64_t{1} << s;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    Monomial acc = I.gens[static_cast<std::size_t>(std::countr_zero(mask))];
    for (std::uint64_t rest = mask & (mask - 1); rest; rest &= rest - 1)
      acc = lcm(acc, I.gens[static_cast<std::size_t>(std::countr_zero(rest))]);
    degrees.insert(acc.exponents);
  }
  std::vector<Monomial> out;
  out.reserve(degrees.size());
  for (auto& e : degrees) out.emplace_back(e);
  std::sort(out.begin(), out.end(), monomial_canonical_less);
  return out;
}

namespace {

// Vertex sets of the covering simplices: for each generator dividing x^a,
// the coordinates where a strictly exceeds the generator.
std::vector<std::uint64_t> cover_sets(const MonomialIdeal& I, const Monomial& a) {
  std::vector<std::uint64_t> sets;
  for (const auto& g : I.gens) {
    if (!g.divides(a)) continue;
    std::uint64_t v = 0;
    for (int i = 0; i < a.n(); ++i)
      if (a[i] > g[i]) v |= std::uint64_t{1} << i;
    sets.push_back(v);
  }
  return sets;
}

// Homology ranks of a union of full simplices on the given vertex sets.
// If every set is empty the complex is {empty face}; otherwise the nerve of
// the cover (faces: subsets of covering sets with nonempty intersection)
// carries the same homology.
std::map<int, std::size_t> union_of_simplices_ranks(std::vector<std::uint64_t> sets,
                                                    const FieldSpec& field) {
  if (sets.empty()) throw std::invalid_argument("empty cover");
  std::vector<std::uint64_t> nonempty;
  for (auto s : sets)
    if (s) nonempty.push_back(s);
  if (nonempty.empty()) return {{-1, 1}};

  std::vector<std::uint64_t> nerve_faces{0};
  // DFS over index subsets; the face property is closed under shrinking.
  struct Frame {
    std::uint64_t face;
    std::uint64_t inter;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, ~std::uint64_t{0}, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    for (std::size_t j = f.next; j < nonempty.size(); ++j) {
      const std::uint64_t inter = f.inter & nonempty[j];
      if (!inter) continue;
      nerve_faces.push_back(f.face | (std::uint64_t{1} << j));
      if (nerve_faces.size() > kFaceCountCap) throw cap_exceeded("nerve face count exceeds cap");
      stack.push_back({f.face | (std::uint64_t{1} << j), inter, j + 1});
    }
  }
  auto ranks = homology_ranks_of_faces(nerve_faces, field);
  ranks.erase(-1);  // the complex has at least one vertex
  return ranks;
}

}  // namespace

SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& a) {
  if (a.n() != I.ring.n()) throw std::invalid_argument("dimension mismatch");
  if (!I.contains(a)) throw std::invalid_argument("monomial not in the ideal");
  auto sets = cover_sets(I, a);
  // Keep the maximal sets only.
  std::vector<std::uint64_t> facets;
  for (auto s : sets) {
    bool dominated = false;
    for (auto t : sets)
      if (s != t && (s & t) == s) {
        dominated = true;
        break;
      }
    if (!dominated && std::find(facets.begin(), facets.end(), s) == facets.end())
      facets.push_back(s);
  }
  return SimplicialComplex::make(I.ring.n(), std::move(facets));
}

std::map<int, std::size_t> betti_total(const MonomialIdeal& I, const FieldSpec& field) {
  if (I.is_zero()) throw std::invalid_argument("betti_total of the zero ideal");
  std::map<int, std::size_t> betti;
  for (const auto& a : lcm_degrees(I)) {
    const auto ranks = union_of_simplices_ranks(cover_sets(I, a), field);
    for (const auto& [dim, r] : ranks) betti[dim + 1] += r;
  }
  return betti;
}

DepthReport depth_report(const MonomialIdeal& I, const FieldSpec& field) {
  DepthReport rep;
  rep.field_char = field.p;
  const int n = I.ring.n();
  if (I.is_zero()) {
    rep.depth = n;
    rep.projective_dimension = 0;
    rep.dim = n;
    rep.cohen_macaulay = true;
    return rep;
  }
  const auto betti = betti_total(I, field);
  int max_index = 0;
  for (const auto& [i, b] : betti)
    if (b) max_index = std::max(max_index, i);
  rep.projective_dimension = max_index + 1;  // quotient, one above the ideal
  rep.depth = n - rep.projective_dimension;
  rep.dim = krull_dim(I);
  rep.cohen_macaulay = rep.depth == rep.dim;
  return rep;
}

}  // namespace stanpart
