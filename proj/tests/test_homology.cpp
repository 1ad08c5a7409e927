#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "oracles.hpp"
#include "stanpart/corpus.hpp"
#include "stanpart/depth.hpp"
#include "stanpart/errors.hpp"
#include "stanpart/linalg.hpp"
#include "stanpart/multicomplex.hpp"
#include "stanpart/polarize.hpp"

using namespace stanpart;

namespace {

MonomialIdeal ideal(int n, std::vector<std::vector<std::uint64_t>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal::make(RingContext::standard(n), ms);
}

const MonomialIdeal worked = ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 0, 2}});

// Plain rational Gaussian elimination, the independent oracle for the
// fraction-free path.
std::size_t rank_gauss_mpq(const IntMatrix& m) {
  std::vector<mpq_class> a(m.rows * m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) a[i] = m.a[i];
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * m.cols + j]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pr = m.rows;
    for (std::size_t i = rank; i < m.rows; ++i)
      if (at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(at(rank, j), at(pr, j));
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (at(i, col) == 0) continue;
      const mpq_class f = at(i, col) / at(rank, col);
      for (std::size_t j = col; j < m.cols; ++j) at(i, j) -= f * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

SimplicialComplex complex_of(int vertices, std::vector<std::uint64_t> facets) {
  return SimplicialComplex::make(vertices, std::move(facets));
}

std::uint64_t verts(std::initializer_list<int> vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= std::uint64_t{1} << v;
  return m;
}

using Ranks = std::map<int, std::size_t>;

}  // namespace

TEST_CASE("fraction-free rank agrees with rational elimination") {
  oracle::Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    IntMatrix m(rows, cols);
    for (auto& v : m.a) v = static_cast<long>(rng.below(7)) - 3;
    CHECK(rank_rational(m) == rank_gauss_mpq(m));
  }
  IntMatrix too_big(kMatrixDimCap + 1, 1);
  CHECK_THROWS_AS(rank_rational(std::move(too_big)), cap_exceeded);
}

TEST_CASE("mod-p rank on small matrices") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  CHECK(rank_mod_p(m, 2) == 1);
  CHECK(rank_mod_p(m, 3) == 1);
  CHECK(rank_mod_p(m, 5) == 2);
  CHECK(rank_rational(m) == 2);
}

TEST_CASE("reduced homology conventions") {
  CHECK(reduced_homology_ranks(complex_of(0, {}), {}) == Ranks{});
  CHECK(reduced_homology_ranks(complex_of(0, {0}), {}) == Ranks{{-1, 1}});
  CHECK(reduced_homology_ranks(complex_of(2, {verts({0}), verts({1})}), {}) == Ranks{{0, 1}});
  // Hollow triangle: a circle.
  CHECK(reduced_homology_ranks(
            complex_of(3, {verts({0, 1}), verts({0, 2}), verts({1, 2})}), {}) == Ranks{{1, 1}});
  // Full triangle: contractible.
  CHECK(reduced_homology_ranks(complex_of(3, {verts({0, 1, 2})}), {}) == Ranks{});
  CHECK_THROWS_AS(complex_of(2, {verts({0, 1}), verts({0})}), std::invalid_argument);
}

TEST_CASE("homology of the projective plane depends on the field") {
  // Six-vertex triangulation; edges are complete, ten triangles.
  const std::vector<std::uint64_t> triangles{
      verts({0, 1, 2}), verts({0, 1, 3}), verts({0, 2, 4}), verts({0, 3, 5}), verts({0, 4, 5}),
      verts({1, 2, 5}), verts({1, 3, 4}), verts({1, 4, 5}), verts({2, 3, 4}), verts({2, 3, 5})};
  const auto rational = reduced_homology_ranks(complex_of(6, triangles), {});
  CHECK(rational == Ranks{});
  const auto char2 = reduced_homology_ranks(complex_of(6, triangles), {2});
  CHECK(char2 == Ranks{{1, 1}, {2, 1}});
  const auto char3 = reduced_homology_ranks(complex_of(6, triangles), {3});
  CHECK(char3 == Ranks{});
}

TEST_CASE("lcm degrees") {
  CHECK(lcm_degrees(ideal(2, {{2, 0}, {1, 1}})) ==
        std::vector<Monomial>{Monomial{{2, 0}}, Monomial{{1, 1}}, Monomial{{2, 1}}});
  CHECK(lcm_degrees(ideal(2, {{1, 1}})) == std::vector<Monomial>{Monomial{{1, 1}}});
  CHECK(lcm_degrees(worked).size() == 7);
}

TEST_CASE("upper Koszul complexes at small degrees") {
  // Complex with only the empty face at a minimal generator.
  const auto k1 = upper_koszul_complex(ideal(1, {{1}}), Monomial{{1}});
  CHECK(k1.facet_masks == std::vector<std::uint64_t>{0});

  // Two isolated points.
  const auto k2 = upper_koszul_complex(ideal(2, {{1, 0}, {0, 1}}), Monomial{{1, 1}});
  CHECK(k2.facet_masks == std::vector<std::uint64_t>{1, 2});

  const auto k3 = upper_koszul_complex(ideal(2, {{1, 1}}), Monomial{{1, 1}});
  CHECK(k3.facet_masks == std::vector<std::uint64_t>{0});

  CHECK_THROWS_AS(upper_koszul_complex(ideal(2, {{1, 1}}), Monomial{{1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("total Betti numbers of basic ideals") {
  CHECK(betti_total(ideal(2, {{1, 1}}), {}) == Ranks{{0, 1}});
  CHECK(betti_total(ideal(2, {{1, 0}, {0, 1}}), {}) == Ranks{{0, 2}, {1, 1}});
  const auto b = betti_total(worked, {});
  CHECK(b.at(0) == 3);
  CHECK(b.rbegin()->first == 2);
}

TEST_CASE("depth reports for the named examples") {
  const auto w = depth_report(worked);
  CHECK(w.depth == 0);
  CHECK(w.dim == 1);
  CHECK(w.projective_dimension == 3);
  CHECK_FALSE(w.cohen_macaulay);

  const auto m2 = depth_report(ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(m2.depth == 0);
  CHECK(m2.dim == 0);
  CHECK(m2.cohen_macaulay);

  const auto edge = depth_report(ideal(2, {{1, 1}}));
  CHECK(edge.depth == 1);
  CHECK(edge.dim == 1);
  CHECK(edge.cohen_macaulay);

  const auto zero = depth_report(MonomialIdeal::make(RingContext::standard(3), {}));
  CHECK(zero.depth == 3);
  CHECK(zero.dim == 3);
  CHECK(zero.cohen_macaulay);
}

TEST_CASE("pure power ideals are complete intersections") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
      for (std::uint64_t e = 1; e <= 3; ++e) {
        std::vector<std::vector<std::uint64_t>> gens;
        int size = 0;
        for (int i = 0; i < n; ++i) {
          if (!(subset >> i & 1)) continue;
          ++size;
          std::vector<std::uint64_t> g(static_cast<std::size_t>(n), 0);
          g[static_cast<std::size_t>(i)] = e;
          gens.push_back(std::move(g));
        }
        const auto rep = depth_report(ideal(n, gens));
        CHECK(rep.depth == n - size);
        CHECK(rep.cohen_macaulay);
      }
    }
  }
}

TEST_CASE("betti route agrees with direct boundary-matrix homology") {
  CorpusOptions copts;
  copts.seed = 17;
  copts.count = 25;
  copts.max_n = 3;
  copts.max_exp = 3;
  copts.max_gens = 4;
  for (const auto& I : generate_corpus(copts)) {
    Ranks direct;
    for (const auto& a : lcm_degrees(I)) {
      for (const auto& [dim, r] : reduced_homology_ranks(upper_koszul_complex(I, a), {}))
        direct[dim + 1] += r;
    }
    std::erase_if(direct, [](const auto& kv) { return kv.second == 0; });
    CHECK(betti_total(I, {}) == direct);
  }
}

TEST_CASE("betti route agrees with the direct path on polarized ideals") {
  CorpusOptions copts;
  copts.seed = 19;
  copts.count = 12;
  copts.max_n = 3;
  copts.max_exp = 3;
  copts.max_gens = 3;
  for (const auto& I : generate_corpus(copts)) {
    auto [Ip, pm] = polarize_ideal(I);
    if (Ip.ring.n() > 9) continue;  // keep the dense side affordable
    Ranks direct;
    for (const auto& a : lcm_degrees(Ip))
      for (const auto& [dim, r] : reduced_homology_ranks(upper_koszul_complex(Ip, a), {}))
        direct[dim + 1] += r;
    std::erase_if(direct, [](const auto& kv) { return kv.second == 0; });
    CHECK(betti_total(Ip, {}) == direct);
  }
}

TEST_CASE("depth shift under polarization holds over GF(2) as well") {
  CorpusOptions copts;
  copts.seed = 29;
  copts.count = 15;
  copts.max_n = 3;
  for (const auto& I : generate_corpus(copts)) {
    auto [Ip, pm] = polarize_ideal(I);
    const FieldSpec f2{2};
    CHECK(depth_report(Ip, f2).depth == depth_report(I, f2).depth + pm.steps);
  }
}

TEST_CASE("depth invariants over the corpus") {
  CorpusOptions copts;
  copts.seed = 23;
  copts.count = 30;
  for (const auto& I : generate_corpus(copts)) {
    const auto rep = depth_report(I);
    CHECK(rep.depth <= rep.dim);
    CHECK(rep.depth + rep.projective_dimension == I.ring.n());
    CHECK(betti_total(I, {}).at(0) == I.gens.size());
    for (const auto& p : assoc_primes(I))
      CHECK(rep.depth <= I.ring.n() - static_cast<int>(p.size()));
  }
}
