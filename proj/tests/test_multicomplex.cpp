#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "stanpart/corpus.hpp"
#include "stanpart/multicomplex.hpp"

using namespace stanpart;

namespace {

Face face(std::vector<long long> coords) {
  Face f;
  for (auto c : coords)
    f.coords.push_back(c < 0 ? ExtNat::infinity() : ExtNat(static_cast<std::uint64_t>(c)));
  return f;
}

MonomialIdeal ideal(int n, std::vector<std::vector<std::uint64_t>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal::make(RingContext::standard(n), ms);
}

const MonomialIdeal worked = ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 0, 2}});

// The ideal of the smallest multicomplex containing m: generated by the
// pure powers just above the finite coordinates.
MonomialIdeal ideal_of_max_face(const Face& m, const RingContext& ring) {
  std::vector<Monomial> gens;
  for (int i = 0; i < m.n(); ++i) {
    if (m[i].is_infinite()) continue;
    std::vector<std::uint64_t> e(static_cast<std::size_t>(m.n()), 0);
    e[static_cast<std::size_t>(i)] = m[i].value() + 1;
    gens.emplace_back(std::move(e));
  }
  if (gens.empty()) return MonomialIdeal::make(ring, {});
  return MonomialIdeal::make(ring, gens);
}

std::vector<std::uint64_t> test_window(const MonomialIdeal& I) {
  auto w = I.max_exponents();
  for (auto& v : w) v += 1;
  return w;
}

}  // namespace

TEST_CASE("irreducible decomposition of the running example") {
  const auto comps = irreducible_decomposition(worked);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].pure_powers == std::map<int, std::uint64_t>{{0, 1}, {2, 2}});
  CHECK(comps[1].pure_powers == std::map<int, std::uint64_t>{{0, 2}, {1, 1}, {2, 2}});
}

TEST_CASE("already irreducible ideals decompose to themselves") {
  const auto I = ideal(2, {{2, 0}, {0, 1}});
  const auto comps = irreducible_decomposition(I);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].pure_powers == std::map<int, std::uint64_t>{{0, 2}, {1, 1}});
}

TEST_CASE("decomposition of an edge ideal checked by box membership") {
  const auto I = ideal(2, {{1, 1}});
  const auto comps = irreducible_decomposition(I);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].pure_powers == std::map<int, std::uint64_t>{{0, 1}});
  CHECK(comps[1].pure_powers == std::map<int, std::uint64_t>{{1, 1}});
  // Intersection of the components agrees with I up to degree 6.
  for (const auto& p : oracle::box_points({6, 6})) {
    bool in_all = true;
    for (const auto& c : comps)
      if (!oracle::monomial_in_ideal(p, c.to_ideal(I.ring).gens)) in_all = false;
    CHECK(in_all == oracle::monomial_in_ideal(p, I.gens));
  }
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::make(RingContext::standard(2), {})),
                  std::invalid_argument);
}

TEST_CASE("maximal faces and the reconstruction oracle") {
  const auto maxf = maximal_faces(worked);
  CHECK(maxf == std::vector<Face>{face({0, -1, 1}), face({1, 0, 1})});
  // Each maximal face regenerates its component.
  const auto comps = irreducible_decomposition(worked);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto regen = ideal_of_max_face(maxf[i], worked.ring);
    CHECK(regen == comps[i].to_ideal(worked.ring));
  }
  CHECK(maximal_faces(ideal(2, {{1, 0}, {0, 1}})) == std::vector<Face>{face({0, 0})});
  CHECK(maximal_faces(MonomialIdeal::make(RingContext::standard(2), {})) ==
        std::vector<Face>{face({-1, -1})});
}

TEST_CASE("face membership in the running example") {
  const auto maxf = maximal_faces(worked);
  CHECK(member(maxf, face({0, 5, 1})));
  CHECK_FALSE(member(maxf, face({-1, -1, 0})));
  CHECK(member(maxf, face({0, 0, 0})));
  // Finite faces agree with the divisibility oracle on the window.
  for (const auto& p : oracle::box_points(test_window(worked))) {
    Face f;
    for (auto v : p) f.coords.emplace_back(v);
    CHECK(member(maxf, f) == !oracle::monomial_in_ideal(p, worked.gens));
  }
}

TEST_CASE("facets of the running example match the published list") {
  CHECK(facets(worked) == std::vector<Face>{face({0, -1, 0}), face({0, -1, 1}),
                                            face({1, 0, 0}), face({1, 0, 1})});
}

TEST_CASE("facets of small ideals against independent enumeration") {
  CHECK(facets(ideal(2, {{1, 0}, {0, 1}})) == std::vector<Face>{face({0, 0})});
  CHECK(facets(ideal(2, {{2, 0}, {1, 1}, {0, 2}})) ==
        std::vector<Face>{face({0, 0}), face({0, 1}), face({1, 0})});

  // Independent facet predicate over a window slightly beyond the bound.
  for (const auto& I : {worked, ideal(2, {{2, 0}, {1, 1}, {0, 2}}), ideal(2, {{1, 1}})}) {
    std::set<std::string> expected;
    const auto window = test_window(I);
    const auto all = oracle::window_faces(window);
    for (const auto& b : all) {
      if (!oracle::face_in_multicomplex(b, I)) continue;
      bool is_facet = true;
      for (const auto& m : all) {
        if (!oracle::face_in_multicomplex(m, I) || !face_leq(b, m)) continue;
        // m maximal within the window iff nothing strictly above it is in.
        bool maximal = true;
        for (const auto& c : all)
          if (oracle::face_in_multicomplex(c, I) && face_leq(m, c) && !(c == m)) {
            maximal = false;
            break;
          }
        if (maximal && infinite_part(m) != infinite_part(b)) {
          is_facet = false;
          break;
        }
      }
      if (is_facet) expected.insert(b.str());
    }
    std::set<std::string> got;
    for (const auto& f : facets(I)) got.insert(f.str());
    CHECK(got == expected);
  }
}

TEST_CASE("krull dimension") {
  CHECK(krull_dim(worked) == 1);
  CHECK(krull_dim(MonomialIdeal::make(RingContext::standard(3), {})) == 3);
  CHECK(krull_dim(ideal(2, {{1, 0}, {0, 1}})) == 0);
}

TEST_CASE("associated primes from the components") {
  CHECK(assoc_primes(worked) == std::vector<std::vector<int>>{{0, 2}, {0, 1, 2}});
  CHECK(assoc_primes(ideal(2, {{1, 1}})) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(assoc_primes(ideal(2, {{2, 0}, {0, 1}})) == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("ideal of a union of multicomplexes") {
  const auto views = [&] {
    std::vector<MulticomplexView> vs;
    for (const auto& m : maximal_faces(worked))
      vs.push_back(MulticomplexView::build(ideal_of_max_face(m, worked.ring)));
    return vs;
  }();
  CHECK(ideal_of_union(views) == worked);
  CHECK(ideal_of_union({MulticomplexView::build(worked)}) == worked);

  const auto a = MulticomplexView::build(ideal_of_max_face(face({0, -1}), RingContext::standard(2)));
  const auto b = MulticomplexView::build(ideal_of_max_face(face({-1, 0}), RingContext::standard(2)));
  CHECK(ideal_of_union({a, b}) == ideal(2, {{1, 1}}));
  CHECK_THROWS_AS(ideal_of_union({}), std::invalid_argument);
}

TEST_CASE("round trips over a random corpus") {
  CorpusOptions copts;
  copts.seed = 99;
  copts.count = 40;
  copts.max_n = 3;
  copts.max_exp = 3;
  copts.max_gens = 4;
  for (const auto& I : generate_corpus(copts)) {
    const auto maxf = maximal_faces(I);

    // Union of the per-maximal-face multicomplexes rebuilds the ideal.
    std::vector<MulticomplexView> views;
    for (const auto& m : maxf) views.push_back(MulticomplexView::build(ideal_of_max_face(m, I.ring)));
    CHECK(ideal_of_union(views) == I);

    // Sum of the component ideals cuts out the intersection of the
    // per-maximal-face multicomplexes, checked on the window.
    MonomialIdeal sum = MonomialIdeal::make(I.ring, {});
    for (const auto& v : views) sum = ideal_sum(sum, v.ideal);
    for (const auto& f : oracle::window_faces(test_window(I))) {
      bool in_all = true;
      for (const auto& v : views)
        if (!oracle::face_in_multicomplex(f, v.ideal)) in_all = false;
      CHECK(in_all == oracle::face_in_multicomplex(f, sum));
    }

    // Maximal faces form an antichain and are facets.
    const auto view = MulticomplexView::build(I);
    for (const auto& m1 : maxf)
      for (const auto& m2 : maxf)
        if (!(m1 == m2)) CHECK_FALSE(face_leq(m1, m2));
    for (const auto& m : maxf)
      CHECK(std::find(view.facet_list.begin(), view.facet_list.end(), m) !=
            view.facet_list.end());
    CHECK(view.facet_list.size() >= maxf.size());

    // Every facet lies below a maximal face and inside the finite bound.
    const auto r = I.max_exponents();
    for (const auto& f : view.facet_list) {
      CHECK(member(maxf, f));
      for (int i = 0; i < f.n(); ++i)
        if (f[i].is_finite()) CHECK(f[i].value() < r[static_cast<std::size_t>(i)]);
    }

    // Finite-face membership is exactly avoidance of the ideal.
    for (const auto& p : oracle::box_points(test_window(I))) {
      Face f;
      for (auto v : p) f.coords.emplace_back(v);
      CHECK(member(maxf, f) == !oracle::monomial_in_ideal(p, I.gens));
    }
  }
}
