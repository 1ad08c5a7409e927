#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stanpart/corpus.hpp"
#include "stanpart/hilbert.hpp"
#include "stanpart/partition.hpp"
#include "stanpart/polarize.hpp"

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

}  // namespace

TEST_CASE("canonical form cancels the denominator") {
  const RationalSeries s({1, 0, -1}, 2);  // (1-t^2)/(1-t)^2
  CHECK(s.numerator == std::vector<long long>{1, 1});
  CHECK(s.denom_power == 1);
  CHECK(s.str() == "(1 + t)/(1-t)");

  const RationalSeries zero({0, 0}, 3);
  CHECK(zero.is_zero());
  CHECK(zero.denom_power == 0);

  // No cancellation once the denominator is gone.
  const RationalSeries poly({1, -1}, 0);
  CHECK(poly.numerator == std::vector<long long>{1, -1});
}

TEST_CASE("series equality is cross-multiplied") {
  CHECK(series_equal(RationalSeries({1, 0, -1}, 2), RationalSeries({1, 1}, 1)));
  CHECK_FALSE(series_equal(RationalSeries({1}, 1), RationalSeries({1}, 2)));
  CHECK(series_equal(RationalSeries({}, 0), RationalSeries({0}, 5)));
}

TEST_CASE("hilbert series of named ideals") {
  CHECK(hilbert_series(MonomialIdeal::make(RingContext::standard(2), {})) ==
        RationalSeries({1}, 2));
  CHECK(hilbert_series(ideal(2, {{1, 1}})) == RationalSeries({1, 1}, 1));
  CHECK(series_equal(hilbert_series(worked), RationalSeries({1, 0, -3, 1, 2, -1}, 3)));
}

TEST_CASE("series coefficients count monomials outside the ideal") {
  CorpusOptions copts;
  copts.seed = 31;
  copts.count = 25;
  for (const auto& I : generate_corpus(copts)) {
    const auto coeffs = hilbert_series(I).expand(10);
    for (std::uint64_t d = 0; d < 10; ++d)
      CHECK(static_cast<std::uint64_t>(coeffs[d]) == oracle::count_outside_per_degree(I, d));
  }
  const auto coeffs = hilbert_series(worked).expand(6);
  CHECK(coeffs == std::vector<long long>{1, 3, 3, 2, 2, 2});
}

TEST_CASE("interval series") {
  CHECK(interval_series({face({0, 0}), face({0, -1})}) == RationalSeries({1}, 1));
  // Finite span times a free coordinate, shifted by the base degree.
  CHECK(interval_series({face({2, 5}), face({4, -1})}) ==
        RationalSeries({0, 0, 0, 0, 0, 0, 0, 1, 1, 1}, 1));
  CHECK(interval_series({face({1, 0, 1}), face({1, 0, 1})}) == RationalSeries({0, 0, 1}, 0));
  CHECK_THROWS_AS(interval_series({face({0, -1}), face({0, -1})}), std::invalid_argument);
}

TEST_CASE("interval series sums over stanley splits") {
  oracle::Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto iv = oracle::random_interval(rng, 1 + static_cast<int>(rng.below(4)), 3);
    RationalSeries sum;
    for (const auto& piece : split_to_stanley(iv)) sum = sum + interval_series(piece);
    CHECK(series_equal(sum, interval_series(iv)));
  }
}

TEST_CASE("worked example partition certifies coverage") {
  RationalSeries sum;
  sum = sum + interval_series({face({0, 0, 0}), face({0, -1, 0})});
  sum = sum + interval_series({face({0, 0, 1}), face({0, -1, 1})});
  sum = sum + interval_series({face({1, 0, 0}), face({1, 0, 0})});
  sum = sum + interval_series({face({1, 0, 1}), face({1, 0, 1})});
  CHECK(series_equal(sum, hilbert_series(worked)));
}

TEST_CASE("polarization shifts the series by the step count") {
  // Squarefree: renaming only.
  {
    const auto I = ideal(2, {{1, 1}});
    auto [Ip, pm] = polarize_ideal(I);
    CHECK(pm.steps == 0);
    CHECK(polarization_identity_holds(hilbert_series(Ip), hilbert_series(I), pm.steps));
  }
  {
    auto [Ip, pm] = polarize_ideal(worked);
    CHECK(pm.steps == 2);
    CHECK(polarization_identity_holds(hilbert_series(Ip), hilbert_series(worked), pm.steps));
  }
  {
    const auto I = ideal(1, {{2}});
    auto [Ip, pm] = polarize_ideal(I);
    CHECK(pm.steps == 1);
    CHECK(hilbert_series(Ip) == RationalSeries({1, 1}, 1));
    CHECK(hilbert_series(I) == RationalSeries({1, 1}, 0));
    CHECK(polarization_identity_holds(hilbert_series(Ip), hilbert_series(I), pm.steps));
  }
}
